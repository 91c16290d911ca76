//! Naive point counts of plane cubics and hyperelliptic curves over `F_p`,
//! giving `P_1` for genus 1 and 2.

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest prime accepted by the enumeration.
pub const MAX_PRIME: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurveSpec {
    /// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
    Weierstrass { a: [i64; 5] },
    /// `y^2 = f(x)`, ascending coefficients, `deg f` in 3..=6.
    Hyperelliptic { f: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCount {
    pub count: u64,
    pub genus: u32,
    /// Ascending coefficients of `P_1`.
    pub p1: Vec<i64>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn md(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Quadratic character on `F_p`, `p` odd.
fn legendre(a: u64, p: u64) -> i64 {
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn eval_mod(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// `F_(p^2) = F_p(w)`, `w^2 = nr`.
#[derive(Clone, Copy)]
struct Fp2 {
    a: u64,
    b: u64,
}

impl Fp2 {
    fn mul(self, o: Fp2, nr: u64, p: u64) -> Fp2 {
        Fp2 {
            a: (self.a * o.a + self.b * o.b % p * nr) % p,
            b: (self.a * o.b + self.b * o.a) % p,
        }
    }

    fn add(self, c: u64, p: u64) -> Fp2 {
        Fp2 { a: (self.a + c) % p, b: self.b }
    }

    fn norm(self, nr: u64, p: u64) -> u64 {
        (self.a * self.a % p + p * p - self.b * self.b % p * nr % p) % p
    }
}

/// `gcd(f, f') = 1` over `F_p` with `deg f` preserved mod `p`.
fn squarefree_mod(f: &[u64], p: u64) -> bool {
    let trim = |mut v: Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let rem = |a: &[u64], b: &[u64]| {
        let mut r = a.to_vec();
        let lb = inv(*b.last().unwrap());
        while r.len() >= b.len() {
            let c = r.last().unwrap() * lb % p;
            let s = r.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                r[s + j] = (r[s + j] + p - c * bj % p) % p;
            }
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        r
    };
    let df = trim(f.iter().enumerate().skip(1).map(|(k, &c)| c * k as u64 % p).collect());
    let (mut a, mut b) = (trim(f.to_vec()), df);
    if b.is_empty() {
        return false;
    }
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn count_weierstrass(a: &[i64; 5], p: u64) -> Result<u64> {
    let [a1, a2, a3, a4, a6] = a.map(|x| x as i128);
    let b2 = a1 * a1 + 4 * a2;
    let b4 = 2 * a4 + a1 * a3;
    let b6 = a3 * a3 + 4 * a6;
    let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    let disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if disc.rem_euclid(p as i128) == 0 {
        return Err(Error::SingularCurve(format!("discriminant {disc} vanishes mod {p}")));
    }
    let m = |x: i128| x.rem_euclid(p as i128) as u64;
    let (a1, a2, a3, a4, a6) = (m(a1), m(a2), m(a3), m(a4), m(a6));
    let affine: u64 = (0..p)
        .into_par_iter()
        .map(|x| {
            let rhs = ((x * x % p + a2 * x % p) % p * x % p + a4 * x % p + a6) % p;
            (0..p)
                .filter(|&y| (y * y % p + a1 * x % p * y % p + a3 * y % p) % p == rhs)
                .count() as u64
        })
        .sum();
    Ok(affine + 1)
}

/// Points at infinity of the smooth model of `y^2 = f(x)` over a field where
/// the leading coefficient has quadratic character `lead_chi`.
fn infinity(deg: usize, lead_chi: i64) -> u64 {
    if deg % 2 == 1 {
        1
    } else {
        (1 + lead_chi) as u64
    }
}

fn count_hyperelliptic(f: &[u64], p: u64, over_p2: bool) -> u64 {
    let deg = f.len() - 1;
    let lead = f[deg];
    if !over_p2 {
        let affine: i64 = (0..p).into_par_iter().map(|x| 1 + legendre(eval_mod(f, x, p), p)).sum();
        return affine as u64 + infinity(deg, legendre(lead, p));
    }
    let nr = (2..p).find(|&a| legendre(a, p) == -1).expect("odd p has a nonresidue");
    let affine: i64 = (0..p)
        .into_par_iter()
        .map(|a| {
            (0..p)
                .map(|b| {
                    let x = Fp2 { a, b };
                    let v = f.iter().rev().fold(Fp2 { a: 0, b: 0 }, |acc, &c| acc.mul(x, nr, p).add(c, p));
                    1 + legendre(v.norm(nr, p), p)
                })
                .sum::<i64>()
        })
        .sum();
    // every element of F_p is a square in F_(p^2)
    affine as u64 + infinity(deg, 1)
}

/// Exact `#X(F_p)` by enumeration and `P_1` from the traces.
pub fn point_count_curve(spec: &CurveSpec, p: u64) -> Result<PointCount> {
    if !is_prime(p) || p > MAX_PRIME {
        return Err(Error::Domain(format!("point counting needs a prime p <= {MAX_PRIME}, got {p}")));
    }
    match spec {
        CurveSpec::Weierstrass { a } => {
            let count = count_weierstrass(a, p)?;
            let t = p as i64 + 1 - count as i64;
            Ok(PointCount {
                count,
                genus: 1,
                p1: vec![1, -t, p as i64],
            })
        }
        CurveSpec::Hyperelliptic { f } => {
            if p == 2 {
                return Err(Error::SingularCurve("y^2 = f(x) is never smooth in characteristic 2".into()));
            }
            let fm: Vec<u64> = f.iter().map(|&c| md(c, p)).collect();
            let deg = f.len().saturating_sub(1);
            if !(3..=6).contains(&deg) || fm[deg] == 0 || !squarefree_mod(&fm, p) {
                return Err(Error::SingularCurve(format!(
                    "y^2 = f(x) needs f squarefree mod {p} of degree 3..=6"
                )));
            }
            let genus = ((deg - 1) / 2) as u32;
            let n1 = count_hyperelliptic(&fm, p, false);
            let q = p as i64;
            let s1 = q + 1 - n1 as i64;
            let p1 = if genus == 1 {
                vec![1, -s1, q]
            } else {
                let n2 = count_hyperelliptic(&fm, p, true);
                let s2 = q * q + 1 - n2 as i64;
                let c2 = (s1 * s1 - s2) / 2;
                vec![1, -s1, c2, -q * s1, q * q]
            };
            Ok(PointCount { count: n1, genus, p1 })
        }
    }
}
