//! Class number, regulator and roots of unity of quadratic fields, computed
//! from binary quadratic forms and continued fractions alone.

use super::field::kronecker;
use crate::error::{Error, Result};
use crate::numeric::elementary::ln;
use crate::numeric::rational::is_squarefree;
use crate::numeric::BallReal;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use std::collections::HashSet;

/// Largest `|D|` accepted by the form enumeration.
pub const MAX_ABS_DISC: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticInvariants {
    pub h: u64,
    pub regulator: BallReal,
    pub w: u64,
    /// Fundamental unit `(x + y sqrt D)/2` for `D > 0`, with its norm.
    pub unit: Option<(BigInt, BigInt, i32)>,
}

pub fn is_fundamental(d: i64) -> bool {
    if d == 1 || d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Reduced positive definite forms `(a, b, c)`: `|b| <= a <= c`, `b >= 0` if `|b| = a` or `a = c`.
pub fn reduced_definite_forms(d: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if (b * b - d) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b - d) / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            out.push((a, b, c));
        }
        a += 1;
    }
    out
}

/// Reduced indefinite forms: `0 < b < sqrt D` and `sqrt D - b < 2|a| < sqrt D + b`.
fn reduced_indefinite_forms(d: i64) -> Vec<(i64, i64, i64)> {
    let s = d.sqrt();
    let mut out = Vec::new();
    for b in 1..=s {
        if (b * b - d) % 4 != 0 {
            continue;
        }
        let ac = (b * b - d) / 4; // negative
        let prod = -ac;
        for a in 1..=prod {
            if prod % a != 0 {
                continue;
            }
            // strict inequalities against the irrational sqrt D: compare squares
            let lo = 2 * a > s - b; // 2a > sqrt D - b  <=>  2a >= s - b + 1
            let hi = 2 * a <= s + b; // 2a < sqrt D + b  <=>  2a <= s + b
            if lo && hi {
                let c = ac / a;
                out.push((a, b, c));
                out.push((-a, b, -c));
            }
        }
    }
    out
}

/// One reduction step `(a, b, c) -> (c, b', c')` with `b' = -b mod 2c` in `(sqrt D - 2|c|, sqrt D)`.
fn rho_step(f: (i64, i64, i64), d: i64, s: i64) -> (i64, i64, i64) {
    let (_, b, c) = f;
    let m = 2 * c.abs();
    let b2 = s - (s + b).rem_euclid(m);
    (c, b2, (b2 * b2 - d) / (4 * c))
}

fn narrow_class_number(d: i64) -> u64 {
    let s = d.sqrt();
    let forms = reduced_indefinite_forms(d);
    let mut seen = HashSet::new();
    let mut cycles = 0;
    for &f in &forms {
        if seen.contains(&f) {
            continue;
        }
        cycles += 1;
        let mut g = f;
        loop {
            seen.insert(g);
            g = rho_step(g, d, s);
            if g == f {
                break;
            }
        }
    }
    cycles
}

/// Fundamental unit `(x + y sqrt D)/2 > 1` from the period of the continued
/// fraction of `(P0 + sqrt D)/2`, as the product of its complete quotients.
pub fn fundamental_unit(d: i64) -> Result<(BigInt, BigInt, i32)> {
    let s = d.sqrt();
    let (p0, q0) = if d % 4 == 0 { (0, 2) } else { (1, 2) };
    let step = |(p, q): (i64, i64)| {
        let a = Integer::div_floor(&(p + s), &q);
        let p2 = a * q - p;
        (p2, (d - p2 * p2) / q)
    };
    let first = step((p0, q0));
    let mut state = first;
    // product as (u + v sqrt D) / den, den a power-free common denominator
    let (mut u, mut v, mut den) = (BigInt::one(), BigInt::zero(), BigInt::one());
    for _ in 0..(4 * s + 16) {
        let (p, q) = state;
        // multiply by (p + sqrt D)/q
        let (bp, bq, bd) = (BigInt::from(p), BigInt::from(q), BigInt::from(d));
        let nu = &u * &bp + &v * &bd;
        let nv = &u + &v * &bp;
        u = nu;
        v = nv;
        den *= &bq;
        let g = u.gcd(&v).gcd(&den);
        u /= &g;
        v /= &g;
        den /= &g;
        state = step(state);
        if state == first {
            // normalize to (x + y sqrt D)/2
            let two = BigInt::from(2);
            if !((&two * &u) % &den).is_zero() || !((&two * &v) % &den).is_zero() {
                return Err(Error::Invariant(format!("period product for D = {d} is not integral")));
            }
            let x = &two * &u / &den;
            let y = &two * &v / &den;
            let norm4 = &x * &x - &bd * &y * &y;
            let norm = if norm4 == BigInt::from(4) {
                1
            } else if norm4 == BigInt::from(-4) {
                -1
            } else {
                return Err(Error::Invariant(format!("period product for D = {d} has norm {norm4}/4")));
            };
            return Ok((x, y, norm));
        }
    }
    Err(Error::Invariant(format!("continued fraction period for D = {d} not found")))
}

/// `(h, R, w)` for the quadratic field of fundamental discriminant `d`.
pub fn quadratic_invariants(d: i64, prec: u32) -> Result<QuadraticInvariants> {
    if d.unsigned_abs() > MAX_ABS_DISC {
        return Err(Error::Overflow(format!("|D| = {} exceeds {MAX_ABS_DISC}", d.unsigned_abs())));
    }
    if !is_fundamental(d) {
        return Err(Error::Domain(format!("{d} is not a fundamental discriminant")));
    }
    if d < 0 {
        let w = match d {
            -3 => 6,
            -4 => 4,
            _ => 2,
        };
        return Ok(QuadraticInvariants {
            h: reduced_definite_forms(d).len() as u64,
            regulator: BallReal::one(prec),
            w,
            unit: None,
        });
    }
    let (x, y, norm) = fundamental_unit(d)?;
    let wp = prec + 16;
    let eps = BallReal::from_int(x.clone(), wp)
        .add(&BallReal::from_int(y.clone(), wp).mul(&BallReal::from_int(d, wp).sqrt()?))
        .mul_2exp(-1);
    let regulator = ln(&eps)?.with_prec(prec);
    let hp = narrow_class_number(d);
    let h = if norm == -1 { hp } else { hp / 2 };
    Ok(QuadraticInvariants {
        h,
        regulator,
        w: 2,
        unit: Some((x, y, norm)),
    })
}

/// Class number from the analytic formula with a finite character sum, for
/// cross-checking the enumeration when `D < -4`: `h = -(1/|D|) sum a chi(a)`.
pub fn class_number_character_sum(d: i64) -> Option<i64> {
    if d >= -4 {
        return None;
    }
    let m = -d;
    let s: i64 = (1..m).map(|a| a * kronecker(d, a)).sum();
    Some(-s / m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_examples() {
        let q = quadratic_invariants(-4, 64).unwrap();
        assert_eq!((q.h, q.w), (1, 4));
        let q = quadratic_invariants(-23, 64).unwrap();
        assert_eq!((q.h, q.w), (3, 2));
        assert_eq!(quadratic_invariants(-3, 64).unwrap().w, 6);
        assert_eq!(quadratic_invariants(-84, 64).unwrap().h, 4);
    }

    #[test]
    fn enumeration_matches_character_sum() {
        for d in (-400..-4i64).filter(|&d| is_fundamental(d)) {
            let h = quadratic_invariants(d, 64).unwrap().h as i64;
            assert_eq!(Some(h), class_number_character_sum(d), "D = {d}");
        }
    }

    #[test]
    fn golden_ratio_unit() {
        let q = quadratic_invariants(5, 128).unwrap();
        assert_eq!(q.unit, Some((BigInt::from(1), BigInt::from(1), -1)));
        assert_eq!(q.h, 1);
        let r = "0.48121182505960344749775891342436842313518433438566051966101816884016";
        assert!(q.regulator.overlaps(&BallReal::parse_decimal(r, 128).unwrap()));
    }

    #[test]
    fn real_class_numbers() {
        // D: h, fundamental unit norm
        for (d, h, norm) in [(8, 1, -1), (12, 1, 1), (40, 2, -1), (60, 2, 1), (65, 2, -1), (136, 2, 1), (229, 3, -1), (316, 3, 1), (12, 1, 1)] {
            let q = quadratic_invariants(d, 64).unwrap();
            assert_eq!((q.h, q.unit.as_ref().unwrap().2), (h, norm), "D = {d}");
        }
        // sqrt 3: 2 + sqrt 3
        assert_eq!(fundamental_unit(12).unwrap(), (BigInt::from(4), BigInt::from(1), 1));
    }

    #[test]
    fn rejects_non_fundamental() {
        assert!(quadratic_invariants(-16, 64).is_err());
        assert!(quadratic_invariants(1, 64).is_err());
        assert!(matches!(quadratic_invariants(-2_000_000_003, 64), Err(Error::Overflow(_))));
    }
}
