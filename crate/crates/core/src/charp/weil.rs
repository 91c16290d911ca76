//! Weil polynomial data of a smooth projective variety over `F_q` and its zeta
//! function `Z(X, t) = prod_i P_i(t)^((-1)^(i+1))`.

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::numeric::rational::{int, pow_int};
use crate::numeric::ExactRational;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Relative tolerance of the numerical Riemann hypothesis check.
pub const RH_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct WeilPolySet {
    q: u64,
    dim: u32,
    polys: BTreeMap<u32, Poly>,
    /// Jordan block sizes of Frobenius per `(degree, eigenvalue)`.
    jordan: BTreeMap<(u32, BigInt), Vec<u32>>,
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Roots of a polynomial given by ascending `f64` coefficients, by Aberth iteration.
fn complex_roots(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let eval = |z: Complex64| {
        let (mut p, mut dp) = (Complex64::zero(), Complex64::zero());
        for a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let bound = 1.0 + c[..n].iter().fold(0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(0.5 * bound, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::one() - ratio * s);
            z[k] -= step;
            moved = moved.max(step.norm() / z[k].norm().max(1e-300));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

impl WeilPolySet {
    /// Validated set: normalization of `P_0` and `P_(2e)`, constant terms,
    /// Poincare duality (exactly), the Riemann hypothesis (numerically) and
    /// consistency of Jordan data with root multiplicities.
    pub fn new(
        q: u64,
        dim: u32,
        polys: BTreeMap<u32, Vec<BigInt>>,
        jordan: BTreeMap<(u32, BigInt), Vec<u32>>,
    ) -> Result<WeilPolySet> {
        if prime_power(q).is_none() {
            return Err(Error::Invariant(format!("q = {q} is not a prime power")));
        }
        let polys = polys.into_iter().map(|(i, c)| (i, Poly::from_ints(&c))).collect();
        let w = WeilPolySet {
            q,
            dim,
            polys,
            jordan,
        };
        w.validate()?;
        Ok(w)
    }

    /// Skips the Poincare duality and Riemann hypothesis checks, keeping the
    /// normalization and Jordan checks; for constructed eigenvalue models.
    pub fn synthetic(
        q: u64,
        dim: u32,
        polys: BTreeMap<u32, Vec<BigInt>>,
        jordan: BTreeMap<(u32, BigInt), Vec<u32>>,
    ) -> Result<WeilPolySet> {
        let polys = polys.into_iter().map(|(i, c)| (i, Poly::from_ints(&c))).collect();
        let w = WeilPolySet {
            q,
            dim,
            polys,
            jordan,
        };
        w.validate_shape()?;
        w.validate_jordan()?;
        Ok(w)
    }

    fn validate(&self) -> Result<()> {
        self.validate_shape()?;
        let e = self.dim;
        for i in 0..=2 * e {
            let dual = self.dual_poly(i);
            if dual != self.poly(2 * e - i) {
                return Err(Error::Invariant(format!(
                    "Poincare duality: P_{} = {} but q^{e}/alpha over P_{i} gives {dual}",
                    2 * e - i,
                    self.poly(2 * e - i)
                )));
            }
            let dev = self.rh_deviation(i);
            if dev > RH_TOLERANCE {
                return Err(Error::Invariant(format!(
                    "roots of P_{i} miss |alpha| = q^({i}/2) by relative {dev:e}"
                )));
            }
        }
        self.validate_jordan()
    }

    fn validate_shape(&self) -> Result<()> {
        let e = self.dim;
        if let Some(&i) = self.polys.keys().find(|&&i| i > 2 * e) {
            return Err(Error::Invariant(format!("P_{i} outside degrees 0..={}", 2 * e)));
        }
        for i in 0..=2 * e {
            if self.poly(i).coeff(0) != int(1) {
                return Err(Error::Invariant(format!("P_{i} must have constant term 1")));
            }
        }
        if self.poly(0) != Poly::linear(&int(1)) {
            return Err(Error::Invariant("P_0 must be 1 - t".into()));
        }
        if self.poly(2 * e) != Poly::linear(&self.qpow(i64::from(e))) {
            return Err(Error::Invariant(format!("P_{} must be 1 - q^{e} t", 2 * e)));
        }
        Ok(())
    }

    fn validate_jordan(&self) -> Result<()> {
        let e = self.dim;
        for ((i, lambda), sizes) in &self.jordan {
            if *i > 2 * e || sizes.contains(&0) {
                return Err(Error::Invariant(format!("bad Jordan data at degree {i}")));
            }
            let lam = ExactRational::from_integer(lambda.clone());
            let (m, _) = self.poly(*i).strip_linear(&lam);
            let total: u32 = sizes.iter().sum();
            if total != m {
                return Err(Error::Invariant(format!(
                    "Jordan blocks {sizes:?} for eigenvalue {lambda} on H^{i}, which has multiplicity {m}"
                )));
            }
        }
        Ok(())
    }

    /// `Spec F_q`.
    pub fn point(q: u64) -> Result<WeilPolySet> {
        WeilPolySet::new(q, 0, BTreeMap::from([(0, ints(&[1, -1]))]), BTreeMap::new())
    }

    pub fn projective_line(q: u64) -> Result<WeilPolySet> {
        let polys = BTreeMap::from([(0, ints(&[1, -1])), (2, ints(&[1, -(q as i64)]))]);
        WeilPolySet::new(q, 1, polys, BTreeMap::new())
    }

    /// Curve with `P_1` given by ascending coefficients.
    pub fn curve(q: u64, p1: &[i64]) -> Result<WeilPolySet> {
        let polys = BTreeMap::from([(0, ints(&[1, -1])), (1, ints(p1)), (2, ints(&[1, -(q as i64)]))]);
        WeilPolySet::new(q, 1, polys, BTreeMap::new())
    }

    /// Elliptic curve with trace of Frobenius `a`: `P_1 = 1 - a t + q t^2`.
    pub fn elliptic(q: u64, a: i64) -> Result<WeilPolySet> {
        WeilPolySet::curve(q, &[1, -a, q as i64])
    }

    pub fn with_jordan(mut self, jordan: BTreeMap<(u32, BigInt), Vec<u32>>) -> Result<WeilPolySet> {
        self.jordan = jordan;
        self.validate()?;
        Ok(self)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Dimension `d - 1` of the variety.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `P_i`, with absent degrees read as 1.
    pub fn poly(&self, i: u32) -> Poly {
        self.polys.get(&i).cloned().unwrap_or_else(Poly::one)
    }

    pub fn jordan(&self) -> &BTreeMap<(u32, BigInt), Vec<u32>> {
        &self.jordan
    }

    /// `deg P_i`.
    pub fn betti(&self, i: u32) -> usize {
        self.poly(i).degree().unwrap_or(0)
    }

    pub fn qpow(&self, k: i64) -> ExactRational {
        pow_int(&int(self.q as i64), k)
    }

    /// `(-1)^(i+1)`.
    pub fn sign(i: u32) -> i32 {
        if i % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// `sum (-1)^i deg P_i`.
    pub fn euler_characteristic(&self) -> i64 {
        (0..=2 * self.dim)
            .map(|i| -i64::from(WeilPolySet::sign(i)) * self.betti(i) as i64)
            .sum()
    }

    /// `t^b q^(e b) P_i(1/(q^e t))`: reciprocal roots `q^e / alpha`, up to the
    /// constant term `prod (-alpha)`.
    fn reflected(&self, i: u32) -> Poly {
        let p = self.poly(i);
        let b = p.degree().unwrap_or(0);
        let e = i64::from(self.dim);
        let mut c = vec![ExactRational::zero(); b + 1];
        for k in 0..=b {
            c[b - k] = p.coeff(k) * self.qpow(e * (b - k) as i64);
        }
        Poly::new(c)
    }

    fn dual_poly(&self, i: u32) -> Poly {
        let r = self.reflected(i);
        let c0 = r.coeff(0);
        r.scale(&c0.recip())
    }

    /// `max | |alpha| / q^(i/2) - 1 |` over reciprocal roots of `P_i`.
    pub fn rh_deviation(&self, i: u32) -> f64 {
        let p = self.poly(i);
        let b = p.degree().unwrap_or(0);
        if b == 0 {
            return 0.0;
        }
        let r = (self.q as f64).powf(f64::from(i) / 2.0);
        // Frobenius characteristic polynomial x^b P(1/x) in u = x / q^(i/2)
        let c: Vec<f64> = (0..=b)
            .map(|j| p.coeff(b - j).to_f64().unwrap_or(f64::NAN) * r.powi(j as i32 - b as i32))
            .collect();
        complex_roots(&c)
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

fn ints(c: &[i64]) -> Vec<BigInt> {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

/// `numerator / denominator` in lowest terms, both primitive with constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", Poly::from_ints(&self.numerator), Poly::from_ints(&self.denominator))
    }
}

fn normalized(p: &Poly) -> Poly {
    p.scale(&p.coeff(0).recip())
}

pub fn zeta_from_weil_polys(w: &WeilPolySet) -> RationalFunction {
    let (mut num, mut den) = (Poly::one(), Poly::one());
    for i in 0..=2 * w.dim() {
        if i % 2 == 1 {
            num = num.mul(&w.poly(i));
        } else {
            den = den.mul(&w.poly(i));
        }
    }
    let g = normalized(&num.gcd(&den));
    let num = num.div_exact(&g).expect("gcd divides");
    let den = den.div_exact(&g).expect("gcd divides");
    RationalFunction {
        numerator: normalized(&num).primitive_integer(),
        denominator: normalized(&den).primitive_integer(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquation {
    /// `chi = sum (-1)^i deg P_i`.
    pub chi: i64,
    /// `eps` in `Z(1/(q^e t)) = eps q^(e chi/2) t^chi Z(t)`.
    pub sign: i32,
}

/// Verifies `Z(1/(q^e t)) = +- q^(e chi/2) t^chi Z(t)` by exact polynomial algebra.
pub fn functional_equation(w: &WeilPolySet) -> Result<FunctionalEquation> {
    let chi = w.euler_characteristic();
    let e = i64::from(w.dim());
    // Z(1/(q^e t)) = q^(e chi) t^chi prod reflected_i^s_i; compare N D^ with N^ D
    let (mut n, mut d, mut nh, mut dh) = (Poly::one(), Poly::one(), Poly::one(), Poly::one());
    for i in 0..=2 * w.dim() {
        let (p, r) = (w.poly(i), w.reflected(i));
        if i % 2 == 1 {
            n = n.mul(&p);
            nh = nh.mul(&r);
        } else {
            d = d.mul(&p);
            dh = dh.mul(&r);
        }
    }
    let lhs = n.mul(&dh);
    let rhs = nh.mul(&d);
    // equality holds iff N D^ = eps q^(e chi/2) N^ D
    let r = lhs.coeff(0) / rhs.coeff(0);
    let qpow = w.qpow(e * chi);
    let ok = lhs == rhs.scale(&r) && &r * &r == qpow;
    if !ok {
        return Err(Error::Invariant("zeta function fails its functional equation".into()));
    }
    let sign = if r.is_positive() { 1 } else { -1 };
    Ok(FunctionalEquation { chi, sign })
}
