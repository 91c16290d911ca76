//! Hurwitz zeta `zeta(s, a) = sum_{k>=0} (k + a)^(-s)` for real rational `s`.
//!
//! Euler-Maclaurin with cutoff `N` and depth `M`, writing `X = N + a` and
//! `(s)_m` for the rising factorial:
//!
//! ```text
//! zeta(s, a) = sum_{k<N} (k+a)^(-s) + X^(1-s)/(s-1) + X^(-s)/2
//!            + sum_{j=1}^{M} B_2j/(2j)! (s)_(2j-1) X^(-s-2j+1) + R
//! |R| <= |B_2M|/(2M)! |(s)_2M| X^(-s-2M+1) / (s+2M-1),   s + 2M - 1 > 0
//! ```
//!
//! The bound follows from `|B~_2M(t)| <= |B_2M|` for the periodic Bernoulli
//! function. At `s = 1 - k` with `2M > k` the factor `(s)_2M` vanishes and the
//! formula is exact, so those values are computed in exact rationals.
//!
//! Inputs are evaluated at `prec + GUARD_BITS + extra` bits; the returned ball has
//! radius at most `2^(-prec + GUARD_BITS) * max(1, |zeta|)`.

use super::ball::BallReal;
use super::bernoulli::bernoulli_table;
use super::elementary::{exp, ln};
use super::mag::Mag;
use super::rational::{factorial, pow_int, ExactRational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const GUARD_BITS: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Plan {
    n: u64,
    m: u64,
}

/// `log2` of the remainder bound, estimated in floating point for planning only.
fn log2_tail(s: f64, a: f64, n: u64, m: u64) -> f64 {
    let two_m = 2 * m;
    let x = n as f64 + a;
    let denom = s + two_m as f64 - 1.0;
    if denom <= 0.0 {
        return f64::INFINITY;
    }
    let mut rising = 0.0;
    for i in 0..two_m {
        let t = (s + i as f64).abs();
        if t == 0.0 {
            return f64::NEG_INFINITY;
        }
        rising += t.log2();
    }
    // |B_2M| / (2M)! <= 4 (2 pi)^(-2M)
    let bern = 2.0 - two_m as f64 * (2.0 * std::f64::consts::PI).log2();
    bern + rising - (s + two_m as f64 - 1.0) * x.log2() - denom.log2()
}

fn plan(s: f64, a: f64, bits: u32) -> Plan {
    let target = -f64::from(bits) - 4.0;
    let mut n = (u64::from(bits) / 5).max(4).max(s.abs().ceil() as u64 + 2);
    let step = (u64::from(bits) / 10).max(4);
    loop {
        let m_max = n + s.abs().ceil() as u64 + 8;
        for m in 1..=m_max {
            if log2_tail(s, a, n, m) < target {
                return Plan { n, m };
            }
        }
        n += step;
    }
}

fn check_a(a: &ExactRational) -> Result<()> {
    if !a.is_positive() || a > &BigRational::one() {
        return Err(Error::Domain(format!("Hurwitz parameter a = {a} not in (0, 1]")));
    }
    Ok(())
}

/// `x^(-s)` as a ball; exact rational power when `s` is an integer.
fn pow_neg(x: &ExactRational, s: &ExactRational, wp: u32) -> Result<BallReal> {
    if s.is_integer() {
        let e = s.to_integer().to_i64().ok_or_else(|| Error::Overflow("exponent".into()))?;
        return Ok(BallReal::from_rational(&pow_int(x, -e), wp));
    }
    let lx = ln(&BallReal::from_rational(x, wp))?;
    Ok(exp(&lx.mul(&BallReal::from_rational(&-s.clone(), wp))))
}

/// Rising factorials `(s)_0, ..., (s)_len`.
fn rising(s: &ExactRational, len: usize) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(len + 1);
    out.push(BigRational::one());
    for i in 0..len {
        let next = &out[i] * (s + BigRational::from_integer(BigInt::from(i)));
        out.push(next);
    }
    out
}

pub fn hurwitz_zeta(s: &ExactRational, a: &ExactRational, prec: u32) -> Result<BallReal> {
    if prec < 32 {
        return Err(Error::Domain(format!("precision {prec} below 32 bits")));
    }
    check_a(a)?;
    if s.is_one() {
        return Err(Error::Pole("1".into()));
    }
    let out_prec = prec + GUARD_BITS;
    if s.is_integer() && !s.is_positive() {
        return Ok(BallReal::from_rational(&hurwitz_exact_nonpositive(s, a), out_prec));
    }
    let sf = s.to_f64().unwrap_or(f64::NAN);
    let af = a.to_f64().unwrap_or(f64::NAN);
    let magnitude = if sf > 0.0 { sf * (1.0 / af).log2() } else { sf.abs() * (sf.abs() + 2.0).log2() };
    let base_bits = out_prec + 8 + magnitude.max(0.0).ceil() as u32;
    let p = plan(sf, af, base_bits);
    let cancel = ((1.0 - sf).max(0.0) + 1.0) * ((p.n + 2) as f64).log2();
    let wp = base_bits + cancel.ceil() as u32 + 8;

    let mut sum = BallReal::zero(wp);
    for k in 0..p.n {
        let xk = a + BigRational::from_integer(BigInt::from(k));
        sum = sum + pow_neg(&xk, s, wp)?;
    }
    let x = a + BigRational::from_integer(BigInt::from(p.n));
    let xb = BallReal::from_rational(&x, wp);
    let xs = pow_neg(&x, s, wp)?;
    let one = BigRational::one();
    sum = sum + xs.mul(&xb).mul_rational(&(s - &one).recip());
    sum = sum + xs.mul_2exp(-1);

    let two_m = (2 * p.m) as usize;
    let bern = bernoulli_table(two_m);
    let rise = rising(s, two_m);
    let x_inv2 = BallReal::from_rational(&pow_int(&x, -2), wp);
    // power = X^(-s-2j+1), starting at j = 1
    let mut power = xs.mul(&BallReal::from_rational(&x.recip(), wp));
    for j in 1..=p.m as usize {
        let c = &bern[2 * j] * &rise[2 * j - 1] / BigRational::from_integer(factorial(2 * j as u64));
        sum = sum + power.mul_rational(&c);
        power = power.mul(&x_inv2);
    }
    // power now equals X^(-s-2M-1); the bound needs X^(-s-2M+1) = power * X^2
    let tail_pow = power.mul(&BallReal::from_rational(&(&x * &x), wp));
    let coeff = (&bern[two_m] * &rise[two_m]).abs()
        / BigRational::from_integer(factorial(two_m as u64))
        / (s + BigRational::from_integer(BigInt::from(two_m as u64 - 1)));
    let tail = Mag::from_rational_up(&coeff).mul(&tail_pow.abs_upper());
    Ok(sum.add_error(&tail).with_prec(out_prec))
}

/// Exact Euler-Maclaurin evaluation at a non-positive integer `s`.
fn hurwitz_exact_nonpositive(s: &ExactRational, a: &ExactRational) -> ExactRational {
    let k = (-s.to_integer()).to_u64().expect("small non-positive integer");
    let m = k / 2 + 1;
    let x = a + BigRational::one();
    let two_m = (2 * m) as usize;
    let bern = bernoulli_table(two_m);
    let rise = rising(s, two_m);
    debug_assert!(rise[two_m].is_zero());
    let ki = k as i64;
    let mut total = pow_int(a, ki);
    total += pow_int(&x, ki + 1) / (s - BigRational::one());
    total += pow_int(&x, ki) / BigRational::from_integer(2.into());
    for j in 1..=m as usize {
        let c = &bern[2 * j] * &rise[2 * j - 1] / BigRational::from_integer(factorial(2 * j as u64));
        total += c * pow_int(&x, ki - 2 * j as i64 + 1);
    }
    total
}

/// Constant term of `zeta(s, a)` at `s = 1`, i.e. `lim (zeta(s, a) - 1/(s - 1)) = -digamma(a)`.
///
/// ```text
/// C(a) = sum_{k<N} 1/(k+a) - ln X + 1/(2X) + sum_{j=1}^{M} B_2j/(2j) X^(-2j) + R
/// |R| <= |B_2M|/(2M) X^(-2M)
/// ```
pub fn hurwitz_constant_term(a: &ExactRational, prec: u32) -> Result<BallReal> {
    if prec < 32 {
        return Err(Error::Domain(format!("precision {prec} below 32 bits")));
    }
    check_a(a)?;
    let out_prec = prec + GUARD_BITS;
    let af = a.to_f64().unwrap_or(1.0);
    let base_bits = out_prec + 8 + (1.0 / af).log2().ceil() as u32;
    let p = plan(1.0, af, base_bits);
    let wp = base_bits + ((p.n + 2) as f64).log2().ceil() as u32 + 8;
    let mut sum = BallReal::zero(wp);
    for k in 0..p.n {
        let xk = a + BigRational::from_integer(BigInt::from(k));
        sum = sum + BallReal::from_rational(&xk.recip(), wp);
    }
    let x = a + BigRational::from_integer(BigInt::from(p.n));
    sum = sum - ln(&BallReal::from_rational(&x, wp))?;
    sum = sum + BallReal::from_rational(&(BigRational::from_integer(2.into()) * &x).recip(), wp);
    let two_m = (2 * p.m) as usize;
    let bern = bernoulli_table(two_m);
    for j in 1..=p.m as usize {
        let c = &bern[2 * j] / BigRational::from_integer(BigInt::from(2 * j)) * pow_int(&x, -2 * j as i64);
        sum = sum + BallReal::from_rational(&c, wp);
    }
    let tail = bern[two_m].abs() / BigRational::from_integer(BigInt::from(two_m)) * pow_int(&x, -(two_m as i64));
    Ok(sum.add_error(&Mag::from_rational_up(&tail)).with_prec(out_prec))
}

pub fn zeta_int(s: i64, prec: u32) -> Result<BallReal> {
    hurwitz_zeta(&BigRational::from_integer(s.into()), &BigRational::one(), prec)
}
