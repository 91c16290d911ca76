//! Exact rationals: construction, `"p/q"` serialization and reconstruction from balls.

use super::ball::BallReal;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Canonical rational with positive denominator, coprime to the numerator.
pub type ExactRational = BigRational;

pub fn rat(n: i64, d: i64) -> ExactRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(n.into())
}

pub fn to_pq(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_pq(s: &str) -> Result<ExactRational> {
    let bad = || Error::Schema(format!("not a rational \"p/q\": {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// `base^e` for an integer exponent of either sign; `base` must be nonzero if `e < 0`.
pub fn pow_int(base: &ExactRational, e: i64) -> ExactRational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Smallest-denominator continued-fraction convergent of the midpoint lying in
/// the ball, subject to `denominator <= max_den`.
pub fn reconstruct(x: &BallReal, max_den: &BigInt) -> Option<ExactRational> {
    let target = x.mid_rational();
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    for _ in 0..512 {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if &q2 > max_den {
            return None;
        }
        let cand = BigRational::new(p2.clone(), q2.clone());
        if x.contains_rational(&cand) {
            return Some(cand);
        }
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            return None;
        }
        rest = frac.recip();
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

/// Whether `n` is squarefree (by trial division).
pub fn is_squarefree(n: u64) -> bool {
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_roundtrip() {
        for q in [rat(-1, 12), rat(5, 1), rat(0, 3), rat(7, -14)] {
            assert_eq!(parse_pq(&to_pq(&q)).unwrap(), q);
        }
        assert_eq!(to_pq(&rat(2, -4)), "-1/2");
        assert!(parse_pq("1/0").is_err());
        assert!(parse_pq("x").is_err());
        assert_eq!(parse_pq("3").unwrap(), int(3));
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let bound = BigInt::from(10_000);
        for q in [rat(1, 12), rat(-691, 2730), rat(3, 2), rat(0, 1), rat(-7, 1)] {
            let b = BallReal::from_rational(&q, 128);
            assert_eq!(reconstruct(&b, &bound), Some(q));
        }
        let pi_like = BallReal::parse_decimal("3.14159265358979323846264338327950288", 128).unwrap();
        assert_eq!(reconstruct(&pi_like, &bound), None);
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(1) && is_squarefree(30) && is_squarefree(23));
        assert!(!is_squarefree(12) && !is_squarefree(49));
    }
}
