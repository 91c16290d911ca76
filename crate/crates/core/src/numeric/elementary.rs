//! Elementary constants and functions on balls.
//!
//! Series are summed in ball arithmetic at a raised working precision. Each
//! truncation adds an explicit tail bound to the radius; the input radius is
//! propagated with a Lipschitz bound for the function on the ball.

use super::ball::BallReal;
use super::mag::Mag;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Alternating series for `atan(1/k)`; the first omitted term bounds the tail.
fn atan_inv(k: i64, wp: u32) -> BallReal {
    let k2 = BigInt::from(k * k);
    let mut pow = BigInt::from(k);
    let mut sum = BallReal::zero(wp);
    let eps = -i64::from(wp) - 4;
    let mut j = 0i64;
    loop {
        let denom = BigInt::from(2 * j + 1) * &pow;
        let term = BallReal::from_rational(&BigRational::new(BigInt::one(), denom), wp);
        if term.abs_upper().top_exp() < eps {
            return sum.add_error(&term.abs_upper());
        }
        sum = if j % 2 == 0 { sum + term } else { sum - term };
        pow *= &k2;
        j += 1;
    }
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> BallReal {
    let wp = prec + 20;
    let a = atan_inv(5, wp).mul_int(16);
    let b = atan_inv(239, wp).mul_int(4);
    (a - b).with_prec(prec)
}

/// `atanh(z) = sum z^(2j+1)/(2j+1)` for `|z| <= 1/3`.
fn atanh_small(z: &BallReal, wp: u32) -> BallReal {
    let z2 = z.sqr();
    let mut power = z.clone();
    let mut sum = BallReal::zero(wp);
    let eps = -i64::from(wp) - 4;
    let mut j = 0i64;
    loop {
        if power.abs_upper().top_exp() < eps {
            // tail <= |z|^(2J+3) / (1 - z^2) <= |z|^(2J+1) when z^2 <= 1/9
            return sum.add_error(&power.abs_upper());
        }
        sum = sum + power.div_int(2 * j + 1);
        power = power.mul(&z2);
        j += 1;
    }
}

pub fn ln2(prec: u32) -> BallReal {
    let wp = prec + 16;
    atanh_small(&BallReal::from_ratio(1, 3, wp), wp)
        .mul_int(2)
        .with_prec(prec)
}

/// Natural logarithm of a strictly positive ball.
pub fn ln(x: &BallReal) -> Result<BallReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("log of a ball not contained in (0, inf): {x}")));
    }
    let prec = x.prec();
    let wp = prec + 24;
    let (mid, exp) = x.mid_dyadic();
    let bits = mid.bits() as i64;
    let mut t = exp + bits - 1;
    let three_halves = BigInt::from(3) << ((bits - 1) as usize);
    if (mid << 1usize) >= three_halves {
        t += 1;
    }
    let u = x.mid_ball().with_prec(wp).mul_2exp(-t);
    let one = BallReal::one(wp);
    let z = (&u - &one).div(&(&u + &one))?;
    let mut r = atanh_small(&z, wp).mul_int(2);
    if t != 0 {
        r = r + ln2(wp).mul_int(t);
    }
    if !x.radius().is_zero() {
        r = r.add_error(&x.radius().div(&x.abs_lower()));
    }
    Ok(r.with_prec(prec))
}

/// Exponential of a ball.
pub fn exp(x: &BallReal) -> BallReal {
    let prec = x.prec();
    let m = x.mid_ball();
    if m.is_exact() && m.abs_upper().is_zero() {
        return BallReal::one(prec).add_error(&exp_radius_factor(&x.radius()));
    }
    let top = m.abs_upper().top_exp();
    let k = (top + 8).max(0);
    let wp = prec + 24 + k as u32;
    let y = m.with_prec(wp).mul_2exp(-k);
    let mut sum = BallReal::one(wp);
    let mut term = BallReal::one(wp);
    let eps = -i64::from(wp) - 4;
    let mut j = 1i64;
    loop {
        term = term.mul(&y).div_int(j);
        sum = sum + term.clone();
        if term.abs_upper().top_exp() < eps {
            // |y| <= 2^-8 makes the remaining terms a geometric tail below |term|
            sum = sum.add_error(&term.abs_upper());
            break;
        }
        j += 1;
    }
    for _ in 0..k {
        sum = sum.sqr();
    }
    if !x.radius().is_zero() {
        let spread = sum.abs_upper().mul(&exp_radius_factor(&x.radius()));
        sum = sum.add_error(&spread);
    }
    sum.with_prec(prec)
}

/// Upper bound for `e^r - 1`.
fn exp_radius_factor(r: &Mag) -> Mag {
    if r.cmp_mag(&Mag::pow2(-1)) == std::cmp::Ordering::Less {
        r.mul_u64(2)
    } else {
        let (m, e) = r.to_dyadic();
        exp(&BallReal::from_dyadic(m, e, Mag::ZERO, 64)).abs_upper()
    }
}

/// `x^s = exp(s * ln x)` for a positive ball `x`.
pub fn pow_real(x: &BallReal, s: &BallReal) -> Result<BallReal> {
    Ok(exp(&s.mul(&ln(x)?)))
}

/// `(sin x, cos x)`.
pub fn sin_cos(x: &BallReal) -> (BallReal, BallReal) {
    let prec = x.prec();
    let wp = prec + 40;
    let mut m = x.mid_ball().with_prec(wp);
    if m.abs_upper().top_exp() > 3 {
        let two_pi = pi(wp + m.abs_upper().top_exp() as u32).mul_int(2);
        let turns = m.div(&two_pi).expect("2 pi is nonzero").to_f64().round();
        m = m - two_pi.mul_int(turns as i64);
    }
    let mut s = BallReal::zero(wp);
    let mut c = BallReal::zero(wp);
    let mut term = BallReal::one(wp);
    let bound = 2.0 * m.to_f64().abs() + 2.0;
    let eps = -i64::from(wp) - 4;
    let mut j = 0i64;
    loop {
        match j % 4 {
            0 => c = c + term.clone(),
            1 => s = s + term.clone(),
            2 => c = c - term.clone(),
            _ => s = s - term.clone(),
        }
        if (j as f64) > bound && term.abs_upper().top_exp() < eps {
            // beyond j > 2|m| the terms at least halve, so the tail is below |term|
            let tail = term.abs_upper();
            s = s.add_error(&tail);
            c = c.add_error(&tail);
            break;
        }
        j += 1;
        term = term.mul(&m).div_int(j);
    }
    let r = x.radius();
    (s.add_error(&r).with_prec(prec), c.add_error(&r).with_prec(prec))
}

/// Exact value of `2 pi k / ord` reduced to `(-pi, pi]`, as a rational multiple of `pi`.
pub(crate) fn reduced_turn(k: i64, ord: i64) -> BigRational {
    let k = k.rem_euclid(ord);
    let r = BigRational::new(BigInt::from(2 * k), BigInt::from(ord));
    if r > BigRational::one() {
        r - BigRational::from_integer(2.into())
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510582097494459";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369995957496696762";
    const LN2_50: &str = "0.693147180559945309417232121458176568075500134360255254120680009";

    #[test]
    fn pi_matches_reference_digits() {
        let p = pi(200);
        let r = BallReal::parse_decimal(PI_50, 256).unwrap();
        assert!(p.overlaps(&r));
        assert!(p.rel_width() < 1e-58);
    }

    #[test]
    fn exp_one_and_ln2() {
        let e = exp(&BallReal::one(200));
        assert!(e.overlaps(&BallReal::parse_decimal(E_50, 256).unwrap()));
        assert!(e.rel_width() < 1e-55);
        let l = ln2(200);
        assert!(l.overlaps(&BallReal::parse_decimal(LN2_50, 256).unwrap()));
    }

    #[test]
    fn ln_inverts_exp() {
        for v in [-30i64, -3, 1, 7, 55] {
            let x = BallReal::from_ratio(v, 7, 160);
            let y = ln(&exp(&x)).unwrap();
            assert!(y.overlaps(&x), "{v}: {y} vs {x}");
            assert!(y.radius_f64() < 1e-40);
        }
        assert!(ln(&BallReal::from_int(-1, 64)).is_err());
    }

    #[test]
    fn ln_of_large_power_of_ten() {
        let x = BallReal::from_int(BigInt::from(10).pow(30), 128);
        let y = ln(&x).unwrap();
        let expect = ln(&BallReal::from_int(10, 128)).unwrap().mul_int(30);
        assert!(y.overlaps(&expect));
    }

    #[test]
    fn sin_cos_identities() {
        for v in [-40i64, -5, 1, 3, 22, 100] {
            let x = BallReal::from_ratio(v, 3, 128);
            let (s, c) = sin_cos(&x);
            let one = s.sqr() + c.sqr();
            assert!(one.contains_int(1), "{v}");
            assert!((s.to_f64() - (v as f64 / 3.0).sin()).abs() < 1e-12);
        }
        let (s, c) = sin_cos(&pi(128));
        assert!(s.contains_int(0) && c.contains_int(-1));
    }

    #[test]
    fn turn_reduction() {
        assert_eq!(reduced_turn(3, 4), BigRational::new((-1).into(), 2.into()));
        assert_eq!(reduced_turn(1, 2), BigRational::one());
        assert!(reduced_turn(0, 5).is_zero());
        assert!(reduced_turn(-1, 4).is_negative());
    }
}
