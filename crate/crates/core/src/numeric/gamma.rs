//! Leading Taylor data of `Gamma`, `Gamma_R(s) = pi^(-s/2) Gamma(s/2)` and
//! `Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s)` at integers, in exact form.

use super::leading::{Coefficient, LeadingTaylor, PiMonomial};
use super::rational::{factorial, pow_int, ExactRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaKind {
    Gamma,
    #[serde(rename = "Gamma_R")]
    GammaR,
    #[serde(rename = "Gamma_C")]
    GammaC,
}

fn fact(n: i64) -> ExactRational {
    BigRational::from_integer(factorial(n as u64))
}

fn pow2(e: i64) -> ExactRational {
    pow_int(&BigRational::from_integer(BigInt::from(2)), e)
}

fn sign(k: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 }))
}

/// `Gamma(m + 1/2) / sqrt(pi)`, a rational for every integer `m`.
fn gamma_half_over_sqrt_pi(m: i64) -> ExactRational {
    if m >= 0 {
        fact(2 * m) / (pow2(2 * m) * fact(m))
    } else {
        let k = -m;
        sign(k) * pow2(2 * k) * fact(k) / fact(2 * k)
    }
}

/// `(order, coefficient)` of `Gamma(s)` at `s = n`.
fn gamma_int(n: i64) -> (i64, PiMonomial) {
    if n >= 1 {
        (0, PiMonomial::rational(fact(n - 1)))
    } else {
        let k = -n;
        (-1, PiMonomial::rational(sign(k) / fact(k)))
    }
}

/// Exact `(order, coefficient)` of the given factor at `s = n`.
pub fn gamma_leading_exact(kind: GammaKind, n: i64) -> (i64, PiMonomial) {
    match kind {
        GammaKind::Gamma => gamma_int(n),
        GammaKind::GammaR => {
            if n % 2 == 0 {
                let m = n / 2;
                if m >= 1 {
                    (0, PiMonomial::new(fact(m - 1), -m))
                } else {
                    // Gamma(s/2) ~ 2 (-1)^k / k! / (s + 2k), and pi^(-s/2) = pi^k at s = -2k
                    let k = -m;
                    let c = BigRational::from_integer(2.into()) * sign(k) / fact(k);
                    (-1, PiMonomial::new(c, k))
                }
            } else {
                let m = (n - 1).div_euclid(2);
                (0, PiMonomial::new(gamma_half_over_sqrt_pi(m), -m))
            }
        }
        GammaKind::GammaC => {
            let (ord, g) = gamma_int(n);
            let c = BigRational::from_integer(2.into()) * pow2(-n) * g.coeff;
            (ord, PiMonomial::new(c, -n))
        }
    }
}

/// Leading Taylor data of the factor at `s = n`.
///
/// The coefficient is returned symbolically as a rational multiple of a power of
/// `pi`; `prec` is accepted for interface uniformity and used only when a ball
/// is requested from the result.
pub fn gamma_leading(kind: GammaKind, n: i64, _prec: u32) -> LeadingTaylor {
    let (ord, c) = gamma_leading_exact(kind, n);
    LeadingTaylor::new(n, ord, Coefficient::Period(c)).expect("Gamma leading coefficients are nonzero")
}

#[cfg(test)]
mod tests {
    use super::super::elementary::pi;
    use super::super::rational::{int, rat};
    use super::*;
    use num_traits::One;

    #[test]
    fn gamma_poles() {
        for k in 0..8i64 {
            let (ord, c) = gamma_leading_exact(GammaKind::Gamma, -k);
            assert_eq!(ord, -1);
            assert_eq!(c.pi_pow, 0);
            assert_eq!(c.coeff, sign(k) / fact(k));
        }
    }

    #[test]
    fn gamma_r_values() {
        let (o, c) = gamma_leading_exact(GammaKind::GammaR, 0);
        assert_eq!((o, c.coeff.clone(), c.pi_pow), (-1, int(2), 0));
        let (o, c) = gamma_leading_exact(GammaKind::GammaR, 1);
        assert_eq!((o, c), (0, PiMonomial::one()));
        // Gamma_R(2) = 1/pi, Gamma_R(-1) = pi^(1/2) Gamma(-1/2) = -2 pi
        assert_eq!(gamma_leading_exact(GammaKind::GammaR, 2), (0, PiMonomial::new(int(1), -1)));
        assert_eq!(gamma_leading_exact(GammaKind::GammaR, -1), (0, PiMonomial::new(int(-2), 1)));
        // Gamma_R(3) = pi^(-3/2) Gamma(3/2) = 1/(2 pi)
        assert_eq!(gamma_leading_exact(GammaKind::GammaR, 3), (0, PiMonomial::new(rat(1, 2), -1)));
    }

    #[test]
    fn gamma_c_values() {
        assert_eq!(gamma_leading_exact(GammaKind::GammaC, 1), (0, PiMonomial::new(int(1), -1)));
        let (o, c) = gamma_leading_exact(GammaKind::GammaC, 0);
        assert_eq!((o, c), (-1, PiMonomial::new(int(2), 0)));
    }

    #[test]
    fn duplication_formula() {
        // Gamma_R(s) Gamma_R(s + 1) = Gamma_C(s) at every integer, orders included
        for n in -9..10i64 {
            let (o1, c1) = gamma_leading_exact(GammaKind::GammaR, n);
            let (o2, c2) = gamma_leading_exact(GammaKind::GammaR, n + 1);
            let (o3, c3) = gamma_leading_exact(GammaKind::GammaC, n);
            assert_eq!(o1 + o2, o3, "n = {n}");
            assert_eq!(c1.mul(&c2), c3, "n = {n}");
        }
    }

    #[test]
    fn recurrence() {
        for n in -8..0i64 {
            let a = gamma_leading_exact(GammaKind::Gamma, n).1.coeff;
            let b = gamma_leading_exact(GammaKind::Gamma, n + 1).1.coeff;
            assert_eq!(a * int(n), b, "pole recurrence at {n}");
        }
        for n in 1..12i64 {
            let a = gamma_leading_exact(GammaKind::Gamma, n).1.coeff;
            let b = gamma_leading_exact(GammaKind::Gamma, n + 1).1.coeff;
            assert_eq!(a * int(n), b);
        }
    }

    #[test]
    fn half_integer_against_sqrt_pi() {
        // Gamma(1/2)^2 = pi
        let g = gamma_half_over_sqrt_pi(0);
        assert!(g == ExactRational::one());
        let b = gamma_leading(GammaKind::GammaR, 5, 128).to_ball(128);
        // Gamma_R(5) = pi^(-5/2) * (3/4) sqrt(pi) = 3 / (4 pi^2)
        let expect = pi(128).sqr().mul_int(4).recip().unwrap().mul_int(3);
        assert!(b.overlaps(&expect));
    }
}
