//! Leading Taylor data of `L(s, chi)` at integers.
//!
//! `L(s, chi) = f^(-s) sum_{a mod f} chi(a) zeta(s, a/f)`. At `s = 1` the pole
//! parts cancel for non-principal `chi`, leaving `f^(-1) sum chi(a) C(a/f)` with
//! `C` the constant term of the Hurwitz zeta. At `s = 1 - k <= 0` the values are
//! `-f^(k-1)/k sum chi(a) B_k(a/f)`; where these vanish the derivative is taken
//! from the functional equation
//!
//! ```text
//! Lambda(s, chi) = (f/pi)^((s+kappa)/2) Gamma((s+kappa)/2) L(s, chi) = W(chi) Lambda(1-s, conj chi)
//! W(chi) = tau(chi) / (i^kappa sqrt f)
//! ```
//!
//! which at a trivial zero `n` with `(n + kappa)/2 = -m` gives
//! `L'(n) = tau(chi) i^(-kappa) f^(-n) pi^n g L(1-n, conj chi) / c`,
//! `g = Gamma((1-n+kappa)/2)/sqrt(pi)` rational and `c = 2(-1)^m/m!`.

use super::character::DirichletCharacter;
use crate::error::{Error, Result};
use crate::numeric::elementary::pi;
use crate::numeric::rational::{factorial, int, pow_int, rat};
use crate::numeric::{
    bernoulli_poly, hurwitz_constant_term, hurwitz_zeta, BallReal, Coefficient, ComplexBall, ExactRational,
    LeadingTaylor, GUARD_BITS,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Leading data with a complex coefficient; `L(n, chi)` is real only for real `chi`.
#[derive(Clone, Debug)]
pub struct ComplexLeading {
    pub point: i64,
    pub order: i64,
    pub coefficient: ComplexBall,
    /// Exact value when `chi` is real and the coefficient is rational.
    pub exact: Option<ExactRational>,
}

fn working_prec(chi: &DirichletCharacter, prec: u32) -> u32 {
    let bits = 64 - chi.modulus().leading_zeros();
    prec + GUARD_BITS + 2 * bits + 8
}

fn weighted_sum(chi: &DirichletCharacter, wp: u32, term: impl Fn(u64) -> Result<BallReal>) -> Result<ComplexBall> {
    let f = chi.modulus();
    let mut acc = ComplexBall::zero(wp);
    for a in 1..=f {
        if chi.exponent(a as i64).is_none() {
            continue;
        }
        let t = term(a)?;
        acc = acc.add(&chi.value(a as i64, wp).scale(&t));
    }
    Ok(acc)
}

/// Whether `L(s, chi)` has a trivial zero at the integer `n <= 0`.
pub fn is_trivial_zero(chi: &DirichletCharacter, n: i64) -> bool {
    n <= 0 && (n + chi.parity().kappa()) % 2 == 0 && !(chi.is_principal() && n == 0)
}

/// `L(1-k, chi)` for `k >= 1` as exact terms `chi(a) * r_a`.
fn nonpositive_terms(chi: &DirichletCharacter, k: u64) -> Vec<(u64, ExactRational)> {
    let f = chi.modulus();
    let scale = -pow_int(&int(f as i64), k as i64 - 1) / int(k as i64);
    (1..=f)
        .filter(|&a| chi.exponent(a as i64).is_some())
        .map(|a| (a, &scale * bernoulli_poly(k as usize, &rat(a as i64, f as i64))))
        .collect()
}

pub fn dirichlet_l_complex(chi: &DirichletCharacter, n: i64, prec: u32) -> Result<ComplexLeading> {
    if !chi.is_primitive() {
        return Err(Error::Domain(format!("{chi} is not primitive")));
    }
    let f = chi.modulus();
    let wp = working_prec(chi, prec);
    let out = prec + GUARD_BITS;
    let finish = |order: i64, c: ComplexBall, exact: Option<ExactRational>| -> Result<ComplexLeading> {
        let c = ComplexBall::new(c.re.with_prec(out), c.im.with_prec(out));
        if c.contains_zero() {
            return Err(Error::UnverifiedOrder { point: n, order });
        }
        Ok(ComplexLeading {
            point: n,
            order,
            coefficient: c,
            exact,
        })
    };

    if n == 1 && chi.is_principal() {
        return finish(-1, ComplexBall::one(out), Some(int(1)));
    }
    if n >= 1 {
        let s = int(n);
        let sum = weighted_sum(chi, wp, |a| {
            let x = rat(a as i64, f as i64);
            if n == 1 {
                hurwitz_constant_term(&x, wp)
            } else {
                hurwitz_zeta(&s, &x, wp)
            }
        })?;
        let scale = BallReal::from_rational(&pow_int(&int(f as i64), -n), wp);
        return finish(0, sum.scale(&scale), None);
    }
    if !is_trivial_zero(chi, n) {
        let k = (1 - n) as u64;
        let terms = nonpositive_terms(chi, k);
        let exact = chi.is_real().then(|| {
            terms.iter().fold(BigRational::zero(), |acc, (a, r)| {
                acc + r * int(chi.real_value(*a as i64).expect("real character"))
            })
        });
        let mut acc = ComplexBall::zero(wp);
        for (a, r) in &terms {
            acc = acc.add(&chi.value(*a as i64, wp).scale(&BallReal::from_rational(r, wp)));
        }
        return finish(0, acc, exact);
    }
    // trivial zero: derivative from the functional equation
    let kappa = chi.parity().kappa();
    let m = (-(n + kappa) / 2) as u64;
    let c = int(2) * int(if m.is_multiple_of(2) { 1 } else { -1 }) / BigRational::from_integer(factorial(m));
    // Gamma(j + 1/2)/sqrt(pi) with j = (1 - n + kappa - 1)/2 >= 0
    let j = ((-n + kappa) / 2) as u64;
    let g = BigRational::from_integer(factorial(2 * j))
        / (BigRational::from_integer(BigInt::from(4).pow(j as u32)) * BigRational::from_integer(factorial(j)));
    let dual = dirichlet_l_complex(&chi.conj(), 1 - n, wp)?;
    let tau = chi.gauss_sum(wp).mul(&ComplexBall::i_pow(-kappa, wp));
    let rational = g / c * pow_int(&int(f as i64), -n);
    let pi_n = pi(wp + 8).pow_i(n)?;
    let val = tau
        .mul(&dual.coefficient)
        .scale(&pi_n.mul_rational(&rational));
    finish(1, val, None)
}

/// Leading Taylor data of `L(s, chi)` at `s = n` for a primitive character.
///
/// Fails with `Mismatch` if the coefficient is not real (complex `chi`), and with
/// `UnverifiedOrder` if the coefficient ball contains zero.
pub fn dirichlet_l_leading(chi: &DirichletCharacter, n: i64, prec: u32) -> Result<LeadingTaylor> {
    let c = dirichlet_l_complex(chi, n, prec)?;
    let coeff = match c.exact {
        Some(q) => Coefficient::Exact(q),
        None => Coefficient::Ball(c.coefficient.to_real()?),
    };
    LeadingTaylor::new(n, c.order, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::field::kronecker_character;
    use crate::numeric::zeta_int;

    fn chi4() -> DirichletCharacter {
        DirichletCharacter::from_generators(4, &[(3, 1)], 2).unwrap()
    }

    #[test]
    fn riemann_zeta_values() {
        let one = DirichletCharacter::principal(1);
        let l2 = dirichlet_l_leading(&one, 2, 128).unwrap();
        assert!(l2.to_ball(128).overlaps(&pi(160).sqr().div_int(6)));
        let l0 = dirichlet_l_leading(&one, 0, 128).unwrap();
        assert_eq!(l0.coefficient(), &Coefficient::Exact(rat(-1, 2)));
        let l1 = dirichlet_l_leading(&one, 1, 128).unwrap();
        assert_eq!((l1.order(), l1.coefficient()), (-1, &Coefficient::Exact(int(1))));
    }

    #[test]
    fn leibniz_series() {
        let l = dirichlet_l_leading(&chi4(), 1, 128).unwrap();
        let b = l.to_ball(128);
        assert!(b.overlaps(&pi(160).div_int(4)));
        assert!(b.rel_width() < 1e-30);
    }

    #[test]
    fn trivial_zero_derivative_of_zeta() {
        // zeta'(-2) = -zeta(3) / (4 pi^2)
        let one = DirichletCharacter::principal(1);
        let d = dirichlet_l_leading(&one, -2, 128).unwrap();
        assert_eq!(d.order(), 1);
        let expect = zeta_int(3, 160).unwrap().div(&pi(160).sqr().mul_int(4)).unwrap().neg();
        assert!(d.to_ball(128).overlaps(&expect));
    }

    #[test]
    fn odd_character_values() {
        // L(0, chi_-4) = 1/2, L(-1, chi_-4) = 0, L(-2, chi_-4) = -1/2 (Euler numbers)
        let l0 = dirichlet_l_leading(&chi4(), 0, 128).unwrap();
        assert_eq!(l0.coefficient(), &Coefficient::Exact(rat(1, 2)));
        assert_eq!(dirichlet_l_leading(&chi4(), -1, 128).unwrap().order(), 1);
        let l2 = dirichlet_l_leading(&chi4(), -2, 128).unwrap();
        assert_eq!(l2.coefficient(), &Coefficient::Exact(rat(-1, 2)));
    }

    #[test]
    fn even_character_zero_at_zero() {
        // L'(0, chi_5) = ln(phi) from the class number formula for Q(sqrt 5)
        let chi = kronecker_character(5).unwrap();
        let d = dirichlet_l_leading(&chi, 0, 128).unwrap();
        assert_eq!(d.order(), 1);
        let phi = BallReal::from_int(5, 160).sqrt().unwrap().add(&BallReal::one(160)).mul_2exp(-1);
        let ln_phi = crate::numeric::elementary::ln(&phi).unwrap();
        assert!(d.to_ball(128).overlaps(&ln_phi), "{}", d.to_ball(128));
    }

    #[test]
    fn complex_character_is_not_real() {
        let chi = DirichletCharacter::from_generators(7, &[(3, 1)], 6).unwrap();
        let c = dirichlet_l_complex(&chi, 2, 64).unwrap();
        assert!(!c.coefficient.im.contains_zero());
        assert!(matches!(dirichlet_l_leading(&chi, 2, 64), Err(Error::Mismatch(_))));
    }

    #[test]
    fn imprimitive_rejected() {
        let chi = DirichletCharacter::principal(3);
        assert!(matches!(dirichlet_l_complex(&chi, 2, 64), Err(Error::Domain(_))));
    }
}
