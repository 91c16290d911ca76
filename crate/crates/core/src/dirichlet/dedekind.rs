//! Leading Taylor data of the Dedekind zeta function of an abelian field.
//!
//! For `n >= 1` the product of the `L(s, chi)`. For `n <= 0` the functional
//! equation of `xi_F(s) = |D|^(s/2) Gamma_R(s)^r1 Gamma_C(s)^r2 zeta_F(s)` moves
//! the computation to `1 - n >= 1`:
//!
//! ```text
//! zeta*_F(n) = (-1)^k |D|^(1/2-n) [G(1-n) / G(n)] zeta*_F(1-n)
//! ```
//!
//! with `G = Gamma_R^r1 Gamma_C^r2` in exact leading form and `k` the order of
//! `xi_F` at `1 - n`. When the order at `n <= 0` is zero the value is a rational
//! whose denominator divides `w_(1-n)(F)`; a ball narrower than `1/w` then pins
//! it exactly.

use super::field::NumberFieldRecord;
use super::lfunc::dirichlet_l_complex;
use super::torsion::torsion_w_n;
use crate::error::{Error, Result};
use crate::numeric::rational::{int, pow_int};
use crate::numeric::{
    gamma_leading_exact, BallReal, Coefficient, ComplexBall, ExactRational, GammaKind, LeadingTaylor, PiMonomial,
    GUARD_BITS,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

/// Exact leading data of `Gamma_R(s)^r1 Gamma_C(s)^r2` at `s = n`.
pub fn field_gamma_leading(f: &NumberFieldRecord, n: i64) -> (i64, PiMonomial) {
    let (or, cr) = gamma_leading_exact(GammaKind::GammaR, n);
    let (oc, cc) = gamma_leading_exact(GammaKind::GammaC, n);
    let (r1, r2) = (i64::from(f.r1), i64::from(f.r2));
    (r1 * or + r2 * oc, cr.pow(r1).mul(&cc.pow(r2)))
}

/// `zeta_F(s)` near `s = n >= 1` as a product of L-functions.
fn positive_leading(f: &NumberFieldRecord, n: i64, prec: u32) -> Result<(i64, BallReal)> {
    let chars = f.characters()?;
    let wp = prec + 8 + 2 * (64 - f.abs_disc().leading_zeros());
    let parts: Vec<_> = chars
        .par_iter()
        .map(|chi| dirichlet_l_complex(chi, n, wp))
        .collect::<Result<_>>()?;
    let order = parts.iter().map(|p| p.order).sum();
    let prod = parts
        .iter()
        .fold(ComplexBall::one(wp), |acc, p| acc.mul(&p.coefficient));
    Ok((order, prod.to_real()?))
}

/// Pins a ball to the unique multiple of `1/w` it contains, if the ball is
/// narrow enough for uniqueness.
fn pin_rational(b: &BallReal, w: u64) -> Option<ExactRational> {
    let wq = BigRational::from_integer(BigInt::from(w));
    let scaled = b.mul_rational(&wq);
    if scaled.rad_rational() * int(2) >= int(1) {
        return None;
    }
    let cand = scaled.mid_rational().round() / wq;
    b.contains_rational(&cand).then_some(cand)
}

/// Leading Taylor data of `zeta_F` at `s = n`; the order is checked against
/// the closed form `rho_n`.
pub fn dedekind_zeta_leading(f: &NumberFieldRecord, n: i64, prec: u32) -> Result<LeadingTaylor> {
    let out = prec + GUARD_BITS;
    let (order, coeff) = if n >= 1 {
        let (order, value) = positive_leading(f, n, prec)?;
        let exact = (n == 1 && f.degree == 1).then(|| int(1));
        match exact {
            Some(q) => (order, Coefficient::Exact(q)),
            None => (order, Coefficient::Ball(value.with_prec(out))),
        }
    } else {
        let m = 1 - n;
        let wp = prec + 16;
        let (k, zeta_m) = positive_leading(f, m, wp)?;
        let (og_n, g_n) = field_gamma_leading(f, n);
        let (og_m, g_m) = field_gamma_leading(f, m);
        // xi_F has order k + og_m at 1 - n and the same order at n
        let k_xi = k + og_m;
        let order = k_xi - og_n;
        let sign = if k_xi % 2 == 0 { int(1) } else { int(-1) };
        let ratio = g_m.div(&g_n)?;
        let d = f.abs_disc() as i64;
        let sqrt_d = BallReal::from_int(d, wp).sqrt()?;
        let scale = sqrt_d.mul_rational(&(sign * pow_int(&int(d), -n)));
        let value = scale
            .mul(&ratio.to_ball(wp))
            .mul(&zeta_m)
            .with_prec(out);
        let coeff = if order == 0 {
            match pin_rational(&value, torsion_w_n(f, m)?) {
                Some(q) => Coefficient::Exact(q),
                None => Coefficient::Ball(value),
            }
        } else {
            Coefficient::Ball(value)
        };
        (order, coeff)
    };
    let rho = f.rho(n);
    if order != rho {
        return Err(Error::OrderMismatch {
            point: n,
            analytic: order,
            closed_form: rho,
        });
    }
    LeadingTaylor::new(n, order, coeff)
}

/// Leading data of `xi_F(s) = |D|^(s/2) Gamma_R(s)^r1 Gamma_C(s)^r2 zeta_F(s)` at `s = n`.
pub fn xi_leading(f: &NumberFieldRecord, n: i64, prec: u32) -> Result<LeadingTaylor> {
    let z = dedekind_zeta_leading(f, n, prec)?;
    let (og, g) = field_gamma_leading(f, n);
    let wp = prec + GUARD_BITS;
    let d = BallReal::from_int(f.abs_disc() as i64, wp + 8);
    let dpow = if n % 2 == 0 {
        BallReal::from_rational(&pow_int(&int(f.abs_disc() as i64), n / 2), wp + 8)
    } else {
        d.sqrt()?.pow_i(n)?
    };
    let c = Coefficient::Ball(dpow.mul(&g.to_ball(wp + 8)).mul(&z.to_ball(wp + 8)).with_prec(wp));
    LeadingTaylor::new(n, z.order() + og, c)
}
