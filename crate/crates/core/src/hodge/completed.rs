//! Completed zeta function `zeta(X_bar, s) = zeta(X, s) zeta(X_inf, s)` with
//! `zeta(X_inf, s) = prod_i L_inf(h^i, s)^((-1)^i)`.

use super::gamma_factor::{gamma_factor, linfty_order};
use super::structure::{number_ring_hodge, HodgeStructure};
use crate::dirichlet::{dedekind_zeta_leading, NumberFieldRecord};
use crate::error::{Error, Result};
use crate::numeric::{Coefficient, LeadingTaylor, PiMonomial};

/// Exact leading data of `zeta(X_inf, s)` at `s = n`.
pub fn archimedean_leading(hs: &[HodgeStructure], n: i64) -> Result<(i64, PiMonomial)> {
    let mut order = 0;
    let mut coeff = PiMonomial::one();
    for h in hs {
        let (o, c) = gamma_factor(h).leading_exact(n);
        let sign = if h.weight() % 2 == 0 { 1 } else { -1 };
        order += sign * o;
        coeff = if sign > 0 { coeff.mul(&c) } else { coeff.div(&c)? };
    }
    Ok((order, coeff))
}

/// `sum_i (-1)^i ord_{s=n} L_inf(h^i, s)`.
pub fn archimedean_order(hs: &[HodgeStructure], n: i64) -> Result<i64> {
    hs.iter()
        .map(|h| Ok(if h.weight() % 2 == 0 { 1 } else { -1 } * linfty_order(h, n)?))
        .sum()
}

/// Leading Taylor data of the completed zeta function of `Spec O_F` at `s = n`;
/// the order is checked against `rho_n + sum (-1)^i ord L_inf`.
pub fn completed_zeta_leading(f: &NumberFieldRecord, n: i64, prec: u32) -> Result<LeadingTaylor> {
    let hs = number_ring_hodge(f.r1, f.r2);
    let z = dedekind_zeta_leading(f, n, prec)?;
    let (og, g) = archimedean_leading(&hs, n)?;
    let expected = f.rho(n) + archimedean_order(&hs, n)?;
    let order = z.order() + og;
    if order != expected {
        return Err(Error::OrderMismatch {
            point: n,
            analytic: order,
            closed_form: expected,
        });
    }
    let coeff = z.coefficient().mul(&Coefficient::Period(g));
    LeadingTaylor::new(n, order, coeff)
}
