//! `L_inf(h^i, s) = prod_{p<q} Gamma_C(s-p)^{h^{p,q}} Gamma_R(s-i/2)^{h^{i/2,+}} Gamma_R(s-i/2+1)^{h^{i/2,-}}`.

use super::structure::HodgeStructure;
use crate::error::{Error, Result};
use crate::numeric::{gamma_leading_exact, GammaKind, PiMonomial};
use serde::Serialize;

/// One factor `kind(s + shift)^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GammaTerm {
    pub kind: GammaKind,
    pub shift: i64,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaFactor {
    pub factors: Vec<GammaTerm>,
}

impl GammaFactor {
    /// `sum exponent * (1 for Gamma_R, 2 for Gamma_C)`.
    pub fn degree(&self) -> u32 {
        self.factors
            .iter()
            .map(|t| t.exponent * if t.kind == GammaKind::GammaC { 2 } else { 1 })
            .sum()
    }

    /// Exact `(order, coefficient)` at `s = n`, factor by factor.
    pub fn leading_exact(&self, n: i64) -> (i64, PiMonomial) {
        self.factors.iter().fold((0, PiMonomial::one()), |(o, c), t| {
            let (ot, ct) = gamma_leading_exact(t.kind, n + t.shift);
            let e = i64::from(t.exponent);
            (o + e * ot, c.mul(&ct.pow(e)))
        })
    }
}

pub fn gamma_factor(h: &HodgeStructure) -> GammaFactor {
    let i = i64::from(h.weight());
    let mut factors = Vec::new();
    for (&(p, q), &m) in h.hpq() {
        if p < q {
            factors.push(GammaTerm {
                kind: GammaKind::GammaC,
                shift: -i64::from(p),
                exponent: m,
            });
        }
    }
    if let Some((plus, minus)) = h.middle_split() {
        for (exponent, shift) in [(plus, -i / 2), (minus, -i / 2 + 1)] {
            if exponent > 0 {
                factors.push(GammaTerm {
                    kind: GammaKind::GammaR,
                    shift,
                    exponent,
                });
            }
        }
    }
    factors.sort();
    GammaFactor { factors }
}

/// `-(sum_{n<=p<q} h^{p,q} + [n <= i/2] h^{i/2, (-1)^(n-i/2)})`.
fn order_formula(h: &HodgeStructure, n: i64) -> i64 {
    let mut total: i64 = h
        .hpq()
        .iter()
        .filter(|(&(p, q), _)| p < q && n <= i64::from(p))
        .map(|(_, &m)| i64::from(m))
        .sum();
    if h.weight().is_multiple_of(2) {
        let half = i64::from(h.weight() / 2);
        if n <= half {
            let sign = if (n - half) % 2 == 0 { 1 } else { -1 };
            total += i64::from(h.middle(sign));
        }
    }
    -total
}

/// Order of `L_inf(h^i, s)` at `s = n`, by the closed formula and by summing
/// Gamma leading orders; the two must agree.
pub fn linfty_order(h: &HodgeStructure, n: i64) -> Result<i64> {
    let closed = order_formula(h, n);
    let (summed, _) = gamma_factor(h).leading_exact(n);
    if closed != summed {
        return Err(Error::Mismatch(format!(
            "L_inf order at {n}: formula {closed}, factor sum {summed}"
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn examples() {
        let g = gamma_factor(&HodgeStructure::real_place());
        assert_eq!(g.factors, vec![GammaTerm { kind: GammaKind::GammaR, shift: 0, exponent: 1 }]);
        let g = gamma_factor(&HodgeStructure::curve_h1(1));
        assert_eq!(g.factors, vec![GammaTerm { kind: GammaKind::GammaC, shift: 0, exponent: 1 }]);
        let h2 = HodgeStructure::new(2, BTreeMap::from([((1, 1), 1)]), Some((0, 1))).unwrap();
        assert_eq!(gamma_factor(&h2).factors, vec![GammaTerm { kind: GammaKind::GammaR, shift: 0, exponent: 1 }]);
    }

    #[test]
    fn orders() {
        let integers = HodgeStructure::real_place();
        assert_eq!(linfty_order(&integers, 0).unwrap(), -1);
        assert_eq!(linfty_order(&integers, 1).unwrap(), 0);
        assert_eq!(linfty_order(&integers, -1).unwrap(), 0);
        let e = HodgeStructure::curve_h1(1);
        assert_eq!(linfty_order(&e, 1).unwrap(), 0);
        assert_eq!(linfty_order(&e, 0).unwrap(), -1);
        // complex place: Gamma_R(s) Gamma_R(s+1) = Gamma_C(s), poles at every n <= 0
        let c = HodgeStructure::complex_place();
        for n in -5..=0 {
            assert_eq!(linfty_order(&c, n).unwrap(), -1);
        }
    }

    #[test]
    fn degree_matches_dimension() {
        let h = HodgeStructure::new(
            4,
            BTreeMap::from([((0, 4), 1), ((4, 0), 1), ((1, 3), 2), ((3, 1), 2), ((2, 2), 3)]),
            Some((2, 1)),
        )
        .unwrap();
        assert_eq!(gamma_factor(&h).degree(), h.dimension());
    }
}
