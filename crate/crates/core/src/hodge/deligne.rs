//! Dimensions of real Deligne cohomology `H^m_D(X_/R, R(n))` from Hodge numbers.
//!
//! With `A = dim (H^i(C)/F^n)^{G_R} = sum_{p<n} h^{p,q}` and
//! `B = dim H^i(R(n))^{G_R} = sum_{p<q} h^{p,q} + h^{i/2, (-1)^(n-i/2)}`, weight `i`
//! contributes `A - B` in degree `i + 1` when `i + 1 <= 2n - 1`, and `B - A` in
//! degree `i` when `i >= 2n`. The critical weight `i = 2n - 1` contributes to
//! neither.

use super::structure::HodgeStructure;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

fn dims_ab(h: &HodgeStructure, n: i64) -> (i64, i64) {
    let a: i64 = h
        .hpq()
        .iter()
        .filter(|(&(p, _), _)| i64::from(p) < n)
        .map(|(_, &m)| i64::from(m))
        .sum();
    let mut b: i64 = h
        .hpq()
        .iter()
        .filter(|(&(p, q), _)| p < q)
        .map(|(_, &m)| i64::from(m))
        .sum();
    if h.weight().is_multiple_of(2) {
        let half = i64::from(h.weight() / 2);
        b += i64::from(h.middle(if (n - half) % 2 == 0 { 1 } else { -1 }));
    }
    (a, b)
}

/// Nonzero dimensions contributed by a single weight.
pub fn deligne_dims(h: &HodgeStructure, n: i64) -> Result<BTreeMap<i64, i64>> {
    let i = i64::from(h.weight());
    let (a, b) = dims_ab(h, n);
    let (degree, dim) = if i < 2 * n - 1 {
        (i + 1, a - b)
    } else if i >= 2 * n {
        (i, b - a)
    } else {
        return Ok(BTreeMap::new());
    };
    if dim < 0 {
        return Err(Error::NegativeDimension { degree, dim });
    }
    Ok(if dim == 0 { BTreeMap::new() } else { BTreeMap::from([(degree, dim)]) })
}

/// Sum of [`deligne_dims`] over all weights of a variety.
pub fn deligne_dims_total(hs: &[HodgeStructure], n: i64) -> Result<BTreeMap<i64, i64>> {
    let mut out = BTreeMap::new();
    for h in hs {
        for (m, d) in deligne_dims(h, n)? {
            *out.entry(m).or_insert(0) += d;
        }
    }
    Ok(out)
}
