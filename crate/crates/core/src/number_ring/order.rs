//! Vanishing orders from the compact-support tables and the duality between
//! twists `n` and `1 - n`.

use super::tables::{cohomology_tables, epsilon, CohomologyTable, GroupDescriptor};
use crate::dirichlet::NumberFieldRecord;
use crate::error::{Error, Result};
use serde::Serialize;

/// Degrees inspected by the duality checks.
pub const DUALITY_DEGREES: std::ops::RangeInclusive<i64> = -4..=8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderPrediction {
    pub twist: i64,
    pub closed_form: i64,
    /// `sum (-1)^i i dim_R H^i_{ar,c}(X, R~(n))`.
    pub euler_characteristic: i64,
}

/// Predicted order of `zeta_F` at `s = n`, by the closed form and by the Euler
/// characteristic of the compact-support table; the two must agree.
pub fn vanishing_order_prediction(f: &NumberFieldRecord, n: i64) -> Result<OrderPrediction> {
    let [_, _, c] = cohomology_tables(f, n);
    let closed_form = f.rho(n);
    let euler_characteristic = c.euler_order();
    if closed_form != euler_characteristic {
        return Err(Error::OrderMismatch {
            point: n,
            analytic: euler_characteristic,
            closed_form,
        });
    }
    Ok(OrderPrediction {
        twist: n,
        closed_form,
        euler_characteristic,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityFailure {
    pub degree: i64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub twist: i64,
    /// `rank H^i_W(n) = rank H^{3-i}_W(1-n)` failures.
    pub rank_failures: Vec<DualityFailure>,
    /// `H^i_W(n)_tor` against `(H^{4-i}_W(1-n)_tor)^D`.
    pub torsion_failures: Vec<DualityFailure>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.rank_failures.is_empty() && self.torsion_failures.is_empty()
    }
}

/// Named finite factors other than `Z/2`, with the dual decoration flipped
/// when `flip` is set.
fn named(g: &GroupDescriptor, flip: bool) -> Vec<(String, bool)> {
    let mut v: Vec<_> = g
        .torsion
        .iter()
        .filter(|t| t.symbol != "Z/2")
        .map(|t| (t.symbol.clone(), t.dual != flip))
        .collect();
    v.sort();
    v
}

fn torsion_mismatch(a: &GroupDescriptor, b: &GroupDescriptor) -> Option<String> {
    if a.two_torsion() != b.two_torsion() {
        return Some(format!("(Z/2)^{} against (Z/2)^{}", a.two_torsion(), b.two_torsion()));
    }
    if named(a, false) != named(b, true) {
        return Some(format!("{a} against dual of {b}"));
    }
    if let (Some(x), Some(y)) = (a.named_order, b.named_order) {
        if x != y {
            return Some(format!("orders {x} and {y}"));
        }
    }
    None
}

fn compare(w: &CohomologyTable, dual: &CohomologyTable) -> DualityReport {
    let mut rank_failures = Vec::new();
    let mut torsion_failures = Vec::new();
    for i in DUALITY_DEGREES {
        let (a, b) = (w.entry(i), dual.entry(3 - i));
        if a.rank != b.rank {
            rank_failures.push(DualityFailure {
                degree: i,
                detail: format!("rank {} against rank {} in degree {}", a.rank, b.rank, 3 - i),
            });
        }
        let t = dual.entry(4 - i);
        if let Some(detail) = torsion_mismatch(&w.entry(i), &t) {
            torsion_failures.push(DualityFailure {
                degree: i,
                detail: format!("{detail} in degree {}", 4 - i),
            });
        }
    }
    DualityReport {
        twist: w.twist,
        rank_failures,
        torsion_failures,
    }
}

/// Compares the Weil-etale tables at `n` and `1 - n` degree by degree.
pub fn duality_report(f: &NumberFieldRecord, n: i64) -> DualityReport {
    let [w, _, _] = cohomology_tables(f, n);
    let [d, _, _] = cohomology_tables(f, 1 - n);
    compare(&w, &d)
}

/// As [`duality_report`], failing on the first offending degree.
pub fn duality_check(f: &NumberFieldRecord, n: i64) -> Result<DualityReport> {
    let r = duality_report(f, n);
    if let Some(x) = r.rank_failures.first().or(r.torsion_failures.first()) {
        return Err(Error::DualityViolation {
            degree: x.degree,
            detail: format!("twist {n}: {}", x.detail),
        });
    }
    Ok(r)
}

/// Degrees `i` in [`DUALITY_DEGREES`] with `epsilon(i, n) != epsilon(3 - i, 1 - n)`.
pub fn epsilon_symmetry_failures(n: i64) -> Vec<i64> {
    DUALITY_DEGREES
        .filter(|&i| epsilon(i, n) != epsilon(3 - i, 1 - n))
        .collect()
}
