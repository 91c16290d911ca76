//! Special values predicted by the fundamental line, and their compatibility
//! with the functional equation.
//!
//! For `n >= 1`:
//!
//! ```text
//! zeta*_F(n) = |D|^(1-n) C(F, n) 2^(r1 (d_1n - d_2n)) (2 pi)^(deg n - r2 - r1 d_1n) h_n R_n / (w_n sqrt|D|)
//! ```
//!
//! with `C(F, n) = (n-1)!^(-deg)` and `d_in = [i = n mod 2]`. For `n <= 0`,
//! `zeta*_F(n) = +- h_(1-n) R_(1-n) / w_(1-n)`.

use super::tables::delta;
use crate::dirichlet::{dedekind_zeta_leading, field_gamma_leading, KTheoryData, NumberFieldRecord};
use crate::error::{Error, Result};
use crate::numeric::rational::{factorial, int, pow_int, reconstruct, to_pq};
use crate::numeric::{BallReal, ExactRational, LeadingTaylor, PiMonomial, GUARD_BITS};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

/// `C(F, n)`: `(n-1)!^(-deg)` for `n >= 1`, and 1 otherwise.
pub fn correction_factor(f: &NumberFieldRecord, n: i64) -> ExactRational {
    if n >= 1 {
        let fact = BigRational::from_integer(factorial((n - 1) as u64));
        pow_int(&fact, -i64::from(f.degree))
    } else {
        int(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerhamDeterminant {
    #[serde(serialize_with = "ser_pq")]
    pub value: ExactRational,
    /// The complex is zero for `n <= 0` and its determinant is trivially 1.
    pub trivial: bool,
}

/// Determinant of `R Gamma_dR(X/Z)/F^n`: `|D|^(n-1)` for `n >= 1`.
pub fn derived_derham_det(f: &NumberFieldRecord, n: i64) -> DerhamDeterminant {
    if n >= 1 {
        DerhamDeterminant {
            value: pow_int(&int(f.abs_disc() as i64), n - 1),
            trivial: false,
        }
    } else {
        DerhamDeterminant {
            value: int(1),
            trivial: true,
        }
    }
}

fn ser_pq<S: serde::Serializer>(q: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(q))
}

/// The K-theory-free factor `A` with `zeta*_F(n) = +- A h R / w`:
/// `monomial * |D|^(half_disc_exp / 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFactor {
    pub monomial: PiMonomial,
    pub half_disc_exp: i64,
    pub two_exp: i64,
    pub two_pi_exp: i64,
}

pub fn closed_factor(f: &NumberFieldRecord, n: i64) -> ClosedFactor {
    if n <= 0 {
        return ClosedFactor {
            monomial: PiMonomial::one(),
            half_disc_exp: 0,
            two_exp: 0,
            two_pi_exp: 0,
        };
    }
    let (r1, r2, deg) = (i64::from(f.r1), i64::from(f.r2), i64::from(f.degree));
    let two_exp = r1 * (delta(1, n) - delta(2, n));
    let two_pi_exp = deg * n - r2 - r1 * delta(1, n);
    let coeff = correction_factor(f, n) * pow_int(&int(2), two_exp + two_pi_exp);
    ClosedFactor {
        monomial: PiMonomial::new(coeff, two_pi_exp),
        half_disc_exp: 1 - 2 * n,
        two_exp,
        two_pi_exp,
    }
}

impl ClosedFactor {
    pub fn to_ball(&self, d: u64, prec: u32) -> Result<BallReal> {
        let wp = prec + 16;
        let sqrt_d = BallReal::from_int(d, wp).sqrt()?;
        Ok(self
            .monomial
            .to_ball(wp)
            .mul(&sqrt_d.pow_i(self.half_disc_exp)?)
            .with_prec(prec))
    }

    pub fn describe(&self) -> String {
        format!("{} * |D|^({}/2)", self.monomial, self.half_disc_exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    UnresolvedSymbolic,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FundamentalLineReport {
    pub field: String,
    pub twist: i64,
    pub order: i64,
    pub analytic: String,
    /// `A` with `zeta*_F(n) = +- A h R / w`.
    pub closed_factor: String,
    /// The K-theory symbol the prediction is written in.
    pub symbol: String,
    pub predicted: Option<String>,
    pub defect: Option<f64>,
    /// `|zeta*_F(n)| / A`, the value the symbol must take.
    pub solved_ratio: String,
    #[serde(serialize_with = "ser_opt_pq")]
    pub reconstructed: Option<ExactRational>,
    pub status: Status,
}

fn ser_opt_pq<S: serde::Serializer>(q: &Option<ExactRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&to_pq(q)),
        None => s.serialize_none(),
    }
}

/// Largest denominator tried when reconstructing a solved ratio.
pub const RECONSTRUCT_MAX_DEN: u64 = 10_000;

/// The predicted leading coefficient of `zeta_F` at `s = n`, set against the
/// analytic value. With K-theory data (argument first, then the record's own)
/// the status is a relative comparison against `tol`; without, the symbol is
/// solved for and tentatively reconstructed as a rational.
pub fn special_value_prediction(
    f: &NumberFieldRecord,
    n: i64,
    k: Option<&KTheoryData>,
    tol: f64,
    prec: u32,
) -> Result<FundamentalLineReport> {
    let analytic = dedekind_zeta_leading(f, n, prec)?;
    special_value_against(f, n, &analytic, k, tol, prec)
}

/// As [`special_value_prediction`] with a precomputed analytic value.
pub fn special_value_against(
    f: &NumberFieldRecord,
    n: i64,
    analytic: &LeadingTaylor,
    k: Option<&KTheoryData>,
    tol: f64,
    prec: u32,
) -> Result<FundamentalLineReport> {
    let m = if n >= 1 { n } else { 1 - n };
    let wp = prec + GUARD_BITS;
    let factor = closed_factor(f, n);
    let a = factor.to_ball(f.abs_disc(), wp)?;
    let value = analytic.to_ball(wp);
    let sign = value
        .sign()
        .ok_or(Error::UnverifiedOrder { point: n, order: analytic.order() })?;
    let solved = value.abs().div(&a)?;
    let reconstructed = if solved.rel_width() < 1e-20 {
        reconstruct(&solved, &BigInt::from(RECONSTRUCT_MAX_DEN))
    } else {
        None
    };
    let entry = k.or(f.invariants.as_ref()).and_then(|k| k.get(m));
    let (predicted, defect, status) = match entry {
        Some(e) => {
            let hrw = e
                .regulator
                .mul_int(e.h as i64)
                .div_int(e.w as i64);
            let pred = a.mul(&hrw).mul_int(i64::from(sign));
            let rel = pred.div(&value)?.sub(&BallReal::one(wp)).abs();
            let upper = rel.to_f64() + rel.radius_f64();
            let status = if upper <= tol { Status::Pass } else { Status::Fail };
            (Some(pred.to_sci_string(30)), Some(upper), status)
        }
        None => (None, None, Status::UnresolvedSymbolic),
    };
    Ok(FundamentalLineReport {
        field: f.label.clone(),
        twist: n,
        order: analytic.order(),
        analytic: analytic.coefficient().to_string(),
        closed_factor: factor.describe(),
        symbol: format!("{}h_{m} R_{m} / w_{m}", if n <= 0 { "+-" } else { "" }),
        predicted,
        defect,
        solved_ratio: solved.to_sci_string(30),
        reconstructed,
        status,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeConsistency {
    pub twist: i64,
    /// `A_n = |zeta*(n) / zeta*(1-n)|` predicted from the closed forms.
    pub closed_ratio: String,
    /// `|D|^(1/2-n) |G(1-n)/G(n)|` from the functional equation.
    pub symbolic_ratio: String,
    /// Whether the two agree as exact symbols.
    pub exact_agree: bool,
    pub numeric_ratio: String,
    pub numeric_agree: bool,
    /// Sign of `zeta*(n) / zeta*(1-n)`.
    pub sign: i32,
}

/// Ratio of the predictions at `n >= 1` and `1 - n`, where the K-theory
/// symbols cancel, compared exactly with the functional equation and
/// numerically with the analytic values.
pub fn fe_consistency_check(f: &NumberFieldRecord, n: i64, prec: u32) -> Result<FeConsistency> {
    if n < 1 {
        return Err(Error::Domain(format!("functional-equation check needs n >= 1, got {n}")));
    }
    let closed = closed_factor(f, n);
    let (_, g_m) = field_gamma_leading(f, 1 - n);
    let (_, g_n) = field_gamma_leading(f, n);
    let symbolic = g_m.div(&g_n)?.abs();
    let exact_agree = closed.monomial == symbolic && closed.half_disc_exp == 1 - 2 * n;
    let wp = prec + GUARD_BITS;
    let zn = dedekind_zeta_leading(f, n, prec)?;
    let zm = dedekind_zeta_leading(f, 1 - n, prec)?;
    let ratio = zn.to_ball(wp).div(&zm.to_ball(wp))?;
    let sign = ratio.sign().ok_or(Error::UnverifiedOrder { point: n, order: zn.order() })?;
    let a = closed.to_ball(f.abs_disc(), wp)?;
    let numeric_agree = ratio.abs().overlaps(&a);
    Ok(FeConsistency {
        twist: n,
        closed_ratio: closed.describe(),
        symbolic_ratio: format!("{symbolic} * |D|^({}/2)", 1 - 2 * n),
        exact_agree,
        numeric_ratio: ratio.to_sci_string(30),
        numeric_agree,
        sign,
    })
}
