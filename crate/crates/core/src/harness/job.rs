//! Verification jobs: a target, a set of twists and a set of checks, run in a
//! worker pool with one task per twist.

use super::ingest::VarietyRecord;
use crate::charp::{
    detstar_trivialization, functional_equation, milne_chi, order_leading_at, point_count_curve,
    weil_etale_rank_order, zeta_from_weil_polys, Poly,
};
use crate::dirichlet::{dedekind_zeta_leading, NumberFieldRecord};
use crate::error::{Error, Result};
use crate::number_ring::{
    cohomology_tables, duality_report, fe_consistency_check, special_value_against, vanishing_order_prediction,
    Status,
};
use crate::numeric::rational::to_pq;
use crate::numeric::Coefficient;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::str::FromStr;

pub const DEFAULT_PRECISION: u32 = 128;
pub const DEFAULT_TOLERANCE: f64 = 1e-20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Order,
    SpecialValue,
    FeConsistency,
    Duality,
    Tables,
    Detstar,
    RankOrder,
    /// Exact functional equation of `Z(X, t)`.
    ZetaFe,
    /// `P_1` against a point count of the variety's affine model.
    PointCount,
}

impl Check {
    pub const FIELD: [Check; 5] = [Check::Order, Check::SpecialValue, Check::FeConsistency, Check::Duality, Check::Tables];
    pub const VARIETY: [Check; 5] = [Check::Order, Check::Detstar, Check::RankOrder, Check::ZetaFe, Check::PointCount];

    pub fn name(self) -> &'static str {
        match self {
            Check::Order => "order",
            Check::SpecialValue => "special-value",
            Check::FeConsistency => "fe-consistency",
            Check::Duality => "duality",
            Check::Tables => "tables",
            Check::Detstar => "detstar",
            Check::RankOrder => "rank-order",
            Check::ZetaFe => "zeta-fe",
            Check::PointCount => "point-count",
        }
    }

    /// Checks that do not depend on the twist run once.
    fn per_twist(self) -> bool {
        !matches!(self, Check::ZetaFe | Check::PointCount)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        [
            Check::Order,
            Check::SpecialValue,
            Check::FeConsistency,
            Check::Duality,
            Check::Tables,
            Check::Detstar,
            Check::RankOrder,
            Check::ZetaFe,
            Check::PointCount,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| Error::Schema(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Field(NumberFieldRecord),
    Variety(VarietyRecord),
}

impl Target {
    pub fn label(&self) -> &str {
        match self {
            Target::Field(f) => &f.label,
            Target::Variety(v) => &v.label,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationJob {
    pub label: String,
    pub target: Target,
    pub twists: Vec<i64>,
    pub checks: Vec<Check>,
    pub precision: u32,
    pub tolerance: f64,
}

impl VerificationJob {
    /// Rejects checks that do not apply to the target kind.
    pub fn new(target: Target, twists: Vec<i64>, checks: Vec<Check>) -> Result<VerificationJob> {
        let allowed: &[Check] = match target {
            Target::Field(_) => &Check::FIELD,
            Target::Variety(_) => &Check::VARIETY,
        };
        if let Some(c) = checks.iter().find(|c| !allowed.contains(c)) {
            return Err(Error::Schema(format!("check {} does not apply to {}", c.name(), target.label())));
        }
        if twists.is_empty() {
            return Err(Error::Schema("job has no twists".into()));
        }
        let mut checks = checks;
        checks.sort();
        checks.dedup();
        Ok(VerificationJob {
            label: target.label().to_string(),
            target,
            twists,
            checks,
            precision: DEFAULT_PRECISION,
            tolerance: DEFAULT_TOLERANCE,
        })
    }

    pub fn with_precision(mut self, prec: u32) -> Result<VerificationJob> {
        if prec < 64 {
            return Err(Error::Schema(format!("precision {prec} is below 64 bits")));
        }
        self.precision = prec;
        Ok(self)
    }

    pub fn with_tolerance(mut self, tol: f64) -> Result<VerificationJob> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Schema(format!("tolerance {tol} is not in (0, 1)")));
        }
        self.tolerance = tol;
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: Check,
    pub twist: Option<i64>,
    pub status: Status,
    pub detail: String,
    /// The formula the check rests on.
    pub provenance: &'static str,
    pub precision: u32,
    /// Radius of the final ball, when the check involves one.
    pub radius: Option<f64>,
    pub values: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unresolved_symbolic: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub job: String,
    pub target: String,
    pub precision: u32,
    pub tolerance: f64,
    pub status: Status,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl Report {
    /// Fails iff some record fails; unresolved symbolic records do not fail a job.
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn records_for(&self, check: Check) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(move |r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} [{}] prec {} tol {:e}: {:?} ({} pass, {} fail, {} unresolved)\n",
            self.job,
            self.target,
            self.precision,
            self.tolerance,
            self.status,
            self.summary.pass,
            self.summary.fail,
            self.summary.unresolved_symbolic
        );
        for r in &self.records {
            let twist = r.twist.map(|n| format!("n={n}")).unwrap_or_else(|| "-".into());
            s += &format!("  {:<15} {:>5}  {:<18} {}\n", r.check.name(), twist, format!("{:?}", r.status), r.detail);
        }
        s
    }
}

struct Ctx<'a> {
    job: &'a VerificationJob,
    n: Option<i64>,
}

impl Ctx<'_> {
    fn record(&self, check: Check, status: Status, detail: String, provenance: &'static str) -> CheckRecord {
        CheckRecord {
            check,
            twist: self.n,
            status,
            detail,
            provenance,
            precision: self.job.precision,
            radius: None,
            values: Value::Null,
        }
    }

    fn error(&self, check: Check, e: &Error, provenance: &'static str) -> CheckRecord {
        self.record(check, Status::Fail, e.to_string(), provenance)
    }
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn coefficient_json(c: &Coefficient, prec: u32) -> (Value, Option<f64>) {
    let b = c.to_ball(prec);
    let radius = b.radius_f64();
    let exact = c.exact().map(to_pq);
    (
        json!({"coefficient": c.to_string(), "exact": exact, "midpoint": b.to_sci_string(30), "radius": radius}),
        Some(radius),
    )
}

fn field_check(f: &NumberFieldRecord, check: Check, ctx: &Ctx) -> CheckRecord {
    let n = ctx.n.expect("field checks run per twist");
    let prec = ctx.job.precision;
    match check {
        Check::Order => {
            const P: &str = "rho_n closed form = sum (-1)^i i dim H^i_ar,c(R~(n)) = ord_(s=n) zeta_F";
            let analytic = dedekind_zeta_leading(f, n, prec);
            let pred = vanishing_order_prediction(f, n);
            match (analytic, pred) {
                (Ok(a), Ok(p)) => {
                    let ok = a.order() == p.closed_form && p.closed_form == p.euler_characteristic;
                    let mut r = ctx.record(
                        check,
                        pass_if(ok),
                        format!("analytic {}, closed {}, euler {}", a.order(), p.closed_form, p.euler_characteristic),
                        P,
                    );
                    r.values = json!({"analytic": a.order(), "closed_form": p.closed_form, "euler_characteristic": p.euler_characteristic});
                    r
                }
                (Err(e), _) | (_, Err(e)) => ctx.error(check, &e, P),
            }
        }
        Check::SpecialValue => {
            const P: &str = "zeta*_F(n) = |D|^(1-n) C 2^(r1(d1n-d2n)) (2pi)^(deg n-r2-r1 d1n) h_n R_n/(w_n sqrt|D|); +-h_(1-n)R_(1-n)/w_(1-n) for n<=0";
            let res = dedekind_zeta_leading(f, n, prec)
                .and_then(|a| special_value_against(f, n, &a, None, ctx.job.tolerance, prec).map(|r| (a, r)));
            match res {
                Ok((a, r)) => {
                    let detail = match r.status {
                        Status::UnresolvedSymbolic => format!(
                            "{} = {} (rational {})",
                            r.symbol,
                            r.solved_ratio,
                            r.reconstructed.as_ref().map(to_pq).unwrap_or_else(|| "none".into())
                        ),
                        _ => format!("relative defect {:e}", r.defect.unwrap_or(f64::NAN)),
                    };
                    let mut rec = ctx.record(check, r.status, detail, P);
                    let (_, radius) = coefficient_json(a.coefficient(), prec);
                    rec.radius = radius;
                    rec.values = serde_json::to_value(&r).expect("serializable");
                    rec
                }
                Err(e) => ctx.error(check, &e, P),
            }
        }
        Check::FeConsistency => {
            const P: &str = "predicted(m)/predicted(1-m) = |D|^(1/2-m) |G(1-m)/G(m)| with m = max(n, 1-n)";
            let m = n.max(1 - n);
            match fe_consistency_check(f, m, prec) {
                Ok(r) => {
                    let mut rec = ctx.record(
                        check,
                        pass_if(r.exact_agree && r.numeric_agree),
                        format!("m = {m}: exact {}, numeric {}", r.exact_agree, r.numeric_agree),
                        P,
                    );
                    rec.values = serde_json::to_value(&r).expect("serializable");
                    rec
                }
                Err(e) => ctx.error(check, &e, P),
            }
        }
        Check::Duality => {
            const P: &str = "rank H^i_W(n) = rank H^(3-i)_W(1-n); H^i_W(n)_tor dual to H^(4-i)_W(1-n)_tor";
            let r = duality_report(f, n);
            let detail = r
                .rank_failures
                .iter()
                .chain(&r.torsion_failures)
                .map(|x| format!("degree {}: {}", x.degree, x.detail))
                .collect::<Vec<_>>()
                .join("; ");
            let mut rec = ctx.record(check, pass_if(r.holds()), if detail.is_empty() { "holds".into() } else { detail }, P);
            rec.values = serde_json::to_value(&r).expect("serializable");
            rec
        }
        Check::Tables => {
            const P: &str = "Weil-etale, Weil-Arakelov and compact-support tables of Spec O_F";
            let [w, ar, c] = cohomology_tables(f, n);
            let euler = c.euler_order();
            let mut rec = ctx.record(
                check,
                pass_if(euler == f.rho(n)),
                format!("compact-support Euler characteristic {euler}, rho_n {}", f.rho(n)),
                P,
            );
            let show = |t: &crate::number_ring::CohomologyTable| {
                t.entries.iter().map(|(i, g)| (i.to_string(), g.to_string())).collect::<std::collections::BTreeMap<_, _>>()
            };
            rec.values = json!({"W": show(&w), "ar": show(&ar), "ar,c": show(&c), "real_dims": c.real_dims});
            rec
        }
        _ => unreachable!("rejected at job construction"),
    }
}

fn variety_check(v: &VarietyRecord, check: Check, ctx: &Ctx) -> CheckRecord {
    let w = &v.weil;
    match check {
        Check::Order => {
            const P: &str = "ord and Z* of Z(X,t) at t = q^(-n) by exact division by 1 - q^n t";
            let n = ctx.n.expect("per twist");
            let l = order_leading_at(w, n);
            // the rank bookkeeping is an independent count of the same order
            let (status, detail) = match weil_etale_rank_order(w, n) {
                Ok(r) => (pass_if(r.order_t == l.order()), format!("order {}, Z* = {}", l.order(), l.coefficient())),
                Err(e) => (Status::Fail, e.to_string()),
            };
            let mut rec = ctx.record(check, status, detail, P);
            let chi = v.hodge.as_ref().map(|h| milne_chi(h, n));
            rec.values = json!({
                "order": l.order(),
                "leading": l.coefficient().to_string(),
                "correction_factor": "1/1",
                "milne_chi": chi,
            });
            rec
        }
        Check::Detstar => {
            const P: &str = "prod_i Det*(1 - phi q^(-n) | H^i)^((-1)^(i+1)) from characteristic polynomials";
            let n = ctx.n.expect("per twist");
            let d = detstar_trivialization(w, n);
            let (status, detail) = match d.agrees_with_limit {
                Some(ok) => (pass_if(ok), format!("Det* = {}, agrees with Z*: {ok}", to_pq(&d.value))),
                None => (Status::UnresolvedSymbolic, "not semisimple at zero; equality not claimed".into()),
            };
            let mut rec = ctx.record(check, status, detail, P);
            rec.values = serde_json::to_value(&d).expect("serializable");
            rec
        }
        Check::RankOrder => {
            const P: &str = "rank H^i_W(Z(n)) = m_i(n) + m_(i-1)(n); sum (-1)^i i rank = ord_(t=q^(-n)) Z";
            match weil_etale_rank_order(w, ctx.n.expect("per twist")) {
                Ok(r) => {
                    let mut rec = ctx.record(
                        check,
                        Status::Pass,
                        format!("euler {} = ord_t {} = ord_s {}", r.euler_characteristic, r.order_t, r.order_s),
                        P,
                    );
                    rec.values = serde_json::to_value(&r).expect("serializable");
                    rec
                }
                Err(e) => ctx.error(check, &e, P),
            }
        }
        Check::ZetaFe => {
            const P: &str = "Z(1/(q^e t)) = +- q^(e chi/2) t^chi Z(t)";
            let z = zeta_from_weil_polys(w);
            match functional_equation(w) {
                Ok(fe) => {
                    let mut rec = ctx.record(check, Status::Pass, format!("Z = {z}, chi = {}, sign {}", fe.chi, fe.sign), P);
                    rec.values = json!({"zeta": z.to_string(), "chi": fe.chi, "sign": fe.sign});
                    rec
                }
                Err(e) => ctx.error(check, &e, P),
            }
        }
        Check::PointCount => {
            const P: &str = "P_1 = 1 - a t + q t^2 with a = q + 1 - #X(F_q) by enumeration";
            let Some(curve) = &v.curve else {
                return ctx.record(check, Status::UnresolvedSymbolic, "no affine model supplied".into(), P);
            };
            match point_count_curve(curve, w.q()) {
                Ok(c) => {
                    let expected = Poly::from_ints(&c.p1);
                    let ok = w.dim() == 1 && w.poly(1) == expected;
                    let mut rec = ctx.record(
                        check,
                        pass_if(ok),
                        format!("#X(F_q) = {}, counted P_1 = {expected}, given P_1 = {}", c.count, w.poly(1)),
                        P,
                    );
                    rec.values = serde_json::to_value(&c).expect("serializable");
                    rec
                }
                Err(e) => ctx.error(check, &e, P),
            }
        }
        _ => unreachable!("rejected at job construction"),
    }
}

fn run_task(job: &VerificationJob, check: Check, n: Option<i64>) -> CheckRecord {
    let ctx = Ctx { job, n };
    match &job.target {
        Target::Field(f) => field_check(f, check, &ctx),
        Target::Variety(v) => variety_check(v, check, &ctx),
    }
}

/// Runs every requested check; one pool task per twist, records in a fixed order.
pub fn run_verification(job: &VerificationJob) -> Report {
    let once: Vec<Check> = job.checks.iter().copied().filter(|c| !c.per_twist()).collect();
    let per: Vec<Check> = job.checks.iter().copied().filter(|c| c.per_twist()).collect();
    let mut records: Vec<CheckRecord> = once.iter().map(|&c| run_task(job, c, None)).collect();
    let by_twist: Vec<Vec<CheckRecord>> = job
        .twists
        .par_iter()
        .map(|&n| per.iter().map(|&c| run_task(job, c, Some(n))).collect())
        .collect();
    records.extend(by_twist.into_iter().flatten());
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        unresolved_symbolic: count(Status::UnresolvedSymbolic),
    };
    Report {
        job: job.label.clone(),
        target: job.target.label().to_string(),
        precision: job.precision,
        tolerance: job.tolerance,
        status: if summary.fail == 0 { Status::Pass } else { Status::Fail },
        summary,
        records,
    }
}
