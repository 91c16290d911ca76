//! JSON ingestion of number-field records, varieties over finite fields and
//! verification jobs.

use crate::charp::{CurveSpec, HodgeNumbersFp, WeilPolySet};
use crate::dirichlet::{DirichletCharacter, KEntry, KTheoryData, NumberFieldRecord};
use crate::error::{Error, Result};
use crate::numeric::BallReal;
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Working precision used to parse regulators.
const PARSE_PREC: u32 = 1024;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharacter {
    modulus: u64,
    /// `[a, k]`: `chi(a) = e(k / order)`.
    values: Vec<(u64, u64)>,
    order: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawK {
    h: u64,
    w: u64,
    #[serde(rename = "R")]
    regulator: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    label: String,
    degree: u32,
    r1: u32,
    r2: u32,
    disc: i64,
    #[serde(default)]
    characters: Option<Vec<RawCharacter>>,
    #[serde(default)]
    invariants: Option<BTreeMap<String, RawK>>,
}

fn schema<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> Error + '_ {
    move |e| Error::Schema(format!("{what}: {e}"))
}

fn parse_key(k: &str, what: &str) -> Result<i64> {
    k.trim().parse().map_err(|_| Error::Schema(format!("{what}: bad key {k:?}")))
}

fn parse_pair(k: &str, what: &str) -> Result<(i64, i64)> {
    let (a, b) = k
        .split_once(',')
        .ok_or_else(|| Error::Schema(format!("{what}: key {k:?} is not \"i,j\"")))?;
    Ok((parse_key(a, what)?, parse_key(b, what)?))
}

/// A regulator given as a decimal string or a JSON number.
fn parse_regulator(v: &Value) -> Result<BallReal> {
    match v {
        Value::String(s) => BallReal::parse_decimal(s, PARSE_PREC),
        Value::Number(n) => BallReal::parse_decimal(&n.to_string(), PARSE_PREC),
        _ => Err(Error::Schema("regulator R must be a decimal string or number".into())),
    }
}

/// Parses and validates a field record.
pub fn field_from_json(text: &str) -> Result<NumberFieldRecord> {
    let raw: RawField = serde_json::from_str(text).map_err(schema("field record"))?;
    let characters = raw
        .characters
        .map(|cs| {
            cs.into_iter()
                .map(|c| DirichletCharacter::from_generators(c.modulus, &c.values, c.order))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let invariants = raw
        .invariants
        .map(|m| {
            let mut k = KTheoryData::new();
            for (key, e) in m {
                let n = parse_key(&key, "invariants")?;
                k.insert(
                    n,
                    KEntry {
                        h: e.h,
                        w: e.w,
                        regulator: parse_regulator(&e.regulator)?,
                    },
                )?;
            }
            Ok::<_, Error>(k)
        })
        .transpose()?;
    NumberFieldRecord::new(raw.label, raw.degree, raw.r1, raw.r2, raw.disc, characters, invariants)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn ingest_field(path: &Path) -> Result<NumberFieldRecord> {
    field_from_json(&read(path)?)
}

/// A variety over `F_q` with optional Hodge numbers and plane model.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietyRecord {
    pub label: String,
    pub weil: WeilPolySet,
    pub hodge: Option<HodgeNumbersFp>,
    /// Affine model whose point count must reproduce `P_1`.
    pub curve: Option<CurveSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVariety {
    label: String,
    q: u64,
    dim: u32,
    polys: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    jordan: Option<BTreeMap<String, Vec<u32>>>,
    #[serde(default)]
    hodge: Option<BTreeMap<String, u32>>,
    #[serde(default)]
    curve: Option<CurveSpec>,
}

pub fn variety_from_json(text: &str) -> Result<VarietyRecord> {
    let raw: RawVariety = serde_json::from_str(text).map_err(schema("variety record"))?;
    let mut polys = BTreeMap::new();
    for (k, c) in raw.polys {
        let i = parse_key(&k, "polys")?;
        let i = u32::try_from(i).map_err(|_| Error::Schema(format!("polys: negative degree {i}")))?;
        polys.insert(i, c.into_iter().map(BigInt::from).collect());
    }
    let mut jordan = BTreeMap::new();
    for (k, sizes) in raw.jordan.unwrap_or_default() {
        let (i, lambda) = parse_pair(&k, "jordan")?;
        let i = u32::try_from(i).map_err(|_| Error::Schema(format!("jordan: negative degree {i}")))?;
        jordan.insert((i, BigInt::from(lambda)), sizes);
    }
    let weil = WeilPolySet::new(raw.q, raw.dim, polys, jordan)?;
    let hodge = raw
        .hodge
        .map(|m| {
            let mut h = BTreeMap::new();
            for (k, d) in m {
                let (i, j) = parse_pair(&k, "hodge")?;
                let ij = (u32::try_from(i), u32::try_from(j));
                match ij {
                    (Ok(i), Ok(j)) => h.insert((i, j), d),
                    _ => return Err(Error::Schema(format!("hodge: negative index in {k:?}"))),
                };
            }
            HodgeNumbersFp::new(raw.dim, h)
        })
        .transpose()?;
    Ok(VarietyRecord {
        label: raw.label,
        weil,
        hodge,
        curve: raw.curve,
    })
}

pub fn ingest_variety(path: &Path) -> Result<VarietyRecord> {
    variety_from_json(&read(path)?)
}

/// Twists as `"a..b"`, `"n"`, or a JSON list.
pub fn parse_twists(v: &Value) -> Result<Vec<i64>> {
    match v {
        Value::String(s) => parse_twist_range(s),
        Value::Number(n) => n
            .as_i64()
            .map(|n| vec![n])
            .ok_or_else(|| Error::Schema(format!("twist {n} is not an integer"))),
        Value::Array(a) => a
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| Error::Schema(format!("twist {x} is not an integer"))))
            .collect(),
        _ => Err(Error::Schema("twists must be \"a..b\", an integer or a list".into())),
    }
}

/// `"a..b"` (inclusive) or a single integer.
pub fn parse_twist_range(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::Schema(format!("bad twist range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b || b - a > 10_000 {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    field: Option<PathBuf>,
    #[serde(default)]
    variety: Option<PathBuf>,
    twists: Value,
    checks: Vec<String>,
    #[serde(default)]
    precision: Option<u32>,
    #[serde(default)]
    tolerance: Option<f64>,
}

/// Parses a job file; target paths are resolved against `base`.
pub fn job_from_json(text: &str, base: &Path) -> Result<super::job::VerificationJob> {
    use super::job::{Check, Target, VerificationJob};
    let raw: RawJob = serde_json::from_str(text).map_err(schema("job"))?;
    let target = match (raw.field, raw.variety) {
        (Some(f), None) => Target::Field(ingest_field(&base.join(f))?),
        (None, Some(v)) => Target::Variety(ingest_variety(&base.join(v))?),
        _ => return Err(Error::Schema("job needs exactly one of \"field\" and \"variety\"".into())),
    };
    let checks = raw.checks.iter().map(|c| c.parse::<Check>()).collect::<Result<Vec<_>>>()?;
    let mut job = VerificationJob::new(target, parse_twists(&raw.twists)?, checks)?;
    if let Some(label) = raw.label {
        job.label = label;
    }
    if let Some(p) = raw.precision {
        job = job.with_precision(p)?;
    }
    if let Some(t) = raw.tolerance {
        job = job.with_tolerance(t)?;
    }
    Ok(job)
}

pub fn ingest_job(path: &Path) -> Result<super::job::VerificationJob> {
    let base = path.parent().unwrap_or(Path::new("."));
    job_from_json(&read(path)?, base)
}
