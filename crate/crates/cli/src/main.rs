//! Command-line front end. Exit codes: 0 all checks pass, 1 some check fails,
//! 2 the input could not be read or validated.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use zetaval::charp::{
    detstar_trivialization, functional_equation, milne_chi, order_leading_at, point_count_curve,
    weil_etale_rank_order, zeta_from_weil_polys, CurveSpec,
};
use zetaval::dirichlet::{dedekind_zeta_leading, quadratic_invariants};
use zetaval::harness::{
    ingest_field, ingest_job, ingest_variety, parse_twist_range, run_verification, Check, Target, VerificationJob,
};
use zetaval::number_ring::{cohomology_tables, vanishing_order_prediction};
use zetaval::numeric::rational::to_pq;
use zetaval::Error;

#[derive(Parser)]
#[command(name = "zetaval", version, about = "Zeta leading data and their cohomological predictions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Working precision in bits.
    #[arg(long, global = true)]
    prec: Option<u32>,
    /// Relative tolerance for special-value comparisons.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Leading Taylor data of the Dedekind zeta function.
    Eval(FieldArgs),
    /// Vanishing orders: closed form, Euler characteristic and analytic.
    Order(FieldArgs),
    /// Cohomology tables of Spec O_F.
    Tables(FieldArgs),
    /// Run a verification job file, or an ad hoc job on a field or variety.
    Verify(VerifyArgs),
    /// Zeta function data of a variety over a finite field.
    Charp(VarietyArgs),
    /// Independent oracles.
    Oracle {
        #[command(subcommand)]
        oracle: Oracle,
    },
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    field: PathBuf,
    /// Twist or inclusive range `a..b`.
    #[arg(long, allow_hyphen_values = true)]
    n: String,
}

#[derive(Args)]
struct VarietyArgs {
    #[arg(long)]
    variety: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    n: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Job file.
    job: Option<PathBuf>,
    #[arg(long, conflicts_with = "job")]
    field: Option<PathBuf>,
    #[arg(long, conflicts_with_all = ["job", "field"])]
    variety: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    /// Comma-separated checks; all applicable checks by default.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
}

#[derive(Subcommand)]
enum Oracle {
    /// Class number, regulator and roots of unity of a quadratic field.
    Quadratic {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Point count of a curve over F_p.
    Points {
        #[arg(long)]
        p: u64,
        /// `a1,a2,a3,a4,a6` of a Weierstrass equation.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weierstrass: Option<Vec<i64>>,
        /// Ascending coefficients of f in y^2 = f(x).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "weierstrass")]
        hyperelliptic: Option<Vec<i64>>,
    },
}

/// Input errors exit with 2, computational failures with 1.
enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Check(e.to_string())
    }
}

fn input<T>(r: zetaval::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn twists(s: &str) -> Result<Vec<i64>, Failure> {
    input(parse_twist_range(s))
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

fn eval(c: &Common, a: &FieldArgs) -> Result<Output, Failure> {
    let f = input(ingest_field(&a.field))?;
    let prec = c.prec.unwrap_or(128);
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in twists(&a.n)? {
        let l = dedekind_zeta_leading(&f, n, prec)?;
        let b = l.to_ball(prec);
        rows.push(json!({
            "n": n,
            "order": l.order(),
            "coefficient": l.coefficient().to_string(),
            "exact": l.coefficient().exact().map(to_pq),
            "midpoint": b.to_sci_string(40),
            "radius": b.radius_f64(),
            "precision": prec,
        }));
        text += &format!("{} n={n}: order {}, leading {}\n", f.label, l.order(), l.coefficient());
    }
    Ok(Output {
        json: json!({"field": f.label, "values": rows}),
        text,
        ok: true,
    })
}

fn order(c: &Common, a: &FieldArgs) -> Result<Output, Failure> {
    let f = input(ingest_field(&a.field))?;
    let prec = c.prec.unwrap_or(128);
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for n in twists(&a.n)? {
        let p = vanishing_order_prediction(&f, n)?;
        let analytic = dedekind_zeta_leading(&f, n, prec).map(|l| l.order());
        let agree = analytic.as_ref().is_ok_and(|&o| o == p.closed_form);
        ok &= agree;
        let shown = match &analytic {
            Ok(o) => o.to_string(),
            Err(e) => e.to_string(),
        };
        rows.push(json!({"n": n, "closed_form": p.closed_form, "euler_characteristic": p.euler_characteristic,
            "analytic": analytic.ok(), "agree": agree}));
        text += &format!("n={n}: closed {}, euler {}, analytic {shown}\n", p.closed_form, p.euler_characteristic);
    }
    Ok(Output {
        json: json!({"field": f.label, "orders": rows}),
        text,
        ok,
    })
}

fn tables(a: &FieldArgs) -> Result<Output, Failure> {
    let f = input(ingest_field(&a.field))?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in twists(&a.n)? {
        let ts = cohomology_tables(&f, n);
        text += &format!("{} n={n}\n", f.label);
        for t in &ts {
            let cells: Vec<String> = t.entries.iter().map(|(i, g)| format!("H^{i} = {g}")).collect();
            text += &format!("  {:?}: {}\n", t.theory, if cells.is_empty() { "0".into() } else { cells.join(", ") });
        }
        rows.push(serde_json::to_value(&ts).expect("serializable"));
    }
    Ok(Output {
        json: json!({"field": f.label, "tables": rows}),
        text,
        ok: true,
    })
}

fn verify(c: &Common, a: &VerifyArgs) -> Result<Output, Failure> {
    let mut job = match (&a.job, &a.field, &a.variety) {
        (Some(j), _, _) => input(ingest_job(j))?,
        (None, f, v) => {
            let (target, all): (Target, &[Check]) = match (f, v) {
                (Some(f), None) => (Target::Field(input(ingest_field(f))?), &Check::FIELD),
                (None, Some(v)) => (Target::Variety(input(ingest_variety(v))?), &Check::VARIETY),
                _ => return Err(Failure::Input(Error::Schema("verify needs a job file, --field or --variety".into()))),
            };
            let n = a
                .n
                .as_deref()
                .ok_or_else(|| Failure::Input(Error::Schema("--n is required without a job file".into())))?;
            let checks = if a.checks.is_empty() {
                all.to_vec()
            } else {
                input(a.checks.iter().map(|s| s.parse()).collect())?
            };
            input(VerificationJob::new(target, twists(n)?, checks))?
        }
    };
    if let Some(p) = c.prec {
        job = input(job.with_precision(p))?;
    }
    if let Some(t) = c.tol {
        job = input(job.with_tolerance(t))?;
    }
    let r = run_verification(&job);
    Ok(Output {
        json: serde_json::to_value(&r).expect("serializable"),
        text: r.to_text(),
        ok: r.passed(),
    })
}

fn charp(a: &VarietyArgs) -> Result<Output, Failure> {
    let v = input(ingest_variety(&a.variety))?;
    let w = &v.weil;
    let z = zeta_from_weil_polys(w);
    let fe = functional_equation(w)?;
    let mut text = format!("{}: Z = {z}, chi = {}, sign {}\n", v.label, fe.chi, fe.sign);
    let mut rows = Vec::new();
    let mut ok = true;
    for n in twists(&a.n)? {
        let l = order_leading_at(w, n);
        let d = detstar_trivialization(w, n);
        let r = weil_etale_rank_order(w, n);
        ok &= r.is_ok() && d.agrees_with_limit != Some(false);
        let chi = v.hodge.as_ref().map(|h| milne_chi(h, n));
        text += &format!(
            "n={n}: order {}, Z* = {}, Det* = {}, semisimple {}, milne chi {}\n",
            l.order(),
            l.coefficient(),
            to_pq(&d.value),
            d.semisimple_at_zero,
            chi.map(|c| c.to_string()).unwrap_or_else(|| "-".into())
        );
        rows.push(json!({
            "n": n,
            "order": l.order(),
            "leading": l.coefficient().to_string(),
            "detstar": d,
            "rank_order": r.as_ref().ok(),
            "rank_order_error": r.as_ref().err().map(|e| e.to_string()),
            "milne_chi": chi,
            "correction_factor": "1/1",
        }));
    }
    Ok(Output {
        json: json!({"variety": v.label, "zeta": z.to_string(), "chi": fe.chi, "sign": fe.sign, "twists": rows}),
        text,
        ok,
    })
}

fn oracle(c: &Common, o: &Oracle) -> Result<Output, Failure> {
    match o {
        Oracle::Quadratic { disc } => {
            let q = input(quadratic_invariants(*disc, c.prec.unwrap_or(128)))?;
            let unit = q.unit.as_ref().map(|(x, y, s)| json!({"x": x.to_string(), "y": y.to_string(), "norm": s}));
            let reg = q.regulator.to_sci_string(40);
            Ok(Output {
                text: format!("D = {disc}: h = {}, R = {reg}, w = {}\n", q.h, q.w),
                json: json!({"disc": disc, "h": q.h, "w": q.w, "regulator": reg, "unit": unit}),
                ok: true,
            })
        }
        Oracle::Points { p, weierstrass, hyperelliptic } => {
            let spec = match (weierstrass, hyperelliptic) {
                (Some(a), None) if a.len() == 5 => CurveSpec::Weierstrass {
                    a: [a[0], a[1], a[2], a[3], a[4]],
                },
                (None, Some(f)) => CurveSpec::Hyperelliptic { f: f.clone() },
                _ => return Err(Failure::Input(Error::Schema("give --weierstrass with 5 coefficients or --hyperelliptic".into()))),
            };
            let r = input(point_count_curve(&spec, *p))?;
            Ok(Output {
                text: format!("#X(F_{p}) = {}, genus {}, P_1 = {:?}\n", r.count, r.genus, r.p1),
                json: serde_json::to_value(&r).expect("serializable"),
                ok: true,
            })
        }
    }
}

fn emit(c: &Common, o: &Output) -> Result<(), Failure> {
    let s = match c.format {
        Format::Json => serde_json::to_string_pretty(&o.json).expect("serializable") + "\n",
        Format::Text => o.text.clone(),
    };
    match &c.out {
        Some(p) => std::fs::write(p, s).map_err(|e| Failure::Input(Error::Io(format!("{}: {e}", Path::display(p))))),
        None => {
            print!("{s}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let result = match &cli.command {
        Command::Eval(a) => eval(c, a),
        Command::Order(a) => order(c, a),
        Command::Tables(a) => tables(a),
        Command::Verify(a) => verify(c, a),
        Command::Charp(a) => charp(a),
        Command::Oracle { oracle: o } => oracle(c, o),
    };
    match result.and_then(|o| emit(c, &o).map(|_| o.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("input error: {e}");
            ExitCode::from(2)
        }
    }
}
