use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaval")).args(args).output().expect("spawn")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn verify(job: &str) -> Output {
    let p = data(job);
    run(&["verify", p.to_str().unwrap(), "--format", "json"])
}

#[test]
fn passing_jobs_exit_zero() {
    for job in ["jobs/q_small.json", "jobs/e_f5.json"] {
        let o = verify(job);
        assert_eq!(code(&o), 0, "{job}: {}", String::from_utf8_lossy(&o.stderr));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn failing_checks_exit_one() {
    for job in ["jobs/q_fabricated.json", "jobs/e_f5_perturbed.json"] {
        let o = verify(job);
        assert_eq!(code(&o), 1, "{job}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["status"], "fail");
        assert!(v["summary"]["fail"].as_u64().unwrap() > 0);
    }
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.json");
    assert_eq!(code(&run(&["verify", missing.to_str().unwrap()])), 2);

    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{ not json").unwrap();
    assert_eq!(code(&run(&["eval", "--field", garbled.to_str().unwrap(), "--n", "2"])), 2);

    let unknown = dir.path().join("unknown.json");
    std::fs::write(&unknown, r#"{"label":"Q","degree":1,"r1":1,"r2":0,"disc":1,"colour":3}"#).unwrap();
    assert_eq!(code(&run(&["eval", "--field", unknown.to_str().unwrap(), "--n", "2"])), 2);

    let inconsistent = dir.path().join("inconsistent.json");
    std::fs::write(&inconsistent, r#"{"label":"Q","degree":2,"r1":1,"r2":0,"disc":1}"#).unwrap();
    assert_eq!(code(&run(&["order", "--field", inconsistent.to_str().unwrap(), "--n", "0"])), 2);
}

#[test]
fn eval_text_and_json() {
    let q = data("q.json");
    let o = run(&["eval", "--field", q.to_str().unwrap(), "--n", "-1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("-1/12"), "{s}");
    let o = run(&["tables", "--field", q.to_str().unwrap(), "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(!o.stdout.is_empty());
}

#[test]
fn oracles() {
    let o = run(&["oracle", "quadratic", "--disc", "-23", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["h"], 3);
    let o = run(&["oracle", "points", "--p", "5", "--weierstrass", "0,0,0,1,0", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 4);
}

#[test]
fn charp_subcommand() {
    let e = data("e_f5.json");
    let o = run(&["charp", "--variety", e.to_str().unwrap(), "--n", "1"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn output_is_deterministic() {
    let a = verify("jobs/q_small.json");
    let b = verify("jobs/q_small.json");
    assert_eq!(a.stdout, b.stdout);
}
