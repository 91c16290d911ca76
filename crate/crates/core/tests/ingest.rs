use std::path::PathBuf;
use zetaval::harness::{ingest_field, ingest_job, ingest_variety, job_from_json, run_verification, Check};
use zetaval::number_ring::Status;

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

#[test]
fn fields_load_and_validate() {
    for (file, disc) in [("q.json", 1), ("q_i.json", -4), ("q_sqrt5.json", 5), ("q_sqrt_m23.json", -23)] {
        let f = ingest_field(&data(file)).unwrap();
        assert_eq!(f.disc, disc, "{file}");
        f.validate().unwrap();
    }
}

#[test]
fn varieties_load() {
    for p in [2, 3, 5, 7] {
        let v = ingest_variety(&data(&format!("p1_f{p}.json"))).unwrap();
        assert_eq!(v.weil.q(), p);
        assert_eq!(v.weil.euler_characteristic(), 2);
    }
    let e = ingest_variety(&data("e_f5.json")).unwrap();
    assert!(e.curve.is_some());
    assert_eq!(e.weil.betti(1), 2);
}

#[test]
fn reference_jobs_have_expected_outcomes() {
    let expect = [
        ("q_small.json", true),
        ("e_f5.json", true),
        ("q_i.json", true),
        ("q_fabricated.json", false),
        ("e_f5_perturbed.json", false),
        ("q_all.json", false),
    ];
    for (file, pass) in expect {
        let job = ingest_job(&data(&format!("jobs/{file}"))).unwrap();
        let r = run_verification(&job);
        assert_eq!(r.passed(), pass, "{file}: {}", r.to_text());
    }
}

#[test]
fn q_all_fails_only_on_table_duality() {
    let r = run_verification(&ingest_job(&data("jobs/q_all.json")).unwrap());
    for rec in &r.records {
        if rec.status == Status::Fail {
            assert_eq!(rec.check, Check::Duality, "{}", rec.detail);
        }
    }
    let failed: Vec<_> =
        r.records_for(Check::Duality).filter(|c| c.status == Status::Fail).filter_map(|c| c.twist).collect();
    assert_eq!(failed, vec![-3, -2, 3]);
}

#[test]
fn fabricated_k_group_is_caught() {
    let r = run_verification(&ingest_job(&data("jobs/q_fabricated.json")).unwrap());
    let rec = r.records_for(Check::SpecialValue).find(|c| c.twist == Some(2)).unwrap();
    assert_eq!(rec.status, Status::Fail);
}

#[test]
fn malformed_inputs_are_rejected() {
    let base = data("jobs");
    assert!(job_from_json(r#"{"field":"../q.json","twists":"0..1","checks":["nonsense"]}"#, &base).is_err());
    assert!(job_from_json(r#"{"field":"../q.json","twists":"3..1","checks":["order"]}"#, &base).is_err());
    assert!(job_from_json(r#"{"field":"../q.json","twists":[0],"checks":["detstar"]}"#, &base).is_err());
    assert!(job_from_json(r#"{"field":"../q.json","twists":[0],"checks":["order"],"extra":1}"#, &base).is_err());
    assert!(job_from_json(r#"{"field":"../absent.json","twists":[0],"checks":["order"]}"#, &base).is_err());
    assert!(job_from_json(r#"{"field":"../q.json","twists":[0],"checks":["order"]}"#, &base).is_ok());
}

#[test]
fn reports_serialize_deterministically() {
    let job = ingest_job(&data("jobs/q_sqrt_m23.json")).unwrap();
    let a = run_verification(&job).to_json();
    let b = run_verification(&job).to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(!v["records"].as_array().unwrap().is_empty());
}
