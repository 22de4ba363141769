use std::collections::BTreeMap;
use std::process::{Command, Output};

use qkraw_core::qscalar::{q_binomial, LaurentScalar};
use serde_json::Value;

fn qkraw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkraw")).args(args).output().expect("spawn qkraw")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn report_schema() -> Value {
    serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap()
}

fn assert_valid_report(v: &Value) {
    let validator = jsonschema::validator_for(&report_schema()).expect("schema compiles");
    let errors: Vec<_> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn verify_passes(args: &[&str]) -> Value {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.push("--json");
    let out = qkraw(&full);
    let v = stdout_json(&out);
    assert_eq!(out.status.code(), Some(0), "{v:#}");
    assert_eq!(v["pass"], Value::Bool(true));
    assert_valid_report(&v);
    v
}

#[test]
fn uni_match_level_three() {
    let v = verify_passes(&["uni-match", "--N", "3", "--q", "0.6", "--trunc", "24"]);
    assert_eq!(v["params"]["level"], 3);
    assert_eq!(v["params"]["q"], "3/5");
}

#[test]
fn confluence_seeded() {
    let v = verify_passes(&["confluence", "--seed", "7", "--count", "500"]);
    assert_eq!(v["params"]["count"], 500);
}

#[test]
fn unitarity_trivial_level() {
    verify_passes(&["unitarity", "--N", "0"]);
}

#[test]
fn exact_suites_conform_to_schema() {
    for suite in ["multinomial", "q-one", "hopf", "oracle-h"] {
        verify_passes(&[suite]);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "confluence", "--seed", "3", "--count", "50", "--json"];
    let a = qkraw(&args);
    let b = qkraw(&args);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_qkraw"))
        .args(args)
        .env("QKRAW_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, env.stdout);
}

#[test]
fn parameter_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "no-such-suite"],
        &["verify", "uni-match", "--N", "99"],
        &["verify", "star", "--tol", "-1"],
        &["verify", "uni-match", "--q", "1.5"],
        &["series", "multinom", "--N", "2", "--m", "1,1"],
        &["rep", "apply", "--word", "3", "--N", "1", "--m", "1,0,0", "--n", "1,0,0", "--state", "5"],
        &["rep", "apply", "--word", "1", "--N", "1", "--m", "1,0,0", "--n", "1,0,0", "--state", "30"],
        &["verify", "multinomial", "--json", "--csv"],
    ];
    for args in cases {
        let out = qkraw(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_thread_count_exits_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_qkraw"))
        .args(["series", "binom", "--n", "3", "--k", "1"])
        .env("QKRAW_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rep_apply_json() {
    // π₁(t_{e1,e2}) = π₁(x12) acts as q^{k+1} on |k⟩.
    let out = qkraw(&["rep", "apply", "--word", "1", "--N", "1", "--m", "1,0,0", "--n", "0,1,0", "--state", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 1);
    let [re, im] = [obj["4"][0].as_f64().unwrap(), obj["4"][1].as_f64().unwrap()];
    assert!((re - 0.6f64.powi(5)).abs() < 1e-14, "{re}");
    assert_eq!(im, 0.0);
}

#[test]
fn rep_apply_csv() {
    let out = qkraw(&["rep", "apply", "--word", "21", "--N", "1", "--m", "1,0,0", "--n", "0,1,0", "--state", "5,7", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("state,re,im\n\"5,7\","), "{text}");
}

#[test]
fn normal_order_json() {
    let out = qkraw(&["alg", "normal-order", "x22", "x11", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    // x22 x11 = x11 x22 + (q⁻¹ − q) x12 x21
    assert_eq!(v["100010000"], serde_json::json!({"0": "1/1"}));
    assert_eq!(v["010100000"], serde_json::json!({"-1": "1/1", "1": "-1/1"}));
    assert_eq!(v.as_object().unwrap().len(), 2);
}

#[test]
fn laurent_json_round_trip() {
    let out = qkraw(&["series", "binom", "--n", "5", "--k", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let map: BTreeMap<String, String> = serde_json::from_value(v["laurent"].clone()).unwrap();
    assert_eq!(LaurentScalar::from_string_map(&map).unwrap(), q_binomial(5, 2));
    // [5 2] at q = 3/5
    assert_eq!(v["exact"], "48994/15625");
}

#[test]
fn poly_reports_imaginary_residual() {
    let out = qkraw(&["poly", "uni-shift", "--m", "1", "--n", "0", "--T", "1", "--k", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["imag_residual"].as_f64(), Some(0.0));
    assert_eq!(v["target"], 2);
}

#[test]
fn verify_csv_has_one_row_per_check() {
    let json = stdout_json(&qkraw(&["verify", "multinomial", "--json"]));
    let out = qkraw(&["verify", "multinomial", "--csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap().len(), 5);
    assert_eq!(rdr.records().count(), json["checks"].as_array().unwrap().len());
}

#[test]
fn corep_matel_normalized() {
    let out = qkraw(&["corep", "matel", "--N", "1", "--m", "1,0,0", "--n", "0,1,0", "--normalized", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["poly"], serde_json::json!({"010000000": {"0": "1/1"}}));
    assert_eq!(v["factor"], "1");
    let plain = stdout_json(&qkraw(&["corep", "matel", "--N", "1", "--m", "1,0,0", "--n", "0,1,0", "--json"]));
    assert_eq!(plain, v["poly"]);
    let bad = qkraw(&["corep", "matel", "--N", "2", "--m", "1,0,0", "--n", "0,1,0"]);
    assert_eq!(bad.status.code(), Some(2));
}
