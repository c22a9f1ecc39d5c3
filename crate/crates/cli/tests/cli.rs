use std::process::{Command, Output};

use serde_json::Value;

fn k3fib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3fib"))
        .args(args)
        .env_remove("K3FIB_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = k3fib(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

/// Runs a failing invocation and returns the exit code and the error object.
fn failure(args: &[&str]) -> (i32, Value) {
    let out = k3fib(args);
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr)
        .unwrap_or_else(|e| panic!("{args:?}: stderr is not JSON ({e})"));
    assert!(
        err["code"].is_string() && err["message"].is_string(),
        "{err}"
    );
    (out.status.code().unwrap(), err)
}

const F3: &str = "x0^2*x1 + x2^3";
const G3: &str = "x0^2*x2 + x1^3";

#[test]
fn basechange_example() {
    assert_eq!(
        stdout(&["basechange", "--config", "I9+3I1", "--branch", "I1,I1"]).trim(),
        r#"{"fibers":[{"type":"I9","count":2},{"type":"I2","count":2},{"type":"I1","count":2}]}"#
    );
    let v = json(&["basechange", "--config", "2I5+2I1", "--branch", "I0,I0"]);
    assert_eq!(v["fibers"].as_array().unwrap().len(), 2);
    assert_eq!(v["fibers"][0]["count"], 4);
}

#[test]
fn classify_type_example() {
    assert_eq!(
        stdout(&["classify-type", "--config", "2III*+2I2+2I1"]).trim(),
        r#"{"type2_candidate":true,"unpaired":[]}"#
    );
    assert_eq!(
        json(&["classify-type", "--config", "I12*"]),
        serde_json::json!({"type2_candidate": false, "unpaired": ["I12*"]})
    );
}

#[test]
fn extremal_csv_matches_table() {
    let csv = stdout(&["extremal", "--csv"]);
    let fixture = include_str!("../../core/tests/fixtures/table_extremal.csv");
    assert_eq!(csv, fixture);
    assert_eq!(csv.lines().count(), 26);
}

#[test]
fn extremal_is_deterministic() {
    let a = stdout(&["extremal"]);
    assert_eq!(a, stdout(&["extremal"]));
    assert_eq!(a, stdout(&["enumerate"]));
    let rows: Value = serde_json::from_str(&a).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 25);
    assert_eq!(rows[2]["res"], "I9+3I1");
    assert_eq!(rows[2]["branch"], serde_json::json!(["I1", "I1"]));
    assert_eq!(rows[2]["T"], serde_json::json!([4, 2, 10]));
}

#[test]
fn dedup_reports_both_groupings() {
    let v = json(&["dedup"]);
    assert_eq!(v["stated_class_count"], 15);
    assert_eq!(v["tx_class_count"], 14);
    assert_eq!(v["flagged"], serde_json::json!([18]));
}

#[test]
fn fibers_reports_ranks() {
    let v = json(&["fibers", "--config", "I_9 + 3I_1"]);
    assert_eq!(v["euler_characteristic"], 12);
    assert_eq!(v["trivial_lattice_rank"], 8);
    assert_eq!(v["mw_rank"], 0);
    assert_eq!(v["extremal"], true);
    let v = json(&["fibers", "--config", "I4", "--surface", "k3"]);
    assert_eq!(v["mw_rank"], 15);
    assert_eq!(json(&["fibers", "--config", "I5"])["surface"], Value::Null);
}

#[test]
fn conics_predicates() {
    let v = json(&[
        "conics",
        "[[1,1,0,0,0,0,0,0,0,0],[0,-1,0,0,0,0,0,0,0,0],[1,1,1,0,0,0,0,0,0,0]]",
    ]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes[0]["conic"], true);
    assert_eq!(classes[1]["section"], true);
    assert_eq!(classes[2]["section"], true);
    assert_eq!(
        v["conics_from_sections"],
        serde_json::json!([{"sections": [1, 2], "conic": [1, 0, 1, 0, 0, 0, 0, 0, 0, 0]}])
    );
}

#[test]
fn extraction_without_point() {
    let v = json(&[
        "extract-weierstrass",
        "--f3",
        F3,
        "--g3",
        G3,
        "--pencil",
        "x1 - t*x2",
    ]);
    assert_eq!(v["a"], "x2");
    assert_eq!(v["c"], "1");
    assert_eq!(v["weierstrass"], Value::Null);
    let b: k3fib::MultiPoly = v["b"].as_str().unwrap().parse().unwrap();
    assert_eq!(
        b,
        k3fib::parse_poly("(t*x0^2 + x2^2)*(x0^2 + t^3*x2^2)").unwrap()
    );
}

#[test]
fn extraction_with_point() {
    let v = json(&[
        "extract-weierstrass",
        "--f3",
        F3,
        "--g3",
        G3,
        "--pencil",
        "x1 - t*x0",
        "--point",
        "-1/t^3,0",
    ]);
    assert!(v["weierstrass"]["A"].is_string());
    let euler: u64 = v["fibers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["v_delta"].as_u64().unwrap() * f["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(euler, 24);
}

#[test]
fn domain_errors_exit_one() {
    let (code, err) = failure(&["classify-type", "--config", "I9 + 3J1"]);
    assert_eq!((code, err["code"].as_str().unwrap()), (1, "syntax"));
    let (code, err) = failure(&[
        "extract-weierstrass",
        "--f3",
        F3,
        "--g3",
        G3,
        "--pencil",
        "x1 - t*(x0 + x2)",
    ]);
    assert_eq!(
        (code, err["code"].as_str().unwrap()),
        (1, "not_a_conic_bundle_pencil")
    );
    let (code, err) = failure(&[
        "extract-weierstrass",
        "--f3",
        F3,
        "--g3",
        G3,
        "--pencil",
        "x1 - t*x2",
        "--point",
        "1,1",
    ]);
    assert_eq!(
        (code, err["code"].as_str().unwrap()),
        (1, "no_section_given")
    );
    for args in [
        &["basechange", "--config", "2I0*", "--branch", "I0*,I0*"][..],
        &["basechange", "--config", "I9+3I1", "--branch", "I2,I1"],
        &["fibers", "--config", "I20", "--surface", "res"],
        &["conics", "[[]]"],
        &["conics", "not json"],
        &[
            "extract-weierstrass",
            "--f3",
            "x0^2",
            "--g3",
            G3,
            "--pencil",
            "x1",
        ],
        &[
            "extract-weierstrass",
            "--f3",
            "x0^3 +",
            "--g3",
            G3,
            "--pencil",
            "x1",
        ],
    ] {
        assert_eq!(failure(args).0, 1, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &[],
        &["extremal", "--json"],
        &["basechange", "--config", "I9+3I1"],
        &["basechange", "--config", "I9+3I1", "--branch", "I1,I1,I1"],
        &["fibers", "--config", "I1", "--surface", "enriques"],
    ] {
        let (code, err) = failure(args);
        assert_eq!(
            (code, err["code"].as_str().unwrap()),
            (2, "usage"),
            "{args:?}"
        );
    }
}

#[test]
fn color_variable() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_k3fib"))
            .args(["classify-type", "--config", "I1"])
            .env("K3FIB_COLOR", value)
            .output()
            .unwrap()
    };
    assert!(run("never").status.success());
    assert!(run("auto").status.success());
    let bad = run("always");
    assert_eq!(bad.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(err["code"], "usage");
}
