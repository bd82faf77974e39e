//! End-to-end tests that spawn the compiled binary.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-schur"))
        .args(args)
        .output()
        .expect("the binary should spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn eval_at_rational_point() {
    let out = run(&["eval", "--mu", "2,1", "--point", "2,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn eval_json_payload() {
    let out = run(&["eval", "--mu", "2,1", "--point", "2,1", "--json"]);
    assert_eq!(code(&out), 0);
    let payload: Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(payload["value"], "3");
    assert_eq!(payload["mu"], serde_json::json!([2, 1]));
}

#[test]
fn eval_at_signature() {
    let out = run(&["eval", "--mu", "1", "--at-signature", "2,0,-1", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn eval_engine_fallback_at_degenerate_point() {
    // (1,2) has equal shifted coordinates, so the determinantal engine is
    // unavailable; "both" falls back, "det" refuses.
    let out = run(&["eval", "--mu", "1", "--point", "1,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "3");
    let det = run(&["eval", "--mu", "1", "--point", "1,2", "--engine", "det"]);
    assert_eq!(code(&det), 2);
}

#[test]
fn dim_skew_with_cross_check() {
    let out = run(&["dim", "--skew", "3,2/2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().trim(), "3");
    assert!(lines.next().unwrap().contains("tableau count: 3"));
}

#[test]
fn dim_straight_shapes() {
    let sym = run(&["dim", "--lambda", "2,1"]);
    assert_eq!(code(&sym), 0);
    assert_eq!(stdout(&sym).trim(), "2");
    let gl = run(&["dim", "--lambda", "2,1", "--gl-n", "2"]);
    assert_eq!(code(&gl), 0);
    assert_eq!(stdout(&gl).trim(), "2");
}

#[test]
fn expand_product() {
    let out = run(&["expand", "--product", "s[1]*s[1]"]);
    assert_eq!(code(&out), 0);
    let payload: Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(payload["[2]"], "1");
    assert_eq!(payload["[1,1]"], "1");
    assert_eq!(payload["[1]"], "1");
    assert_eq!(payload.as_object().unwrap().len(), 3);
    let enveloped = run(&["expand", "--product", "s[1]*s[1]", "--json"]);
    assert_eq!(code(&enveloped), 0);
    let payload: Value = serde_json::from_str(stdout(&enveloped).trim()).expect("valid JSON");
    assert_eq!(payload["product"], "s[1]*s[1]");
    assert_eq!(payload["coefficients"]["[2]"], "1");
}

#[test]
fn char_methods_agree() {
    let out = run(&["char", "--lambda", "2,1", "--rho", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let payload: Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(payload["agree"], true);
    assert_eq!(payload["via_values"], "0");
    assert_eq!(payload["direct"], "0");
}

#[test]
fn capelli_eigen_and_stability() {
    let eigen = run(&[
        "capelli", "--n", "2", "--m", "2", "--mu", "1,1", "--lambda", "1,1", "--check", "eigen",
        "--json",
    ]);
    assert_eq!(code(&eigen), 0);
    let payload: Value = serde_json::from_str(stdout(&eigen).trim()).expect("valid JSON");
    assert_eq!(payload["eigenvalue"], "2");
    assert_eq!(payload["agree"], true);
    let stability = run(&["capelli", "--n", "1", "--m", "1", "--mu", "1", "--check", "stability"]);
    assert_eq!(code(&stability), 0);
}

#[test]
fn sigma_roundtrip_and_rendering() {
    let round = run(&["sigma", "--word", "11,22,12", "--n", "2", "--roundtrip"]);
    assert_eq!(code(&round), 0);
    assert!(stdout(&round).contains("round trip: ok"));
    let rendered = run(&["sigma", "--word", "12", "--n", "2"]);
    assert_eq!(code(&rendered), 0);
    assert_eq!(stdout(&rendered), "1 x[1,1] d[1,2]\n1 x[2,1] d[2,2]\n");
}

#[test]
fn verify_single_suite() {
    let out = run(&["verify", "--suite", "vanishing", "--max-size", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("suite vanishing"));
    let json = run(&["verify", "--suite", "vanishing", "--max-size", "3", "--json"]);
    assert_eq!(code(&json), 0);
    let payload: Value = serde_json::from_str(stdout(&json).trim()).expect("valid JSON");
    assert_eq!(payload["suite"], "vanishing");
    assert_eq!(payload["max_size"], 3);
    assert_eq!(payload["seed"], 42);
    assert!(payload["cases"].as_u64().unwrap() > 0);
    assert_eq!(payload["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_with_two() {
    let missing_point = run(&["eval", "--mu", "1"]);
    assert_eq!(code(&missing_point), 2);
    let bad_shape = run(&["eval", "--mu", "x", "--point", "1"]);
    assert_eq!(code(&bad_shape), 2);
    let unknown_suite = run(&["verify", "--suite", "nope"]);
    assert_eq!(code(&unknown_suite), 2);
}
