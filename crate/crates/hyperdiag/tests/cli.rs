//! End-to-end tests of the `hyperdiag` binary: output formats and exit
//! codes.

use std::process::{Command, Output};

fn hyperdiag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperdiag"))
        .args(args)
        .env_remove("HYPERDIAG_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn pfq_json_is_the_plain_series_array() {
    let out = hyperdiag(&[
        "pfq",
        "--top",
        "2/9,5/9,8/9",
        "--bottom",
        "1,2/3",
        "--scale",
        "27",
        "--order",
        "1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), r#"["1","40/9"]"#);
}

#[test]
fn diag_and_oracle_agree_via_the_binary() {
    let diag = hyperdiag(&[
        "diag",
        "--product",
        "lin(2)^{1/3} * lin(3)^{-1}",
        "--order",
        "5",
        "--json",
    ]);
    let oracle = hyperdiag(&[
        "oracle",
        "--product",
        "lin(2)^{1/3} * lin(3)^{-1}",
        "--order",
        "5",
        "--json",
    ]);
    assert_eq!(diag.status.code(), Some(0));
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(stdout(&diag), stdout(&oracle));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&diag).trim()).unwrap();
    assert_eq!(parsed[1], serde_json::json!("40/9"));
}

#[test]
fn thm1_emits_params_and_series() {
    let out = hyperdiag(&[
        "thm1", "--R", "1/3", "--S", "1", "--n", "2", "--N", "3", "--order", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        v["reduced"]["top"],
        serde_json::json!(["2/9", "5/9", "8/9"])
    );
    assert_eq!(v["params"]["scale"], serde_json::json!("27"));
    assert_eq!(v["series"][1], serde_json::json!("40/9"));
}

#[test]
fn classify_exit_codes_follow_expectations() {
    let out = hyperdiag(&["classify", "--pfq", "1/9,4/9,5/9|1,1/3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("transcendental"));

    let out = hyperdiag(&["classify", "--pfq", "1/6,5/6|1/2", "--expect", "algebraic"]);
    assert_eq!(out.status.code(), Some(0));

    let out = hyperdiag(&[
        "classify",
        "--pfq",
        "1/6,5/6|1/2",
        "--expect",
        "transcendental",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = hyperdiag(&["classify", "--product", "lin(3)^{-1}", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], serde_json::json!("transcendental"));
}

#[test]
fn grade2_reports_the_decomposition() {
    let out = hyperdiag(&["grade2", "--pfq", "2/9,5/9,8/9|1,2/3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["found"], serde_json::json!(true));
    assert_eq!(v["hadamard_factor"], serde_json::json!("1/2"));

    let out = hyperdiag(&["grade2", "--pfq", "1/9,4/9,5/9|1,1/3", "--bound", "6"]);
    assert_eq!(out.status.code(), Some(1), "no decomposition means exit 1");
}

#[test]
fn verify_and_reproduce_exit_zero_on_success() {
    let out = hyperdiag(&[
        "verify",
        "--product",
        "lin(2)^{1/2} * lin(3)^{-1}",
        "--order",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verified"));

    let out = hyperdiag(&["reproduce", "eq10", "--order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified"));

    let out = hyperdiag(&[
        "reproduce",
        "eq23-26",
        "--arg",
        "R=1/3",
        "--order",
        "10",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v[0]["status"], serde_json::json!("verified"));
}

#[test]
fn hadamard_with_expectation() {
    let out = hyperdiag(&[
        "hadamard",
        "--lhs",
        "1/6,5/6|1/2",
        "--rhs",
        "1/2|",
        "--expect",
        "1/6,5/6|1",
        "--order",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = hyperdiag(&[
        "hadamard",
        "--lhs",
        "1/6,5/6|1/2",
        "--rhs",
        "1/2|",
        "--expect",
        "1/6,5/6|1/3",
    ]);
    assert_eq!(out.status.code(), Some(1), "wrong expectation must fail");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["nosuchcommand"][..],
        &["pfq", "--top", "x"][..],
        &["classify"][..],
        &["reproduce", "eq99"][..],
        &["diag", "--product", "po(2)^1"][..],
        &["reproduce", "straub"][..], // missing required argument alpha
    ] {
        let out = hyperdiag(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn oracle_degree_guard_requires_force() {
    let out = hyperdiag(&["oracle", "--product", "lin(3)^{-1}", "--order", "20"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hyperdiag(&[
        "oracle",
        "--product",
        "lin(3)^{-1}",
        "--order",
        "20",
        "--force",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn order_environment_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperdiag"))
        .args(["pfq", "--top", "1", "--json"])
        .env("HYPERDIAG_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out).trim(), r#"["1","1","1"]"#);
}

#[test]
fn reproduce_is_deterministic() {
    let first = hyperdiag(&["reproduce", "eq30", "--order", "12", "--json"]);
    let second = hyperdiag(&["reproduce", "eq30", "--order", "12", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn table_output_truncates_at_twelve_coefficients() {
    let out = hyperdiag(&["pfq", "--top", "1", "--order", "30"]);
    let text = stdout(&out);
    assert!(text.contains("..."), "long tables end with an ellipsis");
    assert!(
        !text.contains("13 |"),
        "at most 12 coefficients are printed"
    );
}
