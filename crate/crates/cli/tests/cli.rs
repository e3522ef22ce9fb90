//! Golden-file tests for every subcommand, run against the built binary.
//! Payload comparisons are byte-exact: output keys are sorted and rationals
//! canonical, so the same inputs must print the same bytes every time.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn qspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim()
        .to_string()
}

fn expect_golden(args: &[&str], expected: &str) {
    let out = qspace(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    assert_eq!(stdout_line(&out), expected, "args: {args:?}");
    // byte-identical on a second run
    assert_eq!(stdout_line(&qspace(args)), expected);
}

#[test]
fn dual_golden() {
    expect_golden(
        &["dual", "--series", &fixture("point.json"), "--order", "3"],
        r#"{"coeffs":["1","0","0","0"],"order":3}"#,
    );
    // (1+t)^2 fixture via a temp file: dual of the exterior square is the
    // symmetric square
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.json");
    std::fs::write(&path, r#"{"order":4,"coeffs":["1","2","1","0","0"]}"#).unwrap();
    expect_golden(
        &["dual", "--series", path.to_str().unwrap(), "--order", "4"],
        r#"{"coeffs":["1","2","3","4","5"],"order":4}"#,
    );
    // requested order caps at the file's order
    expect_golden(
        &["dual", "--series", path.to_str().unwrap(), "--order", "2"],
        r#"{"coeffs":["1","2","3"],"order":2}"#,
    );
}

#[test]
fn dims_golden() {
    expect_golden(
        &[
            "dims",
            "--spec",
            &fixture("classical2.json"),
            "--max-weight",
            "2",
        ],
        r#"{"entries":[{"dim":1,"partition":[]},{"dim":2,"partition":[1]},{"dim":3,"partition":[2]},{"dim":1,"partition":[1,1]}],"max_weight":2}"#,
    );
}

#[test]
fn e_series_golden() {
    expect_golden(
        &[
            "e-series",
            "--spec",
            &fixture("classical2.json"),
            "--order",
            "4",
            "--method",
            "both",
        ],
        r#"{"agreement":true,"coeffs":["1","4","10","20","35"]}"#,
    );
    expect_golden(
        &[
            "e-series",
            "--spec",
            &fixture("mixed11.json"),
            "--order",
            "4",
            "--method",
            "star",
        ],
        r#"{"coeffs":["1","4","8","12","16"]}"#,
    );
    expect_golden(
        &[
            "e-series",
            "--spec",
            &fixture("mixed11.json"),
            "--order",
            "4",
            "--method",
            "dims",
        ],
        r#"{"coeffs":["1","4","8","12","16"]}"#,
    );
}

#[test]
fn classify_reports_the_expected_verdicts() {
    let out = qspace(&[
        "classify",
        "--spec",
        &fixture("classical2.json"),
        "--max-weight",
        "4",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["kind"], "even");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["reciprocal"], true);
    assert_eq!(v["integrality_ok"], true);
    assert_eq!(v["hecke_plausible"], true);
    assert_eq!(
        v["extremal_closed_form"]["poles"],
        serde_json::json!(["1", "1", "1", "1"])
    );
    assert!(v.get("super_rank").is_none());
    // deterministic bytes
    let again = qspace(&[
        "classify",
        "--spec",
        &fixture("classical2.json"),
        "--max-weight",
        "4",
    ]);
    assert_eq!(stdout_line(&out), stdout_line(&again));

    let out = qspace(&[
        "classify",
        "--spec",
        &fixture("mixed11.json"),
        "--max-weight",
        "4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["kind"], "odd-even");
    assert_eq!(v["super_rank"], serde_json::json!([1, 1]));
    assert_eq!(
        v["extremal_closed_form"]["roots"],
        serde_json::json!(["1", "1"])
    );
    assert_eq!(
        v["extremal_closed_form"]["poles"],
        serde_json::json!(["1", "1"])
    );
}

#[test]
fn check_tp_golden() {
    expect_golden(
        &[
            "check-tp",
            "--series",
            &fixture("ones3.json"),
            "--max-order",
            "3",
            "--max-index",
            "6",
        ],
        r#"{"bounds":{"index":6,"order":3},"verdict":"fail","witness":{"cols":[2,1,0],"rows":[3,2,1],"value":"-1"}}"#,
    );
    expect_golden(
        &[
            "check-tp",
            "--series",
            &fixture("point.json"),
            "--max-order",
            "2",
            "--max-index",
            "3",
        ],
        r#"{"bounds":{"index":3,"order":2},"verdict":"pass"}"#,
    );
}

#[test]
fn hecke_sum_golden() {
    expect_golden(
        &[
            "hecke-sum",
            "--spec",
            &fixture("classical1.json"),
            "--spec",
            &fixture("mixed11.json"),
        ],
        r#"{"poles":["1"],"q":"1","roots":["1","1"]}"#,
    );
}

#[test]
fn schur_golden() {
    expect_golden(
        &[
            "schur",
            "--spec",
            &fixture("classical2.json"),
            "--partition",
            "[2,1]",
        ],
        r#"{"value":"2"}"#,
    );
    expect_golden(
        &[
            "schur",
            "--spec",
            &fixture("classical2.json"),
            "--partition",
            "[2,1]",
            "--inner",
            "[1]",
        ],
        r#"{"value":"4"}"#,
    );
}

#[test]
fn super_schur_golden() {
    expect_golden(
        &[
            "super-schur",
            "--x",
            r#"["1"]"#,
            "--y",
            r#"["1"]"#,
            "--partition",
            "[2,1]",
        ],
        r#"{"value":"2"}"#,
    );
    expect_golden(
        &[
            "super-schur",
            "--x",
            r#"["1"]"#,
            "--y",
            r#"["1"]"#,
            "--partition",
            "[2,2]",
        ],
        r#"{"value":"0"}"#,
    );
}

#[test]
fn kostka_golden() {
    expect_golden(
        &["kostka", "--shape", "[2,1]", "--weight", "[1,1,1]"],
        r#"{"value":2}"#,
    );
}

#[test]
fn lr_golden() {
    expect_golden(
        &["lr", "--mu", "[2]", "--gamma", "[1]", "--lambda", "[2,1]"],
        r#"{"value":1}"#,
    );
    expect_golden(
        &["lr", "--mu", "[2,1]", "--gamma", "[1]", "--lambda", "[4]"],
        r#"{"value":0}"#,
    );
}

#[test]
fn domain_errors_exit_1_with_structured_objects() {
    let out = qspace(&[
        "dims",
        "--spec",
        &fixture("badroots.json"),
        "--max-weight",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "NonIntegralDimension");

    // skew shape with inner outside outer
    let out = qspace(&[
        "schur",
        "--spec",
        &fixture("classical2.json"),
        "--partition",
        "[2,1]",
        "--inner",
        "[3]",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "InvalidShape");

    // kostka weight mismatch
    let out = qspace(&["kostka", "--shape", "[2]", "--weight", "[1,2]"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "WeightMismatch");
}

#[test]
fn malformed_inputs_exit_2() {
    // truncated JSON file
    let out = qspace(&[
        "dims",
        "--spec",
        &fixture("malformed.json"),
        "--max-weight",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    // missing file
    let out = qspace(&["dual", "--series", "/no/such/file.json", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // invalid partition (not weakly decreasing)
    let out = qspace(&["lr", "--mu", "[1,2]", "--gamma", "[1]", "--lambda", "[2,1]"]);
    assert_eq!(out.status.code(), Some(2));

    // hecke-sum needs exactly two specs
    let out = qspace(&["hecke-sum", "--spec", &fixture("classical1.json")]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flag is a clap usage error
    let out = qspace(&["dual", "--nope"]);
    assert_eq!(out.status.code(), Some(2));
}
