use std::process::{Command, Output};

use hopf_core::expr::{parse, parse_in, Algebra, Value};

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hopf(args);
    assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

#[test]
fn golden_text_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (&["qsym", "mul", "M(1)", "M(1)"], "2*M(1,1) + M(2)\n"),
        (&["qsym", "mul", "M(1)", "M(2)"], "M(1,2) + M(2,1) + M(3)\n"),
        (&["qsym", "coprod", "M(1,2)"], "M() ⊗ M(1,2) + M(1) ⊗ M(2) + M(1,2) ⊗ M()\n"),
        (&["qsym", "antipode", "M(1,1)"], "M(1,1) + M(2)\n"),
        (&["qsym", "antipode", "S(2)"], "S(1,1) - S(2)\n"),
        (&["qsym", "expand", "M(1)", "--vars", "2", "--max-degree", "1"], "t1 + t2\n"),
        (&["qsym", "mul", "K[]", "K[[]]"], "K[][[]]\n"),
        (&["qsym", "coprod", "K[[]]"], "K() ⊗ K[[]] + K[] ⊗ K[] + K[[]] ⊗ K()\n"),
        (&["qsym", "antipode", "K[[]]"], "K[][] - K[[]]\n"),
        (&["word", "shuffle", "xy", "xy"], "4*W(xxyy) + 2*W(xyxy)\n"),
        (&["word", "shuffle", "x", "y"], "W(xy) + W(yx)\n"),
        (&["word", "tau", "xxy"], "W(xyy)\n"),
        (&["word", "ohno", "--i", "1", "xxy"], "W(xxxy)\n"),
        (&["word", "ohno", "--i", "0", "W(xxy)"], "W(xxy)\n"),
        (&["tree", "enum", "3"], "[[][]]\n[[[]]]\n"),
        (&["tree", "symm", "[[][][]]"], "6\n"),
        (&["tree", "glmul", "[[]]", "[[]]"], "T[[][]] + T[[[]]]\n"),
        (&["tree", "glmul", "T[[]]", "T[[][]]"], "T[[][][]] + 2*T[[][[]]]\n"),
        (&["tree", "kappa", "1"], "T[[]]\n"),
        (&["tree", "kappa", "2"], "1/2*T[[][]] + T[[[]]]\n"),
        (&["tree", "epsilon", "2"], "1/2*T[[][]]\n"),
        (&["tree", "mult", "[[][[]]]"], "3\n"),
        (&["tree", "mult", "[[[[]]]]"], "1\n"),
    ];
    for (args, expected) in cases {
        assert_eq!(stdout(args), *expected, "{:?}", args);
    }
}

#[test]
fn mzv_outputs_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["mzv", "eval", "M(2)"])).unwrap();
    assert!((v["value"].as_f64().unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 2e-6);
    assert_eq!(v["N"], 1_000_000);
    assert!(v["error_estimate"].as_f64().unwrap() < 2e-6);

    let v: serde_json::Value = serde_json::from_str(&stdout(&["mzv", "verify", "--ohno", "--weight", "4", "--i", "1"])).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["value"].as_f64().unwrap().abs() < 1e-4);

    let v: serde_json::Value = serde_json::from_str(&stdout(&["mzv", "verify", "M(1,2) - M(3)"])).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn mzv_failure_exit_code() {
    let out = hopf(&["mzv", "verify", "M(2)"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert!((v["value"].as_f64().unwrap() - 1.6449).abs() < 1e-3);
}

#[test]
fn argument_errors_exit_two() {
    let bad: &[&[&str]] = &[
        &["qsym", "mul", "M(1,", "M(1)"],
        &["qsym", "mul", "M(1)", "S(1)"],
        &["mzv", "eval", "M(2,1)"],
        &["mzv", "eval", "T[]"],
        &["mzv", "verify", "--ohno", "--weight", "1", "--i", "1"],
        &["mzv", "verify"],
        &["word", "ohno", "--i", "1", "yx"],
        &["tree", "enum", "0"],
        &["tree", "kappa", "9"],
        &["tree", "symm", "[[]"],
        &["--max-degree", "0", "verify", "all"],
        &["--N", "1", "mzv", "eval", "M(2)"],
        &["nonsense"],
    ];
    for args in bad {
        let out = hopf(args);
        assert_eq!(out.status.code(), Some(2), "{:?}", args);
        assert!(out.stdout.is_empty(), "{:?}", args);
        assert!(!out.stderr.is_empty(), "{:?}", args);
    }
    let out = hopf(&["tree", "symm", "[[]"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 3"), "{}", err);
}

#[test]
fn mixed_word_and_composition_is_rejected() {
    let out = hopf(&["mzv", "verify", "4*W(xxyy) + 2*W(xyxy) - 2*M(2,2) - M(4)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_elements_round_trip() {
    let cases: &[&[&str]] = &[
        &["qsym", "mul", "M(1,2)", "M(2) - 1/2*M(1)"],
        &["qsym", "antipode", "M(1,2,1)"],
        &["qsym", "antipode", "e(2,1)"],
        &["qsym", "mul", "h(2)", "e(1)"],
        &["qsym", "antipode", "p(2) + m(1,1)"],
        &["qsym", "antipode", "K[[][]][]"],
        &["qsym", "antipode", "F[[]][]"],
        &["qsym", "antipode", "T[[][[]]]"],
        &["word", "shuffle", "xy", "xxy"],
        &["tree", "kappa", "3"],
        &["tree", "epsilon", "3"],
    ];
    for args in cases {
        let doc = json(args);
        let algebra: Algebra = doc["algebra"].as_str().unwrap().parse().unwrap();
        let text = doc["element"].as_str().unwrap();
        let reparsed = parse_in(text, algebra).unwrap();
        assert_eq!(reparsed.algebra(), algebra);
        assert_eq!(reparsed.to_string(), text, "{:?}", args);
    }
    // the printed element equals the value computed in-process
    let doc = json(&["qsym", "mul", "M(1)", "M(1)"]);
    let expected = parse("M(1)").unwrap().mul(&parse("M(1)").unwrap()).unwrap();
    assert_eq!(parse_in(doc["element"].as_str().unwrap(), Algebra::QSym).unwrap(), expected);
    assert!(matches!(expected, Value::QSym(_)));
}

#[test]
fn json_scalars_and_lists() {
    let doc = json(&["tree", "enum", "4"]);
    assert_eq!(doc["count"], 4);
    assert_eq!(doc["trees"].as_array().unwrap().len(), 4);
    assert_eq!(json(&["tree", "mult", "[[][[]]]"])["multiplicity"], 3);
    let doc = json(&["qsym", "coprod", "M(1)"]);
    assert_eq!(doc["tensor"], "M() ⊗ M(1) + M(1) ⊗ M()");
}

#[test]
fn verify_all_small_degree() {
    let out = hopf(&["--max-degree", "3", "--N", "1e5", "--tol", "1e-3", "verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("max-degree 3  N 100000  tol 1e-3\n"), "{}", text);
    assert!(text.ends_with("overall: PASS\n"));
    assert_eq!(text.lines().filter(|l| l.ends_with("PASS")).count(), 13);

    let out = hopf(&["--json", "--max-degree", "2", "--N", "1e4", "--tol", "1e-2", "verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["suites"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_all_reports_failure() {
    // a tolerance this tight cannot be met at N = 10
    let out = hopf(&["--max-degree", "2", "--N", "10", "--tol", "1e-12", "verify", "all"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.ends_with("overall: FAIL\n"));
}
