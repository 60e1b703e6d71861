//! Behavior of the binary: exit codes, output schema, determinism.

use std::process::{Command, Output};

fn torsion2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torsion2"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("spawn torsion2")
}

#[test]
fn success_exit_zero() {
    let out = torsion2(&["hyper-q2", "--roots", "0,1,2,3,4,5", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "q2({0,2}) = -10\n");
}

#[test]
fn usage_and_parse_errors_exit_one() {
    // malformed polynomial
    let out = torsion2(&["elliptic-q2", "--poly", "x^"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 2"));

    // missing required flag (clap-level usage error)
    let out = torsion2(&["elliptic-q2"]);
    assert_eq!(out.status.code(), Some(1));

    // unknown subcommand
    let out = torsion2(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));

    // implicit multiplication is documented as rejected
    let out = torsion2(&["elliptic-q2", "--poly", "2(x-1)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn domain_errors_exit_two() {
    // repeated roots
    let out = torsion2(&["hyper-table", "--roots", "0,1,2,2"]);
    assert_eq!(out.status.code(), Some(2));

    // non-squarefree cubic
    let out = torsion2(&["elliptic-q2", "--poly", "x^3"]);
    assert_eq!(out.status.code(), Some(2));

    // irrational real 2-torsion
    let out = torsion2(&["signed-count", "--poly", "x^3 - 2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("irrational"));

    // a polynomial that does not split cannot define a hyperelliptic model
    let out = torsion2(&["hyper-table", "--poly", "x^4 + 1"]);
    assert_eq!(out.status.code(), Some(2));

    // invalid topological type: a = 0 needs g - s even
    let out = torsion2(&["theta-counts", "--g", "2", "--s", "1", "--a", "0"]);
    assert_eq!(out.status.code(), Some(2));

    // the complex semi-orientation is excluded
    let out = torsion2(&["odd-signed-sum", "--g", "2", "--s", "2", "--a", "0", "0,0", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verification_failure_exits_three() {
    let out = torsion2(&["verify", "--seed", "3", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL]"));
}

#[test]
fn json_schema_shape() {
    let out = torsion2(&["--json", "hyper-table", "--roots", "0,1,2,3,4,5", "--lead", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "hyper-table");
    assert_eq!(v["input"]["lead"], "1");
    assert_eq!(v["result"]["signed_count"], 4);
    assert_eq!(v["result"]["classes"][1]["q2"], "5");
    let checks = v["paper_checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .all(|c| c["status"] == "pass" || c["status"] == "reported"));
    assert!(out.stdout.ends_with(b"\n"));
}

#[test]
fn json_is_deterministic_per_input() {
    let args = ["--json", "conjecture", "--genus", "2", "--roots", "0,1,2,3,4,5"];
    let a = torsion2(&args);
    let b = torsion2(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"]["isometric"], true);
    let reported = v["paper_checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "conjecture-hasse-isometry")
        .unwrap();
    assert_eq!(reported["status"], "reported");
}

#[test]
fn tables_have_no_ansi_when_no_color_set() {
    let out = torsion2(&["hyper-table", "--roots", "0,1,2,3,4,5"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(!text.contains('\x1b'));
    assert!(text.contains("{0,2}  -10"));
}

#[test]
fn worked_examples_from_the_guide() {
    let out = torsion2(&[
        "theta-counts", "--g", "2", "--s", "1", "--a", "1", "--orientation", "0", "--parity", "0",
    ]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "even 1, odd 1\n");

    let out = torsion2(&["conjecture", "--genus", "1", "--poly", "x^3 - x"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("isometric: true"));

    let out = torsion2(&["elliptic-q2", "--poly", "1/3*x*(x-1)*(x+3)", "--", "-3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "q2(-3) = 3\n");

    let out = torsion2(&["gw-trace-form", "--poly", "x^3 - x"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rank 3, signature 1, discriminant -1"));
}
