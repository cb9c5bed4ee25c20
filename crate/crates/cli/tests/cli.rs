//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descents"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "-k", "3", "-n", "1..6", "--stat", "right", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5]["z0"], serde_json::json!(["192", "288"]));
    assert_eq!(rows[5]["z1"], serde_json::json!(["168", "72"]));
}

#[test]
fn methods_agree_via_cli() {
    let mut outputs = Vec::new();
    for method in ["oracle", "recursion", "closed"] {
        let out = run(&["table", "-k", "4", "-n", "1..8", "--stat", "left", "--method", method]);
        assert!(out.status.success(), "{method}");
        outputs.push(stdout(&out));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn oracle_output_is_identical_across_job_counts() {
    let base = run(&["table", "-k", "3", "-n", "1..8", "--stat", "right", "--method", "oracle",
        "--jobs", "1", "--format", "json"]);
    assert!(base.status.success());
    for jobs in ["2", "5", "8"] {
        let out = run(&["table", "-k", "3", "-n", "1..8", "--stat", "right", "--method",
            "oracle", "--jobs", jobs, "--format", "json"]);
        assert!(out.status.success());
        assert_eq!(stdout(&base), stdout(&out), "jobs={jobs}");
    }
}

#[test]
fn verify_succeeds_and_reports() {
    let out = run(&["verify", "-k", "5", "-n", "1..7", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(report["comparisons"], serde_json::json!(28));
}

#[test]
fn identity_limits_file_is_honored() {
    let dir = std::env::temp_dir().join("descents-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("limits.json");
    std::fs::write(
        &path,
        r#"{"saalschutz_n": 3, "cross_k": 2, "cross_n": 2, "problem1_n": 2}"#,
    )
    .unwrap();
    let out = run(&["identity", "--limits-file", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let a1 = reports
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["suite"] == "saalschutz-a1")
        .unwrap();
    assert_eq!(a1["checks_run"], serde_json::json!(10));
}

#[test]
fn exit_codes_distinguish_usage_errors() {
    // Domain error: k = 2 has no such bijection.
    let out = run(&["bijection-check", "--map", "bij01", "-k", "2", "-n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    // Length not of the required shape.
    let out = run(&["bijection-check", "--map", "bij01", "-k", "3", "-n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // Clean run.
    let out = run(&["bijection-check", "--map", "bij02", "-k", "3", "-n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    // Unknown flag is a clap usage error.
    let out = run(&["table", "-k", "3", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
