//! Integration tests for the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn table_rank_3_matches_golden_document() {
    let out = run(&["table", "--rank", "3", "--algebra", "class"]);
    assert!(out.status.success());
    let golden = include_str!("data/rank3_class_table.json");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn table_rank_1_class() {
    let out = run(&["table", "--rank", "1", "--algebra", "class", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("1,class,[2],[2],1*[2]"));
    assert!(stdout.contains("1,class,\"[1,1]\",\"[1,1]\",\"2*[1,1]\""));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["table", "--rank", "2", "--algebra", "solomon"]);
    let b = run(&["table", "--rank", "2", "--algebra", "solomon"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_cross_succeeds_at_small_rank() {
    let out = run(&["table", "--rank", "2", "--verify-cross"]);
    assert!(out.status.success());
}

#[test]
fn check_all_passes_at_rank_3() {
    let out = run(&["check", "--rank", "3", "--suite", "all"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut names = Vec::new();
    for line in stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("report lines are JSON");
        assert_eq!(v["outcome"], "pass");
        assert_eq!(v["rank"], 3);
        names.push(v["check"].as_str().unwrap().to_string());
    }
    assert_eq!(
        names,
        vec!["welldef", "commute", "semisimple", "oracle", "characters", "burnside"]
    );
}

#[test]
fn check_single_suites() {
    for suite in ["oracle", "commute"] {
        let out = run(&["check", "--rank", "2", "--suite", suite]);
        assert!(out.status.success(), "suite {suite}");
    }
}

#[test]
fn capacity_exit_code() {
    let out = run(&["table", "--rank", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn max_rank_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_descent-lab"))
        .args(["table", "--rank", "10", "--algebra", "class", "--strategy", "matrix"])
        .env("DESCENT_LAB_MAX_RANK", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_error_exit_code() {
    let out = run(&["table", "--rank", "3", "--algebra", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chars_and_marks_emit_csv() {
    let chars = run(&["chars", "--rank", "3", "--format", "csv"]);
    assert!(chars.status.success());
    let text = String::from_utf8(chars.stdout).unwrap();
    assert!(text.starts_with("characters,"));
    assert!(text.contains("\"[3,1]\",0,1,0,2,4"));

    let marks = run(&["marks", "--rank", "3", "--format", "csv"]);
    assert!(marks.status.success());
    let text = String::from_utf8(marks.stdout).unwrap();
    assert!(text.starts_with("marks,"));
    // trivial-subgroup column carries the coset counts |W : W_λ|
    assert!(text.contains("\"[1,1,1,1]\",0,0,0,0,24"));
}

#[test]
fn output_file_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = run(&[
        "table",
        "--rank",
        "3",
        "--algebra",
        "class",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("data/rank3_class_table.json"));
    assert!(!path.with_extension("tmp").exists());
}

#[test]
fn unwritable_output_exit_code() {
    let out = run(&[
        "table",
        "--rank",
        "2",
        "--output",
        "/nonexistent-dir/table.json",
    ]);
    assert_eq!(out.status.code(), Some(4));
}
