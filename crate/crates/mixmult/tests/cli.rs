//! Black-box tests of the `mixmult` binary: exit codes, both output
//! formats, and environment handling.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const PASSING: &str = r#"{
  "schema": 1,
  "ring": { "vars": 2, "s": 1 },
  "ideals": {
    "J": [[1, 0], [0, 1]],
    "I": [[2, 0], [0, 3]]
  },
  "modules": {
    "N": { "shifts": [[0], [0]], "relations": [[1, [1, 0]]] }
  },
  "checks": [
    { "kind": "thm3.4", "J": "J", "ideals": ["I"], "module": "N" },
    { "kind": "ideal-mixed", "J": "J", "ideals": ["I"], "module": "N",
      "expect": [ { "type": [1, 0], "value": 1 }, { "type": [0, 1], "value": 2 } ] },
    { "kind": "rank", "module": "N", "expect": 1 }
  ]
}"#;

fn write_scenario(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mixmult"));
    cmd.args(args);
    cmd.env_remove("MIXMULT_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_passes_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "pass.json", PASSING);
    let out = run(&["verify", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("[PASS] thm3.4"));
    assert!(text.contains("3 checks"));
}

#[test]
fn verify_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "pass.json", PASSING);
    let out = run(&["--format", "json", "verify", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["passed"], serde_json::json!(true));
    assert_eq!(parsed["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken = PASSING.replace("\"expect\": 1", "\"expect\": 5");
    let path = write_scenario(dir.path(), "fail.json", &broken);
    let out = run(&["verify", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL] rank"));
}

#[test]
fn usage_problems_exit_two() {
    let dir = tempfile::tempdir().unwrap();

    // Missing file.
    let absent = dir.path().join("absent.json");
    let out = run(&["verify", absent.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed JSON.
    let bad = write_scenario(dir.path(), "bad.json", "{ nope");
    let out = run(&["verify", bad.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));

    // Undeclared ideal name.
    let undeclared = PASSING.replace("\"ideals\": [\"I\"]", "\"ideals\": [\"missing\"]");
    let path = write_scenario(dir.path(), "undeclared.json", &undeclared);
    let out = run(&["verify", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown subcommand is a clap usage error.
    let out = run(&["frobnicate"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hilbert_mixed_rank_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "pass.json", PASSING);
    let file = path.to_str().unwrap();

    // N = A + A/(x): Hilbert polynomial n1 + 2, rank 1.
    let out = run(&["hilbert", file], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "P = n1 + 2");

    let out = run(&["rank", file], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["--format", "json", "rank", file], &[]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["rank"], serde_json::json!(1));

    let out = run(&["mixed", file], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("degree 1"), "got: {text}");
    assert!(text.contains("e(M; [1]) = 1"), "got: {text}");

    let out = run(
        &["ideal-mixed", file, "--j", "J", "--ideals", "I", "--module", "N"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("q = 2"), "got: {text}");
    assert!(text.contains("e[[1, 0]] = 1"), "got: {text}");
    assert!(text.contains("e[[0, 1]] = 2"), "got: {text}");
}

#[test]
fn oracle_length_counts_the_quotient() {
    let dir = tempfile::tempdir().unwrap();
    // l(I/JI) for I = (x^2, y^3), J = m: the two generators survive.
    let text = PASSING.replace(
        "\"I\": [[2, 0], [0, 3]]",
        "\"I\": [[2, 0], [0, 3]],\n    \"JI\": [[3, 0], [2, 1], [1, 3], [0, 4]]",
    );
    let path = write_scenario(dir.path(), "oracle.json", &text);
    let out = run(
        &["oracle", "length", path.to_str().unwrap(), "--l1", "I", "--l2", "JI"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "2");

    // JSON format and an explicit box bound give the same count.
    let out = run(
        &[
            "--format", "json", "oracle", "length", path.to_str().unwrap(),
            "--l1", "I", "--l2", "JI", "--bound", "12",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["length"], serde_json::json!(2));
}

#[test]
fn grid_flags_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "pass.json", PASSING);
    let out = run(
        &["--grid-base", "6", "--grid-width", "4", "--retries", "2", "hilbert", path.to_str().unwrap()],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "P = n1 + 2");
}

#[test]
fn thread_override_env() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_scenario(dir.path(), "pass.json", PASSING);
    let file = path.to_str().unwrap();

    let out = run(&["verify", file], &[("MIXMULT_THREADS", "2")]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", file], &[("MIXMULT_THREADS", "zero")]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", file], &[("MIXMULT_THREADS", "0")]);
    assert_eq!(out.status.code(), Some(2));
}
