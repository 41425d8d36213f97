//! End-to-end tests of the `kdyck` binary: output fixtures, JSON schemas,
//! exit codes, and the environment overrides.

use std::process::{Command, Output};

const WORKED_PATH: &str = "S3 W S1 W W W S4 W W S1 S1 W W W W";
const WORKED_IMAGE: &str = "S4 S3 W W W S1 W S1 W S1 W W W W W";

fn kdyck(args: &[&str]) -> Output {
    kdyck_with_env(args, &[])
}

fn kdyck_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kdyck"));
    cmd.args(args);
    cmd.env_remove("KDYCK_MAX_STEPS");
    cmd.env_remove("KDYCK_MAX_PATHS");
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn paths_counts() {
    let out = kdyck(&["paths", "--k", "1,1,1", "--count"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "5");

    let out = kdyck(&["paths", "--k", "2,2", "--count"]);
    assert_eq!(stdout(&out).trim(), "3");

    let out = kdyck(&["paths", "--k", "1,1,1", "--count", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["count"], 5);
}

#[test]
fn paths_streaming_order() {
    let out = kdyck(&["paths", "--k", "2,1"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, ["S2 S1 W W W", "S2 W S1 W W", "S2 W W S1 W"]);

    let out = kdyck(&["paths", "--k", "2,1", "--json"]);
    let docs: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0]["path"], "S2 S1 W W W");
}

#[test]
fn paths_errors() {
    // malformed flag values are usage errors
    let out = kdyck(&["paths", "--k", "2,x"]);
    assert_eq!(code(&out), 2);
    let out = kdyck(&["paths", "--k", "0,1"]);
    assert_eq!(code(&out), 2);
    // the size guard is a domain error
    let out = kdyck(&["paths", "--k", "20,1,1,1", "--count"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn stats_fixture() {
    let out = kdyck(&["stats", "--path", WORKED_PATH, "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["area"], 7);
    assert_eq!(doc["dinv"]["sweep"], 13);
    assert_eq!(doc["dinv"]["red"], 3);
    assert_eq!(doc["dinv"]["total"], 16);

    let out = kdyck(&["stats", "--path", WORKED_IMAGE, "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["bounce"]["value"], 7);
    assert_eq!(doc["bounce"]["v"], serde_json::json!([2, 0, 2, 1]));
    assert_eq!(doc["bounce"]["h"], serde_json::json!([2, 2, 4, 2]));

    let out = kdyck(&["stats", "--path", "S1 W", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["area"], 0);
    assert_eq!(doc["dinv"]["total"], 0);
    assert_eq!(doc["bounce"]["value"], 0);
}

#[test]
fn stats_rejects_invalid_path() {
    let out = kdyck(&["stats", "--path", "S1 W W"]);
    assert_eq!(code(&out), 1);
    assert!(!output_stderr(&out).is_empty());
}

fn output_stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn sweep_and_unsweep() {
    let out = kdyck(&["sweep", "--path", WORKED_PATH]);
    assert_eq!(stdout(&out).trim(), WORKED_IMAGE);

    let out = kdyck(&["unsweep", "--path", WORKED_IMAGE]);
    assert_eq!(stdout(&out).trim(), WORKED_PATH);

    // unsweep of sweep is the identity on an arbitrary input
    let sweep = kdyck(&["sweep", "--path", "S2 W S1 W W"]);
    let back = kdyck(&["unsweep", "--path", stdout(&sweep).trim()]);
    assert_eq!(stdout(&back).trim(), "S2 W S1 W W");
}

#[test]
fn tableau_json_schema() {
    let out = kdyck(&["tableau", "--path", WORKED_IMAGE, "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        doc["filling"]["columns"],
        serde_json::json!([[1, 3, 5, 9, 14], [2, 4, 7, 12], [6, 11], [8, 13], [10, 15]])
    );
    assert_eq!(
        doc["ranking"]["columns"],
        serde_json::json!([[0, 1, 2, 3, 4], [0, 1, 2, 3], [2, 3], [2, 3], [3, 4]])
    );
}

#[test]
fn poly_fixtures() {
    let out = kdyck(&["poly", "--lambda", "1,1,1"]);
    assert_eq!(
        stdout(&out).trim(),
        "1*q^3*t^0 + 1*q^2*t^1 + 1*q^1*t^2 + 1*q^1*t^1 + 1*q^0*t^3"
    );

    let out = kdyck(&["poly", "--lambda", "4"]);
    assert_eq!(stdout(&out).trim(), "1*q^0*t^0");

    let out = kdyck(&["poly", "--lambda", "3,1,1,1", "--defect"]);
    assert_eq!(
        stdout(&out).trim(),
        "1*q^6*t^3 - 1*q^6*t^2 - 2*q^5*t^3 + 2*q^5*t^2 + 1*q^4*t^3 - 1*q^4*t^2 \
         - 1*q^3*t^6 + 2*q^3*t^5 - 1*q^3*t^4 + 1*q^2*t^6 - 2*q^2*t^5 + 1*q^2*t^4"
    );

    // the two pairs produce the same polynomial
    let a = kdyck(&["poly", "--lambda", "2,2,1", "--pair", "dinv-area"]);
    let b = kdyck(&["poly", "--lambda", "2,2,1", "--pair", "area-bounce"]);
    assert_eq!(stdout(&a), stdout(&b));

    // json round-trips through the documented schema
    let out = kdyck(&["poly", "--lambda", "1,1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        doc,
        serde_json::json!({"terms": [{"q": 1, "t": 0, "c": 1}, {"q": 0, "t": 1, "c": 1}]})
    );
}

#[test]
fn poly_sorts_partition_with_note() {
    let sorted = kdyck(&["poly", "--lambda", "3,1,1,1", "--defect"]);
    let unsorted = kdyck(&["poly", "--lambda", "1,3,1,1", "--defect"]);
    assert_eq!(code(&unsorted), 0);
    assert_eq!(stdout(&sorted), stdout(&unsorted));
    assert!(output_stderr(&unsorted).contains("reordered"));
    assert!(output_stderr(&sorted).is_empty());
}

#[test]
fn verify_small_run_passes() {
    let out = kdyck(&["verify", "--max-size", "7"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("result: PASS"), "{text}");
    assert!(text.contains("dinv-to-area"));
    assert!(text.contains("near-rectangular-defects"));

    let out = kdyck(&["verify", "--max-size", "7", "--suite", "theorem", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["max_size"], 7);
    assert_eq!(doc["suites"][0]["suite"], "theorem");
    assert!(doc["suites"][0]["checks"].as_array().unwrap().len() >= 5);
}

#[test]
fn verify_rejects_oversized_bound() {
    let out = kdyck(&["verify", "--max-size", "30"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn env_overrides() {
    let out = kdyck_with_env(
        &["paths", "--k", "5,5", "--count"],
        &[("KDYCK_MAX_STEPS", "10")],
    );
    assert_eq!(code(&out), 1, "guard lowered below the path size");

    let out = kdyck_with_env(
        &["paths", "--k", "5,5", "--count"],
        &[("KDYCK_MAX_STEPS", "12")],
    );
    assert_eq!(code(&out), 0);

    let out = kdyck_with_env(&["poly", "--lambda", "2,1"], &[("KDYCK_MAX_PATHS", "3")]);
    assert_eq!(code(&out), 1, "aggregation guard lowered below five paths");

    let out = kdyck_with_env(&["paths", "--k", "1,1"], &[("KDYCK_MAX_STEPS", "lots")]);
    assert_eq!(code(&out), 2, "malformed override is a usage error");
}

#[test]
fn usage_errors_exit_two() {
    let out = kdyck(&["paths"]);
    assert_eq!(code(&out), 2);
    let out = kdyck(&["verify", "--suite", "nonsense"]);
    assert_eq!(code(&out), 2);
    let out = kdyck(&["no-such-command"]);
    assert_eq!(code(&out), 2);
}
