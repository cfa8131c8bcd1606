//! End-to-end tests of the `twdem` binary: exit codes, stderr error tags,
//! and byte-stable JSON output.

use std::process::{Command, Output};

use twisted_demazure::json::{from_json_string, to_json_string};

fn twdem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twdem"))
        .args(args)
        .output()
        .expect("failed to spawn twdem")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn weyl_json_output_round_trips_byte_for_byte() {
    let out = twdem(&["weyl", "--type", "D4(3)", "--weight", "1,0", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    let parsed = from_json_string(&text).expect("valid module JSON");
    assert_eq!(parsed.type_name, "D4(3)");
    assert_eq!(parsed.dimension, 29);
    assert_eq!(to_json_string(&parsed).unwrap(), text, "round trip must be byte-identical");
}

#[test]
fn demazure_json_reports_graded_dimensions() {
    let out = twdem(&[
        "demazure", "--type", "A2(2)", "--level", "1/2", "--weight", "3", "--out", "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let parsed = from_json_string(&stdout_str(&out)).expect("valid module JSON");
    assert_eq!(parsed.dimension, 6);
    assert_eq!(parsed.level, "1/2");
    let graded: Vec<(String, u64)> = parsed.graded_dimension.0.clone();
    assert_eq!(graded, vec![("0".to_string(), 4), ("1".to_string(), 2)]);
}

#[test]
fn demazure_trivial_module_has_dimension_one() {
    let out = twdem(&["demazure", "--type", "A1(1)", "--level", "1", "--weight", "0", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let parsed = from_json_string(&stdout_str(&out)).expect("valid module JSON");
    assert_eq!(parsed.dimension, 1);
}

#[test]
fn decompose_text_lists_summands() {
    let out = twdem(&["decompose", "--type", "D4(3)", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("V(0,1) x 2"), "unexpected output:\n{text}");
    assert!(
        text.contains("total: 4 summands, dimension 29"),
        "unexpected output:\n{text}"
    );
}

#[test]
fn data_json_exposes_cartan_matrix_and_marks() {
    let out = twdem(&["data", "--type", "D4(3)", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert_eq!(v["type"], "D4(3)");
    assert_eq!(v["comarks"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["cartan"][2][1], serde_json::json!(-3));
}

#[test]
fn unknown_type_exits_with_code_two_and_tagged_error() {
    let out = twdem(&["data", "--type", "Z9(5)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("error[UnsupportedType]"),
        "stderr: {}",
        stderr_str(&out)
    );
}

#[test]
fn even_restriction_exits_with_code_two() {
    let out = twdem(&["weyl", "--type", "A4(2)", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("error[UnsupportedEvenCase]"),
        "stderr: {}",
        stderr_str(&out)
    );
}

#[test]
fn nonpositive_level_exits_with_code_two() {
    let out = twdem(&["demazure", "--type", "A1(1)", "--level", "0", "--weight", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("error[NonPositiveLevel]"),
        "stderr: {}",
        stderr_str(&out)
    );
}

#[test]
fn malformed_weight_exits_with_code_two() {
    let out = twdem(&["demazure", "--type", "A1(1)", "--level", "1", "--weight", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("error[Parse]"), "stderr: {}", stderr_str(&out));
}

#[test]
fn verify_reference_suite_passes_from_the_cli() {
    let out = twdem(&["verify", "--suite", "paper"]);
    let text = stdout_str(&out);
    assert_eq!(out.status.code(), Some(0), "output:\n{text}");
    assert!(text.contains("PASS"), "output:\n{text}");
    assert!(!text.contains("FAIL"), "output:\n{text}");
}
