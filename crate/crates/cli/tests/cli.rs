//! End-to-end tests of the `truth` binary: output bytes, exit codes and
//! flag handling.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_file(name: &str) -> String {
    corpus_dir().join(name).to_string_lossy().into_owned()
}

fn truth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_truth"))
        .args(args)
        .env_remove("TRUTH_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn eval_prints_the_liar_table() {
    let out = truth(&["eval", &corpus_file("liar.tsys")]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "system liar\n\
         name  mfp  lifp  final  fps  intrinsic\n\
         L     u    u     f      1    1\n"
    );
}

#[test]
fn eval_json_is_schema_one() {
    let out = truth(&["eval", &corpus_file("logician.tsys"), "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["system"], "logician");
    assert_eq!(doc["verdicts"]["Log"]["mfp"], "u");
    assert_eq!(doc["verdicts"]["Log"]["lifp"], "t");
    assert_eq!(doc["verdicts"]["Log"]["final"], "t");
    assert_eq!(doc["verdicts"]["Log"]["fp_count"], 2);
    assert_eq!(doc["verdicts"]["Log"]["intrinsic_count"], 2);
    assert_eq!(doc["limit_exceeded"], false);
}

#[test]
fn eval_json_keys_follow_declaration_order() {
    let out = truth(&["eval", &corpus_file("gupta_base.tsys"), "--json"]);
    let text = stdout(&out);
    let order: Vec<usize> = ["\"a1\"", "\"a2\"", "\"a3\"", "\"a4\"", "\"a5\"", "\"b1\""]
        .iter()
        .map(|k| text.find(k).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(order, sorted, "keys out of declaration order");
}

#[test]
fn eval_missing_file_is_an_input_error() {
    let out = truth(&["eval", "/no/such/file.tsys"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn eval_empty_file_reports_empty_system() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.tsys");
    fs::write(&path, "").unwrap();
    let out = truth(&["eval", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("declares no sentences"), "stderr: {err}");
}

#[test]
fn eval_parse_error_carries_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tsys");
    fs::write(&path, "system s\nsentence x :=\n").unwrap();
    let out = truth(&["eval", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("3:1"), "position missing in: {err}");
    assert!(err.contains("expected"), "expected-set missing in: {err}");
}

#[test]
fn eval_mode_mfp_skips_enumeration() {
    let out = truth(&["eval", &corpus_file("logician.tsys"), "--mode", "mfp", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verdicts"]["Log"]["lifp"], serde_json::Value::Null);
    assert_eq!(doc["verdicts"]["Log"]["final"], "f"); // closure over the mfp
}

#[test]
fn max_enum_flag_degrades_gracefully() {
    let out = truth(&["eval", &corpus_file("truth_teller.tsys"), "--max-enum", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("unavailable"));
    assert!(text.contains("enumeration skipped"));
}

#[test]
fn max_enum_env_var_is_honored_and_flag_wins() {
    let env_out = Command::new(env!("CARGO_BIN_EXE_truth"))
        .args(["eval", &corpus_file("truth_teller.tsys")])
        .env("TRUTH_MAX_ENUM", "2")
        .output()
        .unwrap();
    assert!(stdout(&env_out).contains("unavailable"));

    let flag_out = Command::new(env!("CARGO_BIN_EXE_truth"))
        .args(["eval", &corpus_file("truth_teller.tsys"), "--max-enum", "100"])
        .env("TRUTH_MAX_ENUM", "2")
        .output()
        .unwrap();
    assert!(!stdout(&flag_out).contains("unavailable"));
}

#[test]
fn graph_emits_dot_with_the_liar_cycle() {
    let out = truth(&[
        "graph",
        &corpus_file("liar.tsys"),
        "--sentence",
        "L",
        "--valuation",
        "lifp",
    ]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph semantic_graph {"));
    assert!(dot.contains("n0 [label=\"L [u]\", shape=box];"));
    assert!(dot.contains("n4 -> n0;"), "cycle edge missing:\n{dot}");
}

#[test]
fn graph_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("liar.dot");
    let out = truth(&[
        "graph",
        &corpus_file("liar.tsys"),
        "--sentence",
        "L",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = fs::read_to_string(&path).unwrap();
    assert!(dot.contains("digraph semantic_graph"));
    // without a valuation, labels carry no values
    assert!(dot.contains("label=\"L\""));
}

#[test]
fn graph_can_label_with_the_minimal_fixed_point() {
    let out = truth(&[
        "graph",
        &corpus_file("logician.tsys"),
        "--sentence",
        "Log",
        "--valuation",
        "mfp",
    ]);
    assert_eq!(code(&out), 0);
    // minimally undetermined, though the lifp would settle it true
    assert!(stdout(&out).contains("n0 [label=\"Log [u]\", shape=box];"));
}

#[test]
fn graph_unknown_sentence_is_an_input_error() {
    let out = truth(&["graph", &corpus_file("liar.tsys"), "--sentence", "zz"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corpus_passes_on_the_shipped_files() {
    let out = truth(&["corpus", corpus_dir().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stdout:\n{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS liar.tsys"));
    assert!(text.contains("corpus: 14 passed, 0 failed"));
}

#[test]
fn corpus_flags_wrong_expectations() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("wrong.tsys"),
        "system wrong\nsentence L := F(L)\nexpect L lifp=t\n",
    )
    .unwrap();
    fs::write(
        dir.path().join("right.tsys"),
        "system right\nsentence I := T(I)\nexpect I lifp=u final=f\n",
    )
    .unwrap();
    let out = truth(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL wrong.tsys"));
    assert!(text.contains("L: lifp expected t, got u"));
    assert!(text.contains("PASS right.tsys"));
    assert!(text.contains("corpus: 1 passed, 1 failed"));
}

#[test]
fn corpus_counts_broken_files_as_failures_but_continues() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("broken.tsys"), "system s\nsentence x := T(").unwrap();
    fs::write(
        dir.path().join("fine.tsys"),
        "system fine\nsentence I := T(I)\nexpect I final=f\n",
    )
    .unwrap();
    let out = truth(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL broken.tsys"));
    assert!(text.contains("PASS fine.tsys"));
}

#[test]
fn corpus_missing_directory_is_an_input_error() {
    let out = truth(&["corpus", "/no/such/dir"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corpus_without_tsys_files_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = truth(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_passes_on_gupta_base() {
    let out = truth(&["check", &corpus_file("gupta_base.tsys")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 9);
    assert!(text.contains("check: 9 passed, 0 failed"));
}

#[test]
fn check_reports_the_self_negation_conjunction() {
    let out = truth(&["check", &corpus_file("strengthened_liar.tsys")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS final: self-negating sentences are true yet not T-true (holds for SL)"));
}

#[test]
fn check_recognizes_a_declared_law_sentence() {
    let out = truth(&["check", &corpus_file("excluded_middle_law.tsys")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS final: the excluded-middle law is true (holds for law)"));
}

#[test]
fn check_skips_past_the_enumeration_limit() {
    let out = truth(&["check", &corpus_file("yablo_10.tsys"), "--max-enum", "100"]);
    assert_eq!(code(&out), 0, "skipped checks do not fail");
    let text = stdout(&out);
    assert!(text.contains("SKIP primary property checks"));
    assert!(text.contains("SKIP final valuation checks"));
}

#[test]
fn usage_errors_exit_two() {
    let out = truth(&["eval"]); // missing file argument
    assert_eq!(code(&out), 2);
    let out = truth(&["no-such-command"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["eval", &corpus_file("gupta_base.tsys"), "--json"];
    let a = truth(&args);
    let b = truth(&args);
    assert_eq!(a.stdout, b.stdout);
}
