use std::process::{Command, Output};

fn selfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = selfdual(&["verify", "--rows", "E1", "--workers", "1", "--report", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("E1  pass"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let row = &report["rows"]["E1"];
    assert_eq!(row["status"], "pass");
    assert_eq!(row["beta"], 238);
    assert_eq!(row["gamma"], 0);
    assert_eq!(row["a12"], 1394);
    assert_eq!(report["summary"]["failed"], 0);
}

#[test]
fn verify_exits_nonzero_on_unreproduced_rows() {
    let out = selfdual(&["verify", "--rows", "G2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("G2  FAIL"));
    assert!(text.contains("no candidate reproduces"));
}

#[test]
fn lint_builtin_corpus_is_clean() {
    let out = selfdual(&["lint"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("41 rows, 0 issues"));
}

#[test]
fn lint_flags_a_bad_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.txt");
    std::fs::write(
        &path,
        "E1 construction F2 C17 natural 00000000000011011 00000000000000000 00100110010110111 ; 68 34 11 W68_2 238 0 - known\n",
    )
    .unwrap();
    let out = selfdual(&["--corpus", path.to_str().unwrap(), "lint"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("E1"));
}

#[test]
fn show_row_prints_the_generator() {
    let out = selfdual(&["show-row", "E1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("E1"));
    assert!(text.lines().count() >= 34);
}

#[test]
fn search_is_deterministic() {
    let args = ["search", "--ring", "F2uF2", "--group", "C4", "--seed", "3", "--trials", "300", "--min-dist", "4"];
    let a = selfdual(&args);
    let b = selfdual(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let result: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(result["config"]["trials"], 300);
    assert!(result["self_dual"].as_u64().unwrap() >= result["hits"].as_array().unwrap().len() as u64);
}

#[test]
fn bad_arguments_are_rejected() {
    assert_eq!(selfdual(&["show-row", "Z9"]).status.code(), Some(2));
    assert_eq!(selfdual(&["--corpus", "/nonexistent/corpus.txt", "lint"]).status.code(), Some(2));
    let out = selfdual(&["search", "--ring", "F3", "--group", "C4", "--seed", "1", "--trials", "1", "--min-dist", "2"]);
    assert!(!out.status.success());
    let out = selfdual(&["search", "--ring", "F2", "--group", "C19", "--seed", "1", "--trials", "1", "--min-dist", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
