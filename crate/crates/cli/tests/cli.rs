use std::io::Write;
use std::process::{Command, Output};

fn albertson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_albertson"))
        .args(args)
        .env_remove("ALBERTSON_SEARCH_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_13_succeeds() {
    let o = albertson(&["verify", "--r", "13"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("| 18 | 128 | 238 | 0.719 | 288 |"));
    assert!(text.contains("Verdict: Verified"));
}

#[test]
fn verify_17_reports_gaps() {
    let o = albertson(&["verify", "--r", "17"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("Gaps: n = 33, 34"), "{text}");
    assert!(text.contains("Verdict: GapsRemain"));

    let csv = albertson(&["verify", "--r", "17", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&csv.stderr).contains("33, 34"));
}

#[test]
fn structured_output_round_trips() {
    let o = albertson(&["verify", "--r", "15", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let report = albertson_core::verifier::parse_structured(&stdout(&o)).unwrap();
    assert_eq!(report.rows.len(), 8);
}

#[test]
fn bound_matches_table_row() {
    let o = albertson(&["bound", "--n", "18", "--m", "128"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("p: 719/1000 ≈ 0.7190"), "{text}");
    assert!(text.contains("sampling: 288 "));
    assert!(text.contains("linear (4): 238 "));
}

#[test]
fn explicit_p_is_exact() {
    let text = stdout(&albertson(&["bound", "--n", "20", "--m", "100", "--p", "1"]));
    // p = 1 reduces to 4m − 103(n − 2)/6.
    assert!(text.contains("sampling: 91 (raw 91)"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(albertson(&["verify"]).status.code(), Some(2));
    assert_eq!(albertson(&["verify", "--r", "13", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(albertson(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(albertson(&["verify", "--r", "3"]).status.code(), Some(2));
    assert_eq!(albertson(&["bound", "--n", "18", "--m", "128", "--p", "abc"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["verify", "--r", "16"][..], &["lemma357", "--r", "20"], &["catlin", "--k", "20"]] {
        let a = albertson(args);
        let b = albertson(args);
        assert_eq!(a.stdout, b.stdout);
    }
    let par = albertson(&["verify", "--r", "17", "--format", "csv"]);
    let seq = albertson(&["verify", "--r", "17", "--format", "csv", "--sequential"]);
    assert_eq!(par.stdout, seq.stdout);
}

#[test]
fn lemma357_and_catlin_statuses() {
    assert_eq!(albertson(&["lemma357", "--r", "17"]).status.code(), Some(0));
    assert_eq!(albertson(&["lemma357", "--r", "16"]).status.code(), Some(2));
    let catlin = albertson(&["catlin", "--k", "50"]);
    assert_eq!(catlin.status.code(), Some(1));
    assert!(stdout(&catlin).contains("fails for k = 2, 3, 4, 5, 6, 7, 9, 11"));
}

#[test]
fn families_build_and_check() {
    let o = albertson(&["families", "--kind", "delta", "--params", "2,1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("vertices: 7, edges: 11, chromatic number: 4"));
    assert!(text.contains("4-critical: true"));
    assert!(text.contains("topological K_4: yes"));

    let wheel = albertson(&["families", "--kind", "join", "--params", "complete:1+complete:3"]);
    assert_eq!(wheel.status.code(), Some(0));

    assert_eq!(albertson(&["families", "--kind", "delta", "--params", "5,1,1"]).status.code(), Some(2));
}

#[test]
fn check_list_reads_graph6() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // K4, then C5 which is 3-critical but not 4-critical.
    writeln!(file, "C~").unwrap();
    writeln!(file, "Dhc").unwrap();
    let path = file.path().to_str().unwrap();

    let o = albertson(&["check-list", "--file", path, "--r", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("graph 1: 4 vertices, 6 edges, 4-critical: true"), "{text}");
    assert!(text.contains("graph 2: 5 vertices, 5 edges, 4-critical: false"), "{text}");

    let only_k4 = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(only_k4.path(), "C~\n").unwrap();
    let o = albertson(&["check-list", "--file", only_k4.path().to_str().unwrap(), "--r", "4"]);
    assert_eq!(o.status.code(), Some(0));

    assert_eq!(albertson(&["check-list", "--file", "/nonexistent/list.g6", "--r", "4"]).status.code(), Some(2));
}

#[test]
fn budget_override_is_enforced() {
    let o = Command::new(env!("CARGO_BIN_EXE_albertson"))
        .args(["families", "--kind", "catlin", "--params", "3"])
        .env("ALBERTSON_SEARCH_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}
