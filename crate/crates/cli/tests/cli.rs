use std::path::PathBuf;
use std::process::{Command, Output};

use coxinv_core::{Element, Group};
use serde_json::Value;

fn coxinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = coxinv(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&ok(&full)).unwrap()
}

fn word(g: &Group, v: &Value) -> Element {
    g.parse_element(v.as_str().expect("words are strings"))
        .expect("word re-parses")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("coxinv-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn info_a3() {
    let v = json(&["info", "--type", "A3"]);
    assert_eq!(v["order"], 24);
    assert_eq!(v["positive_roots"], 6);
    assert_eq!(v["involutions"], 9);
    let text = ok(&["info", "--type", "A3"]);
    assert!(text.contains("order           24"));
}

#[test]
fn excess_of_four_cycle() {
    assert_eq!(ok(&["excess", "--type", "A3", "--element", "1 2 3"]).trim(), "2");
    assert_eq!(json(&["excess", "--type", "A3", "--element", "1 2 3"])["excess"], 2);
    let annotated = ok(&["excess", "--type", "A3", "--element", "1 2 3", "--cycles"]);
    assert!(annotated.contains("(1234)"));
}

fn counts_column(csv: &str) -> Vec<u64> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("excess,count"));
    lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn sym6_distribution_csv() {
    let strict = ok(&[
        "distribution",
        "--type",
        "A5",
        "--format",
        "csv",
        "--nontrivial-reversers",
    ]);
    assert_eq!(counts_column(&strict), [489, 173, 46, 10, 2]);
    // the identity counts as 1 * 1 by default
    let default = ok(&["distribution", "--type", "A5", "--format", "csv"]);
    assert_eq!(counts_column(&default), [490, 172, 46, 10, 2]);
    let parallel = ok(&["distribution", "--type", "A5", "--format", "csv", "--parallel", "4"]);
    assert_eq!(parallel, default);
}

#[test]
fn pairs_json_words_reparse() {
    let g = Group::from_symbol("A3").unwrap();
    let v = json(&["pairs", "--type", "A3", "--element", "1 2 3"]);
    let w = word(&g, &v["w"]);
    assert_eq!(v["excess"], 2);
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    for p in pairs {
        let (x, y) = (word(&g, &p["x"]), word(&g, &p["y"]));
        assert_eq!(x.compose(&y), w);
        assert!(x.is_involutive() && y.is_involutive());
        assert_eq!(x.length() + y.length(), w.length() + 2);
    }
}

#[test]
fn witness_json_is_a_certificate() {
    let g = Group::from_symbol("B3").unwrap();
    let all = json(&["witness", "--type", "B3"]);
    let certs = all.as_array().unwrap();
    assert_eq!(certs.len(), 10);
    for c in certs {
        let w = word(&g, &c["w"]);
        let conj = word(&g, &c["conjugator"]);
        let (ws, s, t) = (word(&g, &c["w_star"]), word(&g, &c["sigma"]), word(&g, &c["tau"]));
        assert_eq!(w.conjugate_by(&conj), ws);
        assert_eq!(s.compose(&t), ws);
        assert_eq!(ws.length(), s.length() + t.length());
        assert_eq!(c["lengths"]["w_star"], ws.length());
    }
    let greedy = json(&["witness", "--type", "B3", "--element", "1 2 3", "--greedy"]);
    assert!(greedy["w_star"].is_string());
}

#[test]
fn classes_json_and_csv() {
    let g = Group::from_symbol("A3").unwrap();
    let v = json(&["classes", "--type", "A3"]);
    let classes = v.as_array().unwrap();
    assert_eq!(classes.len(), 5);
    let total: u64 = classes.iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 24);
    for c in classes {
        word(&g, &c["representative"]);
    }
    let csv = ok(&["classes", "--type", "A3", "--format", "csv"]);
    assert!(csv.starts_with("representative,size,cuspidal\n,1,false\n"));
}

#[test]
fn verify_is_deterministic() {
    let a = ok(&["verify", "--type", "B3"]);
    let b = ok(&["verify", "--type", "B3"]);
    assert_eq!(a, b);
    assert!(!a.contains("FAIL"));
    let v = json(&["verify", "--type", "A4", "--samples", "200"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn matrix_file_input() {
    let path = temp_file("a2.json", r#"{"rank":2,"m":[[1,3],[3,1]]}"#);
    let v = json(&["info", "--matrix", path.to_str().unwrap()]);
    assert_eq!(v["order"], 6);
    std::fs::remove_file(path).ok();
}

#[test]
fn affine_matrix_is_a_computation_error() {
    let path = temp_file("affine.json", r#"{"rank":3,"m":[[1,3,3],[3,1,3],[3,3,1]]}"#);
    let out = coxinv(&["info", "--matrix", path.to_str().unwrap(), "--root-cap", "200"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not finite"));
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[(&[&str], &str)] = &[
        (&["info"], "--type"),
        (&["info", "--type", "X9"], "--type"),
        (&["excess", "--type", "A3", "--element", "1 5"], "--element"),
        (&["excess", "--type", "A3", "--element", "one"], "--element"),
        (&["classes", "--type", "B3", "--cycles"], "--cycles"),
        (&["info", "--type", "A3", "--format", "csv"], "--format"),
        (&["info", "--type", "A3", "--matrix", "m.json"], "--matrix"),
        (&["info", "--type", "A3", "--bogus"], "--bogus"),
        (&["excess", "--type", "A3"], "--element"),
        (&["info", "--matrix", "/nonexistent/coxinv.json"], "--matrix"),
    ];
    for (args, flag) in cases {
        let out = coxinv(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(flag), "{args:?}: {err}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = coxinv(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("distribution"));
}
