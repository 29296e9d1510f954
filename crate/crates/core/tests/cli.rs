use std::io::Write;
use std::process::{Command, Output};

use poset_tense::fixtures::EXAMPLE_ONE_TEXT;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_poset-tense"))
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_accepts_the_example() {
    let f = file(EXAMPLE_ONE_TEXT);
    let o = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).ends_with("valid\n"));
}

#[test]
fn check_reports_cycles_with_status_one() {
    let f = file("poset A { elements: 0 a b 1; covers: 0<a, a<b, b<a, b<1; }\n");
    let o = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cycle error"), "{}", stderr(&o));
}

#[test]
fn check_reports_malformed_input_with_status_two() {
    let f = file("poset A { elements 0 1 }\n");
    let o = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error"));
}

#[test]
fn check_flags_non_serial_frames() {
    let f = file("poset A { elements: 0 1; covers: 0<1; }\nframe T { points: 1 2; rel: 1->2; }\n");
    let o = run(&["check", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["items"][1]["kind"], "frame");
    assert_eq!(v["items"][1]["ok"], false);
}

#[test]
fn tense_prints_labelled_antichains() {
    let f = file(EXAMPLE_ONE_TEXT);
    let path = f.path().to_str().unwrap();
    let g = run(&["tense", path, "--op", "G", "--family", "p"]);
    assert_eq!(stdout(&g), "G(p) = [b, b, e]\n");
    let p = run(&["tense", path, "--op", "P", "--family", "{r}"]);
    assert_eq!(stdout(&p), "P(r) = [a, {e,f}, {e,f}]\n");
    let pp = run(&["tense", path, "--op", "P", "--compose", "P", "--family", "r"]);
    assert_eq!(stdout(&pp), "(P*P)(r) = [a, 1, 1]\n");
}

#[test]
fn tense_json_lists_labels() {
    let f = file(EXAMPLE_ONE_TEXT);
    let o = run(&["tense", f.path().to_str().unwrap(), "--op", "H", "--family", "q", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["expression"], "H(q)");
    assert_eq!(v["trajectory"], serde_json::json!([["f"], ["f"], ["b", "c"]]));
}

#[test]
fn tense_on_a_non_serial_frame_fails_with_status_one() {
    let f = file("poset A { elements: 0 1; covers: 0<1; }\nframe T { points: 1 2; rel: 1->2; }\nprop p over A,T = [0, 1];\n");
    let o = run(&["tense", f.path().to_str().unwrap(), "--op", "P", "--family", "p"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("non-serial"));
}

#[test]
fn tense_rejects_unknown_props() {
    let f = file(EXAMPLE_ONE_TEXT);
    let o = run(&["tense", f.path().to_str().unwrap(), "--op", "P", "--family", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_runs_input_cases() {
    let f = file(EXAMPLE_ONE_TEXT);
    let o = run(&["verify", "--suite", "th5", "--input", f.path().to_str().unwrap(), "--cases", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("R within R* and the induced operators coincide: 6 passed"));
}

#[test]
fn verify_prints_replayable_counterexamples() {
    let o = run(&["verify", "--suite", "dynamic", "--corrupt", "F", "--cases", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["corrupt"], "F");
    let failure = v["suites"][0]["properties"]
        .as_array()
        .unwrap()
        .iter()
        .find_map(|p| p.get("first_failure"))
        .unwrap();
    let inst = failure["instance"].as_str().unwrap();
    let f = file(inst);
    let check = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{inst}");
}

#[test]
fn verify_rejects_unknown_suites() {
    let o = run(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("known suites"));
}

#[test]
fn phi_cap_comes_from_the_environment() {
    let o = bin()
        .args(["verify", "--suite", "prop2", "--cases", "20"])
        .env("POSET_TENSE_PHI_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains(" 0 skipped"), "{}", stdout(&o));
}

#[test]
fn export_emits_json() {
    let f = file(EXAMPLE_ONE_TEXT);
    let o = run(&["export", f.path().to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["posets"][0]["name"], "A");
    assert_eq!(v["props"].as_array().unwrap().len(), 3);
}
