use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linsyz"))
        .args(args)
        .env_remove("LINSYZ_CAP_N")
        .env_remove("LINSYZ_CAP_M")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap())
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn check_both_on_the_nonlinear_line() {
    let f = path("broken_line.txt");
    let (v, code) = json(&["check", &f, "--property", "linear-resolution", "--method", "both"]);
    assert_eq!(code, 0);
    let lr = &v["verdicts"]["linear-resolution"];
    assert_eq!(lr["holds"], false);
    assert_eq!(lr["criterion"]["holds"], false);
    assert_eq!(lr["exact"]["holds"], false);
    assert_eq!(lr["agree"], true);
    assert_eq!(lr["criterion"]["certificate"], serde_json::json!([1, 2, 5]));
}

#[test]
fn betti_of_the_four_cycle() {
    let (v, code) = json(&["betti", &path("c4.txt")]);
    assert_eq!(code, 0);
    let entries: Vec<(u64, u64, u64)> = v["betti"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 2, 4), (1, 3, 4), (2, 4, 1)]);
    let text = String::from_utf8(run(&["betti", &path("c4.txt")]).stdout).unwrap();
    assert!(text.contains("total: 4 4 1"), "{text}");
}

#[test]
fn betti_over_gf2() {
    let (v, code) = json(&["betti", &path("c6_path3.txt"), "--field", "gf:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["betti"]["field"], "gf:2");
    assert_eq!(v["betti"]["projdim"], 2);
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let f = path("broken_line.txt");
    let args = ["check", &f, "--property", "linear-relations", "--property", "scarf", "--method", "both"];
    let (mut a, _) = json(&args);
    let (mut b, _) = json(&args);
    a.as_object_mut().unwrap().remove("timings");
    b.as_object_mut().unwrap().remove("timings");
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn graph_report() {
    let (v, code) = json(&["graph", &path("broken_line.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["graph"]["shape"]["name"], "line");
    assert_eq!(v["verdicts"]["linear-relations"]["certificate"], serde_json::json!([1, 5]));
    let (v, _) = json(&["graph", &path("c6_path3.txt")]);
    assert_eq!(v["graph"]["shape"]["name"], "cycle(6)");
}

#[test]
fn input_records_minimalization() {
    let (v, code) = json(&["graph", &path("redundant.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["input"]["was_minimal"], false);
    assert_eq!(v["input"]["m"], 1);
}

#[test]
fn complex_reports() {
    let (v, code) = json(&["complex", &path("line_complex.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["cohen-macaulay"]["holds"], true);
    assert_eq!(v["verdicts"]["shellable"]["holds"], true);
    assert_eq!(v["verdicts"]["vertex-decomposable"]["holds"], true);
    assert_eq!(v["shape"]["equivalences_hold"], true);

    let (v, code) = json(&["complex", &path("nonpure_complex.txt"), "--report", "cm"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["cohen-macaulay"]["holds"], false);
    assert_eq!(v["verdicts"]["cohen-macaulay"]["reason"], "not pure");
    let (_, code) = json(&["complex", &path("nonpure_complex.txt"), "--report", "shellable"]);
    assert_eq!(code, 2);
}

#[test]
fn gen_prints_the_text_format() {
    let out = run(&["gen", "path-cycle", "--n", "6", "--t", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read_to_string(data("c6_path3.txt")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
    let a = run(&["gen", "random-tree", "--n", "7", "--m", "5", "--seed", "9"]);
    let b = run(&["gen", "random-tree", "--n", "7", "--m", "5", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["gen", "path-line", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "--suite", "line", "--count", "10", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["suite"]["disagreements"], 0);
    assert_eq!(v["suite"]["instances"].as_array().unwrap().len(), 10);
}

#[test]
fn tree_suite_reports_the_scarf_disagreements() {
    let (v, code) = json(&["verify", "--suite", "tree", "--count", "50", "--seed", "3"]);
    assert_eq!(code, 4);
    for inst in v["suite"]["instances"].as_array().unwrap() {
        for violation in inst["violations"].as_array().unwrap() {
            assert!(violation.as_str().unwrap().contains("scarf_matches_graph"), "{violation}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["graph", "--bogus", &path("c4.txt")]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["betti", &path("broken_line.txt"), "--cap-n", "3"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_linsyz"))
        .args(["betti", &path("broken_line.txt")])
        .env("LINSYZ_CAP_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
