use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn run_writes_summary_and_curve() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a");
    let o = bso(&["run", "--algo", "bso", "--problem", "F1", "--iters", "100", "--pop", "50", "--seed", "7", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let summary = read_json(&out.join("run.json"));
    assert_eq!(summary["iterations"], 100);
    assert_eq!(summary["seed"], 7);
    assert_eq!(summary["config"]["population"], 50);
    let curve = std::fs::read_to_string(out.join("curve.csv")).unwrap();
    assert_eq!(curve.lines().count(), 102);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut curves = Vec::new();
    for name in ["a", "b"] {
        let out = dir.path().join(name);
        let o = bso(&["run", "--problem", "F9", "--iters", "30", "--pop", "10", "--seed", "3", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        curves.push(std::fs::read(out.join("curve.csv")).unwrap());
    }
    assert_eq!(curves[0], curves[1]);
}

#[test]
fn unknown_names_are_usage_errors() {
    let o = bso(&["run", "--algo", "bso", "--problem", "F99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown problem F99"));

    let o = bso(&["bench", "--algos", "ga"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown algorithm"));

    let o = bso(&["run", "--iters", "many"]);
    assert_eq!(o.status.code(), Some(2));

    let o = bso(&["constrained", "--problem", "tank"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_rejects_unknown_keys_and_yields_to_flags() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"max_iters": 10, "warp_factor": 9}"#).unwrap();
    let o = bso(&["run", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("warp_factor"));

    let good = dir.path().join("good.json");
    std::fs::write(&good, r#"{"problem": "F16", "max_iters": 10, "population": 5, "lambda": 0.5}"#).unwrap();
    let out = dir.path().join("run");
    let o = bso(&["run", "--config", good.to_str().unwrap(), "--iters", "20", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let summary = read_json(&out.join("run.json"));
    assert_eq!(summary["problem"], "F16");
    assert_eq!(summary["iterations"], 20);
    assert_eq!(summary["config"]["lambda"], 0.5);
    assert_eq!(summary["config"]["population"], 5);
}

#[test]
fn bench_with_one_trial_has_zero_spread() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench");
    let o = bso(&["bench", "--algos", "bso", "--problems", "F1", "--trials", "1", "--iters", "20", "--pop", "10", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&out.join("report.json"));
    assert_eq!(report["rows"][0]["cells"][0]["std"], 0.0);
    for file in ["report.txt", "summaries.json", "config.json"] {
        assert!(out.join(file).exists(), "{file}");
    }
}

#[test]
fn bench_finds_the_six_hump_camel_minimum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench");
    let o = bso(&["bench", "--algos", "bso", "--problems", "F16", "--trials", "30", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = read_json(&out.join("report.json"));
    let ave = report["rows"][0]["cells"][0]["ave"].as_f64().unwrap();
    assert!((ave - -1.0316).abs() < 1e-3, "ave = {ave}");
}

#[test]
fn bench_list_prints_the_catalog() {
    let o = bso(&["bench", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let catalog: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(catalog.as_array().is_some_and(|a| a.len() >= 23));
}

#[test]
fn constrained_handles_degenerate_and_normal_runs() {
    let o = bso(&["constrained", "--problem", "pv", "--iters", "0", "--trials", "2"]);
    assert!(matches!(o.status.code(), Some(0) | Some(3)), "{}", stderr(&o));

    let dir = tempfile::tempdir().unwrap();
    let o = bso(&["constrained", "--problem", "hb", "--iters", "300", "--pop", "30", "--trials", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let result = read_json(&dir.path().join("result.json"));
    assert_eq!(result["best"]["feasible"], true);
    assert!(result["best"]["objective"].as_f64().unwrap() < -30000.0);
}
