use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn arlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arlab")).args(args).env("ARLAB_CACHE_DIR", cache).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn without_stats(mut v: Value) -> Value {
    if let Some(results) = v["results"].as_array_mut() {
        for r in results {
            r.as_object_mut().unwrap().remove("stats");
        }
    }
    v
}

#[test]
fn g_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["g", "--n", "5", "--target", "K4", "--family", "up:K3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"][0]["value"], 5);
    assert_eq!(v["results"][0]["status"], "exact");
    assert_eq!(v["results"][0]["certificate"]["kind"], "coloring");
}

#[test]
fn verify_example() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--pattern",
        "RTDL",
        "--n",
        "8",
        "--m",
        "2",
        "--mode",
        "f_bad",
        "--target",
        "K5",
        "--family",
        "edges:squares",
    ];
    let out = arlab(dir.path(), &args);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["verified"], true);
    assert_eq!(v["result"]["colors"], 22);
    assert_eq!(v["result"]["bound"], "f >= 23");
}

#[test]
fn failed_verification_reports_the_copy() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(
        dir.path(),
        &["verify", "--pattern", "rainbow", "--n", "5", "--mode", "g_valid", "--target", "K4", "--family", "up:P3"],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"]["verified"], false);
    assert_eq!(v["result"]["violating"]["vertices"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn ex_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["ex", "--n", "6", "--forbid", "K4"]);
    let v = json(&out);
    assert_eq!(v["results"][0]["value"], 12);
    let graph = &v["results"][0]["certificate"]["graph"];
    assert_eq!(graph["order"], 6);
    assert_eq!(graph["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn n_range_expands_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["ar", "--n", "3..6", "--target", "K3"]);
    let v = json(&out);
    let values: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(values, vec![3, 4, 5, 6]);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["f", "--n", "4..5", "--target", "K4", "--family", "free:K3"];
    let fresh = arlab(dir.path(), &args);
    let stored = walk(dir.path());
    assert_eq!(stored, 2, "one file per exact result");
    let cached = arlab(dir.path(), &args);
    assert_eq!(without_stats(json(&fresh)), without_stats(json(&cached)));
    let bypass = arlab(dir.path(), &["--no-cache", "f", "--n", "4..5", "--target", "K4", "--family", "free:K3"]);
    assert_eq!(without_stats(json(&fresh)), without_stats(json(&bypass)));

    // An isomorphic relabelling hits the same entry but echoes its own target.
    let relabelled = arlab(dir.path(), &["g", "--n", "4", "--target", "0-2,2-1", "--family", "up:K3"]);
    let plain = arlab(dir.path(), &["g", "--n", "4", "--target", "0-1,1-2", "--family", "up:K3"]);
    assert_eq!(json(&relabelled)["results"][0]["value"], json(&plain)["results"][0]["value"]);
    assert_eq!(json(&relabelled)["results"][0]["target"]["edges"], serde_json::json!([[0, 2], [1, 2]]));
}

fn walk(dir: &Path) -> usize {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| if p.is_dir() { walk(&p) } else { usize::from(p.extension().is_some_and(|x| x == "json")) })
        .sum()
}

#[test]
fn incomplete_results_are_not_cached() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["g", "--n", "6", "--target", "K4", "--family", "up:M2", "--budget-nodes", "10"]);
    assert_eq!(json(&out)["results"][0]["status"], "lower_bound");
    assert!(!dir.path().exists() || walk(dir.path()) == 0);
}

#[test]
fn errors_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["g", "--n", "5", "--target", "K4", "--family", "k2"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["error"]["kind"], "family_contains_k2");

    let out = arlab(dir.path(), &["f", "--n", "5", "--target", "K4", "--family", "noind:K3"]);
    assert_eq!(json(&out)["error"]["kind"], "parse");

    let out = arlab(dir.path(), &["ar", "--n", "4", "--target", "K9"]);
    assert_eq!(json(&out)["error"]["kind"], "invalid");
}

#[test]
fn packing_commands() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&arlab(dir.path(), &["pack", "--g1", "2K2", "--g2", "K1+K3"]));
    assert_eq!(v["result"]["packs"], false);
    assert_eq!(v["result"]["be_verdict"], "exception");

    let v = json(&arlab(dir.path(), &["overlap", "--h", "C4", "--g", "K3", "--p", "4"]));
    assert_eq!(v["result"]["min_overlap"], 2);

    let v = json(&arlab(dir.path(), &["blockers", "--g", "K3", "--p", "4", "--max-edges", "4"]));
    assert_eq!(v["result"]["complete"], true);
    let graphs = v["result"]["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 1);
    assert_eq!(graphs[0]["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn coloring_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&arlab(dir.path(), &["pattern", "--rainbow", "C6"]));
    assert_eq!(v["result"]["colors"], 7);
    let file = dir.path().join("c6.json");
    std::fs::write(&file, v["result"]["coloring"].to_string()).unwrap();
    let path = file.to_str().unwrap();
    let out =
        arlab(dir.path(), &["verify", "--coloring", path, "--mode", "g_valid", "--target", "K4", "--family", "up:P4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["result"]["bound"], "g >= 7");

    let v = json(&arlab(dir.path(), &["find", "rainbow", "--coloring", path, "--k", "3"]));
    assert_eq!(v["result"]["order"], 3);
}

#[test]
fn invariants_command() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&arlab(dir.path(), &["invariants", "--graph", "P5"]));
    assert_eq!(v["result"]["girth"], 0);
    assert_eq!(v["result"]["acyclic"], true);
    let v = json(&arlab(dir.path(), &["invariants", "--graph", "PETERSEN"]));
    assert_eq!(v["result"]["chi"], 3);
    assert_eq!(v["result"]["girth"], 5);
}

#[test]
fn fast_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = arlab(dir.path(), &["suite", "fast"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["failed"], 0);
    assert_eq!(v["result"]["claims"].as_array().unwrap().len(), 14);
    for c in v["result"]["claims"].as_array().unwrap() {
        assert!(!c["reference"].as_str().unwrap().is_empty());
    }
}
