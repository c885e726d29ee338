use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invsg")).args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    });
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("invsg-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn order() {
    let out = run(&["sg", "order", "cyclic:28"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1946157056");
    let (code, v) = run_json(&["sg", "order", "klein4"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({ "group": "klein4", "group_order": 4, "order": 20, "enumerated": 20 }));
    assert_eq!(run(&["sg", "order", "cyclic:1"]).status.code(), Some(2));
    let (code, v) = run_json(&["sg", "order", "cyclic:1"]);
    assert_eq!((code, v["error"].as_str()), (2, Some("usage")));
}

#[test]
fn usage_errors() {
    for args in [
        &["sg", "order", "octahedral"][..],
        &["sg", "order", "cyclic:x"],
        &["sg", "frobnicate", "klein4"],
        &["sg", "reduce", "cyclic:3", "--word", "1,7"],
        &["alg", "decompose", "klein4", "--seed", "minus-one"],
        &["pa", "validate", "/nonexistent/file.json"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let bad = scratch("bad.json", "{ not json");
    assert_eq!(run(&["pa", "validate", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn enumerate_and_reduce() {
    let (code, v) = run_json(&["sg", "enumerate", "cyclic:2"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["elements"],
        json!([
            { "support": [0], "degree": 0 },
            { "support": [0, 1], "degree": 0 },
            { "support": [0, 1], "degree": 1 },
        ])
    );
    let (code, v) = run_json(&["sg", "reduce", "cyclic:4", "--word", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({ "support": [0, 1, 2], "degree": 2 }));
    let (code, _) = run_json(&["sg", "enumerate", "cyclic:11"]);
    assert_eq!(code, 1);
}

#[test]
fn verify() {
    let (code, v) = run_json(&["sg", "verify", "cyclic:4"]);
    assert_eq!(code, 0);
    assert_eq!(v["elements"], 20);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["counterexample"].is_null()));
}

#[test]
fn json_is_byte_stable() {
    let a = run(&["alg", "decompose", "klein4", "--json"]).stdout;
    for seed in ["1", "2", "99"] {
        let b = run(&["alg", "decompose", "klein4", "--seed", seed, "--json"]).stdout;
        assert_eq!(a, b, "seed {seed}");
    }
    assert_eq!(String::from_utf8(a).unwrap().trim(), r#"{"blocks":[1,1,1,1,1,1,1,1,1,1,1,3],"center_dim":12,"dim":20}"#);
    let x = run(&["graded", "map", "cyclic:3", "--json"]).stdout;
    assert_eq!(x, run(&["graded", "map", "cyclic:3", "--json"]).stdout);
}

#[test]
fn decompose_text() {
    let out = run(&["alg", "decompose", "cyclic:4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C^7 ⊕ M_2(C) ⊕ M_3(C)"), "{text}");
    let (code, _) = run_json(&["alg", "decompose", "cyclic:9"]);
    assert_eq!(code, 1);
}

#[test]
fn group_files_override_builtins() {
    // A file literally named "klein4" holding the cyclic group of order 4.
    let dir = std::env::temp_dir().join(format!("invsg-cli-override-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
    fs::write(dir.join("klein4"), json!({ "order": 4, "table": table }).to_string()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_invsg"))
        .current_dir(&dir)
        .args(["alg", "decompose", "klein4", "--json"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["blocks"], json!([1, 1, 1, 1, 1, 1, 1, 2, 3]));

    let bad = scratch("notgroup.json", r#"{"order": 2, "table": [[0, 1], [0, 1]]}"#);
    assert_eq!(run(&["sg", "order", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn bernoulli_output_feeds_validate_and_extend() {
    let out = run(&["pa", "bernoulli", "cyclic:3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["set_size"], 4);
    assert_eq!(v["sets"], json!([[0], [0, 1], [0, 2], [0, 1, 2]]));
    // θ_1 sends {0,2} to {1,0} and {0,1,2} to itself.
    assert_eq!(v["theta"]["1"], json!([[2, 1], [3, 3]]));
    let path = scratch("bernoulli3.json", &v.to_string());
    let p = path.to_str().unwrap();

    let (code, report) = run_json(&["pa", "validate", p]);
    assert_eq!(code, 0);
    assert_eq!(report["valid"], true);

    let (code, table) = run_json(&["pa", "extend", p]);
    assert_eq!(code, 0);
    let rows = table["table"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["map"], json!([[0, 0], [1, 1], [2, 2], [3, 3]]));
}

#[test]
fn invalid_action_reports_counterexample() {
    let path = scratch(
        "broken.json",
        &json!({ "group": "cyclic:3", "set_size": 2, "theta": { "0": [[0, 0], [1, 1]], "1": [[0, 1]] } }).to_string(),
    );
    let (code, v) = run_json(&["pa", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "domain");
    assert_eq!(v["details"]["valid"], false);
    assert!(!v["details"]["axioms"]["violations"].as_array().unwrap().is_empty());
    assert!(!v["details"]["semigroup_form"]["violations"].as_array().unwrap().is_empty());
    let (code, _) = run_json(&["pa", "extend", path.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn inline_group_tables() {
    let table: Vec<Vec<usize>> = (0..2).map(|a| (0..2).map(|b| (a + b) % 2).collect()).collect();
    let path = scratch(
        "inline.json",
        &json!({ "group": { "order": 2, "table": table }, "set_size": 2, "theta": { "0": [[0, 0], [1, 1]], "1": [[0, 1], [1, 0]] } })
            .to_string(),
    );
    let (code, v) = run_json(&["pa", "validate", path.to_str().unwrap()]);
    assert_eq!((code, &v["valid"]), (0, &json!(true)));
}

#[test]
fn representations() {
    // The nontrivial character of Z/3, as complex 1x1 matrices.
    let (c, s) = (-0.5, 3f64.sqrt() / 2.0);
    let rep = json!({ "group": "cyclic:3", "dim": 1, "matrices": { "0": [[[1, 0]]], "1": [[[c, s]]], "2": [[[c, -s]]] } });
    let path = scratch("character.json", &rep.to_string());
    let p = path.to_str().unwrap();
    let (code, v) = run_json(&["rep", "validate", p]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"], false);
    let (code, v) = run_json(&["rep", "extend", p]);
    assert_eq!(code, 0);
    assert_eq!(v["images"].as_array().unwrap().len(), 8);

    // 0/1 matrices of the Bernoulli action of Z/2 on {{0}, {0,1}}: exact checks.
    let rep = json!({ "group": "cyclic:2", "dim": 2, "matrices": { "0": [[1, 0], [0, 1]], "1": [[0, 0], [0, 1]] } });
    let path = scratch("bernoulli2.json", &rep.to_string());
    let (code, v) = run_json(&["rep", "extend", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"], true);
    assert_eq!(v["deviations"], json!({ "multiplicative": 0.0, "star": 0.0, "partial_isometry": 0.0 }));

    let rep = json!({ "group": "cyclic:2", "dim": 2, "matrices": { "0": [[1, 0], [0, 1]], "1": [[0, 1], [0, 0]] } });
    let path = scratch("nonrep.json", &rep.to_string());
    let (code, v) = run_json(&["rep", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["details"]["adjoint"], 1.0);
}

#[test]
fn graded() {
    let (code, v) = run_json(&["graded", "count", "cyclic:5"]);
    assert_eq!(code, 0);
    assert_eq!(v, json!({ "group": "cyclic:5", "count": 48, "formula": 48, "matches": true }));
    let (code, v) = run_json(&["graded", "map", "cyclic:2"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["map"],
        json!([
            { "element": { "support": [0], "degree": 0 }, "indices": [0, 1] },
            { "element": { "support": [0, 1], "degree": 0 }, "indices": [1] },
            { "element": { "support": [0, 1], "degree": 1 }, "indices": [2] },
        ])
    );
}
