//! End-to-end checks of the command-line interface: exit codes, file
//! round trips, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tvps"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch_dir() -> PathBuf {
    static COUNTER: AtomicU32 = AtomicU32::new(0);
    let dir = std::env::temp_dir().join(format!(
        "tvps-cli-{}-{}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::SeqCst)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_writes_graph_json() {
    let out = run(&["gen", "cycle:5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["family"]["tag"], "cycle");
    assert_eq!(v["edges"].as_array().unwrap().len(), 5);

    let torus = run(&["gen", "torus:3,3"]);
    let v: serde_json::Value = serde_json::from_slice(&torus.stdout).unwrap();
    assert_eq!(v["n"], 9);
    assert_eq!(v["edges"].as_array().unwrap().len(), 18);
}

#[test]
fn gen_dot_output() {
    let out = run(&["gen", "path:3", "--dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    assert!(text.contains("1 -- 2;"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["gen", "cycle:2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "nosuchfamily:4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["label", "complete:5", "--method", "div3"]).status.code(), Some(2));
}

#[test]
fn gen_label_verify_round_trip() {
    let dir = scratch_dir();
    for spec in [
        "cycle:9",
        "path:8",
        "complete:5",
        "multipartite:2,3",
        "grid:3,5",
        "torus:3,3",
    ] {
        let graph_path = dir.join(format!("{}.graph.json", spec.replace([':', ','], "_")));
        let label_path = dir.join(format!("{}.labeling.json", spec.replace([':', ','], "_")));
        let gen = run(&["gen", spec, "--out", graph_path.to_str().unwrap()]);
        assert!(gen.status.success(), "gen {spec}");
        let label = run(&["label", spec, "--out", label_path.to_str().unwrap()]);
        assert!(label.status.success(), "label {spec}");
        let verify = run(&[
            "verify",
            graph_path.to_str().unwrap(),
            label_path.to_str().unwrap(),
        ]);
        assert_eq!(verify.status.code(), Some(0), "verify {spec}");
        let text = String::from_utf8(verify.stdout).unwrap();
        assert!(text.contains("irregular: yes"), "verify output for {spec}");
    }
}

#[test]
fn verify_rejects_colliding_labeling() {
    let dir = scratch_dir();
    let graph_path = dir.join("c4.json");
    run(&["gen", "cycle:4", "--out", graph_path.to_str().unwrap()]);
    let labeling = serde_json::json!({
        "vertex_labels": [1, 1, 1, 1],
        "edge_labels": [
            {"u": 0, "v": 1, "w": 1},
            {"u": 1, "v": 2, "w": 1},
            {"u": 2, "v": 3, "w": 1},
            {"u": 0, "v": 3, "w": 1},
        ],
    });
    let label_path = dir.join("c4.ones.json");
    std::fs::write(&label_path, serde_json::to_string(&labeling).unwrap()).unwrap();
    let verify = run(&[
        "verify",
        graph_path.to_str().unwrap(),
        label_path.to_str().unwrap(),
    ]);
    assert_eq!(verify.status.code(), Some(1));
    let text = String::from_utf8(verify.stdout).unwrap();
    assert!(text.contains("irregular: no"));
    assert!(text.contains("witness: (0, 1)"));
}

#[test]
fn label_methods_and_provenance() {
    let out = run(&["label", "cycle:9", "--method", "table"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["method"], "table");
    assert_eq!(v["strength"], 3);

    let out = run(&["label", "cycle:60", "--method", "chain"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["method"], "prime_chain");
    assert!(v["plan"]["prime"].is_u64());
    assert!(v["plan"]["copies"].is_u64());

    let out = run(&["label", "--torus", "7,7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["method"], "grid_composition");
    assert!(v["plan"]["vertex_pools"].is_array());

    let out = run(&["label", "complete:6", "--method", "greedy"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["strength"].as_u64().unwrap() <= 6);

    let out = run(&[
        "label", "complete:4", "--method", "hamiltonian", "--witness", "0,1,2,3",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["strength"], 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["label", "cycle:100"]);
    let b = run(&["label", "cycle:100"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = run(&["bounds", "multipartite:3,4"]);
    let b = run(&["bounds", "multipartite:3,4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bounds_report_shape() {
    let out = run(&["bounds", "cycle:100"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let bounds = v["bounds"].as_array().unwrap();
    assert!(bounds.iter().all(|b| b["name"].is_string()
        && b["kind"].is_string()
        && b["value"].is_u64()
        && b["ref"].is_string()));
    let best_lower = v["best_lower"].as_u64().unwrap();
    let best_upper = v["best_upper"].as_u64().unwrap();
    assert!(best_lower <= best_upper);
}

#[test]
fn solve_exact_and_bracket() {
    let out = run(&["solve", "cycle:5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tvps"], 3);
    assert!(v["witness"]["vertex_labels"].is_array());

    let out = run(&["solve", "complete:6", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["bracket"].is_array());
}

#[test]
fn solve_reads_graph_files() {
    let dir = scratch_dir();
    let graph_path = dir.join("k33.json");
    run(&["gen", "multipartite:3,3", "--out", graph_path.to_str().unwrap()]);
    let out = run(&["solve", graph_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tvps"], 3);

    // --graph is an alias for the positional target
    let alias = run(&["solve", "--graph", graph_path.to_str().unwrap()]);
    assert_eq!(alias.stdout, out.stdout);
}

#[test]
fn bench_csv_has_six_columns() {
    let dir = scratch_dir();
    let csv_path = dir.join("bench.csv");
    let out = bin()
        .args(["bench", "--max-n", "40", "--csv", csv_path.to_str().unwrap()])
        .env("TVPS_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,lower,div3,div4,chain,best");
    let mut rows = 0;
    for line in lines {
        assert_eq!(line.split(',').count(), 6, "row {line:?}");
        rows += 1;
    }
    assert_eq!(rows, 38); // n = 3..=40

    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("small cycle optima"));
    assert!(stdout.contains("sweep failures: 0"));
}
