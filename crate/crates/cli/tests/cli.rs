//! End-to-end tests against the compiled binary: exit codes, report
//! stability, and the artifact pipeline.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oretree"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON document")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn gen_analyze_pipeline_and_stability() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k35.g");
    let status = bin()
        .args(["gen", "bipartite", "3", "5", "--out"])
        .arg(&graph)
        .status()
        .unwrap();
    assert!(status.success());

    let first = run(&["analyze", graph.to_str().unwrap()]);
    assert!(first.status.success());
    let second = run(&["analyze", graph.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout, "reports must be byte-stable");

    let json = stdout_json(&first);
    assert_eq!(json["schema"], 1);
    assert_eq!(json["input"]["n"], 8);
    assert_eq!(json["input"]["m"], 15);
    assert_eq!(json["profile"]["sigma2"], 6);
    assert_eq!(json["profile"]["k_min"], 3);
    assert_eq!(json["profile"]["max_branch_vertices"], 1);
    assert_eq!(json["profile"]["max_branch_degree_sum"], "3");
}

#[test]
fn analyze_spider_and_infinite_sigma() {
    let dir = tempfile::tempdir().unwrap();
    let spider = dir.path().join("spider.g");
    assert!(bin()
        .args(["gen", "spider", "3", "--out"])
        .arg(&spider)
        .status()
        .unwrap()
        .success());
    let out = run(&["analyze", spider.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["profile"]["sigma2"], 2);
    assert_eq!(json["profile"]["k_min"], 7);
    assert_eq!(json["profile"]["max_branch_vertices"], 3);
    assert_eq!(json["profile"]["max_branch_degree_sum"], "9");

    let complete = dir.path().join("k4.g");
    assert!(bin()
        .args(["gen", "complete", "4", "--out"])
        .arg(&complete)
        .status()
        .unwrap()
        .success());
    let out = run(&["analyze", complete.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["profile"]["sigma2"], "infinity");
    assert_eq!(json["profile"]["k_min"], 1);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = write(dir.path(), "disc.g", "4 2\n0 1\n2 3\n");
    let out = run(&["analyze", disconnected.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let malformed = write(dir.path(), "bad.g", "not a graph\n");
    let out = run(&["analyze", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let looped = write(dir.path(), "loop.g", "2 1\n0 0\n");
    let out = run(&["analyze", looped.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = dir.path().join("nope.g");
    let out = run(&["analyze", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn optimize_certifies_and_emits_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k35.g");
    assert!(bin()
        .args(["gen", "bipartite", "3", "5", "--out"])
        .arg(&graph)
        .status()
        .unwrap()
        .success());

    let tree = dir.path().join("k35.tree");
    let out = bin()
        .args(["optimize", graph.to_str().unwrap(), "--emit", "edges", "--out"])
        .arg(&tree)
        .args(["--verbose"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["bounds"]["all_ok"], true);
    assert_eq!(json["search"]["certified"], true);
    assert_eq!(json["tree"]["leaf_count"], 3);
    assert_eq!(json["tree"]["branch_count"], 1);
    assert!(json["move_log"].is_array());

    // The emitted tree file round-trips through verify.
    let out = run(&["verify", graph.to_str().unwrap(), tree.to_str().unwrap()]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["valid_spanning_tree"], true);
    assert_eq!(json["bounds"]["all_ok"], true);

    let dot = dir.path().join("k35.dot");
    let out = bin()
        .args(["optimize", graph.to_str().unwrap(), "--emit", "dot", "--out"])
        .arg(&dot)
        .output()
        .unwrap();
    assert!(out.status.success());
    let rendered = std::fs::read_to_string(&dot).unwrap();
    assert!(rendered.starts_with("graph spanning_tree {"));
    assert!(rendered.contains("shape=box"));
    assert!(rendered.contains("(leaf)"));
}

#[test]
fn verify_rejects_non_trees() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k35.g");
    assert!(bin()
        .args(["gen", "bipartite", "3", "5", "--out"])
        .arg(&graph)
        .status()
        .unwrap()
        .success());

    let stub = write(dir.path(), "stub.tree", "8 2\n0 3\n0 4\n");
    let out = run(&["verify", graph.to_str().unwrap(), stub.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(7));

    let mismatched = write(dir.path(), "small.tree", "3 2\n0 1\n1 2\n");
    let out = run(&["verify", graph.to_str().unwrap(), mismatched.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(7));
}

#[test]
fn verify_reports_bound_failures_without_asserting() {
    // A valid double-star spanning tree of K_{3,5} that violates the leaf
    // bound still verifies with exit 0.
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k35.g");
    assert!(bin()
        .args(["gen", "bipartite", "3", "5", "--out"])
        .arg(&graph)
        .status()
        .unwrap()
        .success());
    let tree = write(
        dir.path(),
        "double-star.tree",
        "8 7\n0 3\n0 4\n0 5\n0 6\n0 7\n1 3\n2 3\n",
    );
    let out = run(&["verify", graph.to_str().unwrap(), tree.to_str().unwrap()]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["valid_spanning_tree"], true);
    assert_eq!(json["tree"]["leaf_count"], 6);
    assert_eq!(json["bounds"]["leaves_ok"], false);
    assert_eq!(json["bounds"]["all_ok"], false);
}

#[test]
fn oracle_reports_exact_minima() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k35.g");
    assert!(bin()
        .args(["gen", "bipartite", "3", "5", "--out"])
        .arg(&graph)
        .status()
        .unwrap()
        .success());
    let out = run(&["oracle", graph.to_str().unwrap()]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["oracle"]["tree_count"], "2025");
    assert_eq!(json["oracle"]["min_leaves"], 3);
    assert_eq!(json["oracle"]["min_branch_vertices"], 1);

    let k4 = dir.path().join("k4.g");
    assert!(bin()
        .args(["gen", "complete", "4", "--out"])
        .arg(&k4)
        .status()
        .unwrap()
        .success());
    let out = run(&["oracle", k4.to_str().unwrap(), "--cap", "10"]);
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn gen_writes_to_stdout_and_quiet_silences_stderr() {
    let out = run(&["gen", "path", "4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "4 3\n0 1\n1 2\n2 3\n");

    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p4.g", "4 3\n0 1\n1 2\n2 3\n");
    let noisy = run(&["analyze", graph.to_str().unwrap()]);
    assert!(!noisy.stderr.is_empty());
    let quiet = run(&["analyze", graph.to_str().unwrap(), "--quiet"]);
    assert!(quiet.stderr.is_empty());
    assert_eq!(noisy.stdout, quiet.stdout);
}

#[test]
fn bench_table_has_fixed_format() {
    let out = run(&[
        "bench", "--family", "spider", "--sizes", "2,3", "--seeds", "0,1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5, "header plus 4 rows");
    assert!(lines[0].starts_with("family"));
    for row in &lines[1..] {
        assert!(row.starts_with("spider"));
        assert!(row.contains("yes"));
    }
}
