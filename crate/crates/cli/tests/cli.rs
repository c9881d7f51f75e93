//! End-to-end tests of the `chorded` binary: the documented pipelines,
//! output determinism, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use chorded_cycles::graph::Graph;
use chorded_cycles::graph6::serialize_graph6;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chorded"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn chorded");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for chorded")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_then_pack_finds_two_cycles() {
    let gen = run(&["gen", "--family", "g2", "--s", "2"], "");
    assert!(gen.status.success());
    let g6 = stdout_of(&gen);

    let pack = run(&["pack", "--s", "2"], &g6);
    assert!(pack.status.success());
    let line = stdout_of(&pack);
    assert!(line.starts_with("witness"), "got: {line}");
    assert_eq!(line.matches("cycle").count(), 2, "expected two cycles: {line}");
}

#[test]
fn gen_then_oracle_rejects_the_tight_family() {
    let gen = run(&["gen", "--family", "g1", "--s", "2"], "");
    assert!(gen.status.success());
    let oracle = run(&["oracle", "--s", "2"], &stdout_of(&gen));
    assert!(oracle.status.success());
    assert_eq!(stdout_of(&oracle).trim(), "false");
}

#[test]
fn find_chorded_reports_none_on_a_plain_cycle() {
    let c6 = serialize_graph6(&Graph::cycle(6).unwrap());
    let out = run(&["find-chorded"], &format!("{c6}\n"));
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "none");

    let k4 = serialize_graph6(&Graph::complete(4));
    let out = run(&["find-chorded"], &format!("{k4}\n"));
    assert_eq!(stdout_of(&out).trim(), "cycle 0 1 2 3 chords 0-2 1-3");
}

#[test]
fn delta2_streams_one_value_per_line() {
    let c5 = serialize_graph6(&Graph::cycle(5).unwrap());
    let k6 = serialize_graph6(&Graph::complete(6));
    let out = run(&["delta2"], &format!("{c5}\n{k6}\n"));
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "3\ninfinite\n");

    let out = run(&["--json", "delta2"], &format!("{k6}\n"));
    assert_eq!(stdout_of(&out).trim(), r#"{"delta2":"infinite"}"#);
}

#[test]
fn blocks_emits_json_decomposition() {
    let p4 = serialize_graph6(&Graph::path(4));
    let out = run(&["blocks"], &format!("{p4}\n"));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(v["cut_vertices"], serde_json::json!([1, 2]));
    assert_eq!(v["leaf_blocks"].as_array().unwrap().len(), 2);
}

#[test]
fn min_system_matches_library_semantics() {
    let k8 = serialize_graph6(&Graph::complete(8));
    let out = run(&["min-system", "--r", "2"], &format!("{k8}\n"));
    assert!(out.status.success());
    let line = stdout_of(&out);
    assert_eq!(line.matches("cycle").count(), 2);

    let c7 = serialize_graph6(&Graph::cycle(7).unwrap());
    let out = run(&["min-system", "--r", "1"], &format!("{c7}\n"));
    assert_eq!(stdout_of(&out).trim(), "none");
}

#[test]
fn verify_is_deterministic_and_clean_on_complete_graphs() {
    let lines: String =
        (8..=10).map(|n| serialize_graph6(&Graph::complete(n)) + "\n").collect();
    let first = run(&["verify", "--s", "2", "--jobs", "2"], &lines);
    let second = run(&["verify", "--s", "2", "--jobs", "2"], &lines);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "stdout must be byte-identical across runs");
    let v: serde_json::Value = serde_json::from_str(stdout_of(&first).trim()).unwrap();
    assert_eq!(v["counts"]["pass"], serde_json::json!(3));
    assert_eq!(v["schema_version"], serde_json::json!(1));
    assert!(v.get("timing_ms").is_none(), "timing is opt-in");
}

#[test]
fn verify_hunt_boundary_mode_runs() {
    let g2 = run(&["gen", "--family", "g2", "--s", "1"], "");
    let out = run(&["verify", "--s", "1", "--mode", "hunt-boundary"], &stdout_of(&g2));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["counts"]["selected"], serde_json::json!(1));
    assert_eq!(v["boundary_witnesses"], serde_json::json!([]));
}

#[test]
fn rand_is_deterministic_per_seed() {
    let a = run(&["rand", "--n", "10", "--t", "8", "--seed", "5"], "");
    let b = run(&["rand", "--n", "10", "--t", "8", "--seed", "5"], "");
    let c = run(&["rand", "--n", "10", "--t", "8", "--seed", "6"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn malformed_input_exits_one() {
    let out = run(&["delta2"], "not-a-graph\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_flag_exits_one() {
    let out = run(&["delta2", "--bogus"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn caps_env_is_honored() {
    let k8 = serialize_graph6(&Graph::complete(8));
    let mut child = Command::new(env!("CARGO_BIN_EXE_chorded"))
        .args(["oracle", "--s", "1"])
        .env("CHORDED_PACK_CAPS", "oracle_n=4")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(format!("{k8}\n").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    // n = 8 exceeds the configured oracle cap: operational error.
    assert_eq!(out.status.code(), Some(1));
}
