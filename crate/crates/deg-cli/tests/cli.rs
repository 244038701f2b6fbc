//! End-to-end tests of the `deg` binary: golden outputs, exit codes, JSON
//! machine interface, and campaign determinism.

use std::process::{Command, Output};

fn deg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn rsk_reports_the_insertion_shape() {
    let out = deg(&["rsk", "15342"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shape (3,1,1)"));

    let out = deg(&["rsk", "15342", "--out", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["shape"], serde_json::json!([3, 1, 1]));
    assert_eq!(value["p"], value["q"], "an involution inserts to P = Q");
}

#[test]
fn rsk_accepts_comma_separated_words_and_rejects_non_permutations() {
    let out = deg(&["rsk", "1,5,3,4,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("shape (3,1,1)"));

    let out = deg(&["rsk", "1231"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn graph_build_emits_a_five_vertex_chain_for_three_two() {
    let out = deg(&["graph", "build", "--partition", "3,2", "--dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    let nodes = dot.lines().filter(|l| l.contains("label") && !l.contains("--")).count();
    let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(nodes, 5);
    // The five standard fillings form a path: four distinct vertex pairs.
    assert_eq!(edge_lines.len(), 4);
    // A path has exactly two vertices of degree one.
    let mut degree = std::collections::HashMap::new();
    for line in &edge_lines {
        let ends: Vec<&str> = line.trim().split(" [").next().unwrap().split(" -- ").collect();
        *degree.entry(ends[0].to_string()).or_insert(0) += 1;
        *degree.entry(ends[1].to_string()).or_insert(0) += 1;
    }
    let leaves = degree.values().filter(|&&d| d == 1).count();
    assert_eq!(leaves, 2, "five-vertex graph is a chain:\n{dot}");

    // `graph dot` is the same rendering.
    let out2 = deg(&["graph", "dot", "--partition", "3,2"]);
    assert_eq!(dot, stdout(&out2));
}

#[test]
fn graph_check_passes_straight_and_skew_shapes() {
    let out = deg(&["graph", "check", "--partition", "2,2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dual equivalence graph"));

    let out = deg(&[
        "graph", "check", "--partition", "2,2", "--inner", "1", "--out", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["is_deg"], serde_json::json!(true));
    assert_eq!(value["graph"], serde_json::json!("(2,2)/(1)"));
}

#[test]
fn llt_expand_handles_single_shapes_and_guards_wide_tuples() {
    let out = deg(&["llt", "expand", "--tuple", "[[[2,1],[]]]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("s(2,1)  1"), "{text}");
    assert!(!text.contains('q'), "single straight shape is q-free: {text}");

    let out = deg(&["llt", "expand", "--tuple", "[[[2],[]],[[1],[]],[[1],[]]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("diameter"));
}

#[test]
fn llt_graph_and_check_deg_agree_on_a_small_tuple() {
    let tuple = "[[[1],[]],[[1],[]]]";
    let out = deg(&["llt", "graph", "--tuple", tuple, "--out", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["vertices"], serde_json::json!(2));

    let out = deg(&["llt", "check-deg", "--tuple", tuple, "--out", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["all_deg"], serde_json::json!(true));

    let out = deg(&["llt", "graph", "--tuple", tuple, "--dot"]);
    assert!(stdout(&out).starts_with("graph {"));
}

#[test]
fn mac_expand_matches_conjugate_mode_on_a_self_conjugate_shape() {
    let direct = deg(&["mac", "expand", "--shape", "[2,2]", "--out", "json"]);
    assert!(direct.status.success());
    let conj = deg(&["mac", "expand", "--shape", "2,2", "--conjugate", "--out", "json"]);
    assert!(conj.status.success());
    let d: serde_json::Value = serde_json::from_str(&stdout(&direct)).unwrap();
    let c: serde_json::Value = serde_json::from_str(&stdout(&conj)).unwrap();
    assert_eq!(d["schur"], c["schur"]);
    assert_eq!(d["mode"], serde_json::json!("direct"));
    assert_eq!(c["mode"], serde_json::json!("conjugate"));
}

#[test]
fn graded_output_pipes_into_schur_extract() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graded.json");
    let graded = deg(&["mac", "expand", "--shape", "[3,1]", "--graded", "--out", "json"]);
    assert!(graded.status.success());
    std::fs::write(&path, stdout(&graded)).unwrap();

    let extracted = deg(&["schur", "extract", "--input", path.to_str().unwrap()]);
    assert!(extracted.status.success());
    let direct = deg(&["mac", "expand", "--shape", "[3,1]"]);
    let direct_text = stdout(&direct);
    let schur_lines = direct_text
        .lines()
        .filter(|l| l.starts_with("s("))
        .collect::<Vec<_>>()
        .join("\n");
    assert_eq!(stdout(&extracted).trim(), schur_lines);
}

#[test]
fn campaign_reports_are_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let run_a = deg(&[
        "campaign", "run", "--name", "gap-tau", "--n", "4",
        "--out", "json", "--output", a.to_str().unwrap(),
    ]);
    assert!(run_a.status.success());
    let run_b = deg(&[
        "campaign", "run", "--name", "gap-tau", "--n", "4", "--jobs", "3",
        "--out", "json", "--output", b.to_str().unwrap(),
    ]);
    assert!(run_b.status.success());
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "reports must not depend on the worker count"
    );
    // Timing is on stderr so the written reports stay deterministic.
    assert!(stderr(&run_a).contains("finished in"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(report["failed"], serde_json::json!(0));
}

#[test]
fn campaign_witnesses_replay_a_single_instance() {
    let run = deg(&["campaign", "run", "--name", "sharpness", "--out", "json"]);
    assert!(run.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&run)).unwrap();
    let key = report["checks"][0]["key"].as_str().unwrap();

    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("witness.json");
    std::fs::write(
        &witness,
        serde_json::json!({"campaign": "sharpness", "n": 4, "key": key}).to_string(),
    )
    .unwrap();
    let replayed = deg(&[
        "campaign", "run", "--replay", witness.to_str().unwrap(), "--out", "json",
    ]);
    assert!(replayed.status.success());
    let replay_report: serde_json::Value =
        serde_json::from_str(&stdout(&replayed)).unwrap();
    assert_eq!(replay_report["checks"].as_array().unwrap().len(), 1);
    assert_eq!(replay_report["checks"][0]["key"], serde_json::json!(key));
}

#[test]
fn campaign_guards_and_usage_errors_use_distinct_exit_codes() {
    let unknown = deg(&["campaign", "run", "--name", "nope"]);
    assert_eq!(unknown.status.code(), Some(1));

    let too_big = deg(&["campaign", "run", "--name", "gap-tau", "--n", "9"]);
    assert_eq!(too_big.status.code(), Some(1));
    assert!(stderr(&too_big).contains("force"));

    let usage = deg(&["definitely-not-a-subcommand"]);
    assert_eq!(usage.status.code(), Some(2));

    let missing = deg(&["campaign", "run"]);
    assert_eq!(missing.status.code(), Some(2));

    // Arguments that fail to parse into their declared objects are usage
    // errors too, unlike computations that fail on well-formed input.
    let bad_json = deg(&["llt", "expand", "--tuple", "[[[2],[]"]);
    assert_eq!(bad_json.status.code(), Some(2));
    assert!(stderr(&bad_json).contains("--tuple"));

    let bad_partition = deg(&["graph", "build", "--partition", "3,x"]);
    assert_eq!(bad_partition.status.code(), Some(2));
}

#[test]
fn seedless_flag_is_accepted_everywhere() {
    let out = deg(&["--seedless", "rsk", "1234"]);
    assert!(out.status.success());
    let out = deg(&["campaign", "run", "--name", "sharpness", "--seedless"]);
    assert!(out.status.success());
}
