//! End-to-end checks of the `msk` binary: verbs, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR")))
}

fn msk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msk")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn validate_fig2_is_valid_with_exit_zero() {
    let out = msk(&["validate", fixture("fig2.graph.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "valid");
}

#[test]
fn validate_rejects_invariant_violations_with_exit_one() {
    let dir = std::env::temp_dir().join("msk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.graph.json");
    std::fs::write(
        &path,
        r#"{"vertices": [{"id": "m", "index": 0}, {"id": "s", "index": 1}, {"id": "x", "index": 2}],
            "rotations": {"m": ["m1"], "s": ["s1", "s2"], "x": ["x1"]},
            "darts": {"m1": {"edge": "e1"}, "s1": {"edge": "e1"}, "s2": {"edge": "e2"}, "x1": {"edge": "e2"}},
            "edges": {"e1": {"ends": ["m1", "s1"]}, "e2": {"ends": ["s2", "x1"]}}}"#,
    )
    .unwrap();
    let out = msk(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("saddle degree != 4"));
}

#[test]
fn malformed_files_exit_two() {
    let dir = std::env::temp_dir().join("msk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = msk(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = msk(&["persist", "barcode", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_verbs_exit_two_with_usage() {
    let out = msk(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).to_lowercase().contains("usage"));
}

#[test]
fn count_lower_bound_prints_eight() {
    let out = msk(&["count", "lower-bound", fixture("nested3.barcode.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "8");
}

#[test]
fn equiv_graph_reports_inequivalence_with_exit_zero() {
    let out = msk(&[
        "equiv",
        "graph",
        fixture("fig3_left.graph.json").to_str().unwrap(),
        fixture("fig3_right.graph.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "not graph-equivalent");
}

#[test]
fn persist_barcode_matches_fig3() {
    let out = msk(&["persist", "barcode", fixture("fig3_left.graph.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        vec!["H0 [1, inf)", "H0 [2, 3)", "H1 [4, 6)", "H1 [5, 7)", "H2 [8, inf)"]
    );
}

#[test]
fn outputs_are_byte_deterministic() {
    for args in [
        vec!["persist", "barcode"],
        vec!["persist", "reeb", "--json"],
        vec!["render", "merge-tree"],
    ] {
        let mut full = args.clone();
        let path = fixture("fig3_left.graph.json");
        full.push(path.to_str().unwrap());
        let a = msk(&full);
        let b = msk(&full);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let path = fixture("nested3.barcode.json");
    let args = vec!["count", "enumerate", "--json", path.to_str().unwrap()];
    let a = msk(&args);
    let b = msk(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn moves_enum_apply_round_trip() {
    let path = fixture("fig2.graph.json");
    let out = msk(&["moves", "enum", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let first = stdout(&out).lines().next().unwrap().to_string();
    assert!(first.contains("face_max"));
    let applied = msk(&["moves", "apply", "--move", &first, path.to_str().unwrap()]);
    assert_eq!(applied.status.code(), Some(0));
    // The output is a graph file; validate it through a temp file.
    let dir = std::env::temp_dir().join("msk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let tmp = dir.join("applied.graph.json");
    std::fs::write(&tmp, stdout(&applied)).unwrap();
    let validated = msk(&["validate", tmp.to_str().unwrap()]);
    assert_eq!(validated.status.code(), Some(0));
}

#[test]
fn moves_connect_and_explore() {
    let left = fixture("fig3_left.graph.json");
    let right = fixture("fig3_right.graph.json");
    let out = msk(&[
        "moves",
        "connect",
        left.to_str().unwrap(),
        right.to_str().unwrap(),
        "--max-depth",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("connected in"));

    let out = msk(&["moves", "explore", left.to_str().unwrap(), "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("17 reachable codes"));
}

#[test]
fn slices_verbs_work() {
    let worm = fixture("worm.history.json");
    let shot = fixture("shotglass.history.json");
    let out = msk(&["slices", "barcode", shot.to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), vec!["H0 [0, 3]", "H0 (1, 2)"]);
    let out = msk(&["slices", "poset", worm.to_str().unwrap(), "--at", "1.5"]);
    assert_eq!(stdout(&out).trim(), "(()())");
    let out = msk(&["slices", "poset", worm.to_str().unwrap(), "--at", "1.5", "--dot"]);
    assert!(stdout(&out).starts_with("digraph hasse"));
    let out = msk(&["slices", "poset", worm.to_str().unwrap(), "--at", "1.0"]);
    assert_eq!(out.status.code(), Some(1), "critical values are rejected");
    let out = msk(&["slices", "zigzag", worm.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 8);
    let out = msk(&["equiv", "poset", worm.to_str().unwrap(), shot.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "not poset-equivalent");
}

#[test]
fn count_enumerate_respects_env_cap() {
    let path = fixture("nested3.barcode.json");
    let out = Command::new(env!("CARGO_BIN_EXE_msk"))
        .args(["count", "enumerate", "--quiet", path.to_str().unwrap()])
        .env("MSK_MAX_BARS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the cap"));
    let out = msk(&["count", "enumerate", "--quiet", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "count 8 (bound 8)");
}

#[test]
fn realize_round_trips_through_the_cli() {
    let path = fixture("fig17.barcode.json");
    let hist = msk(&["realize", "history", path.to_str().unwrap()]);
    assert_eq!(hist.status.code(), Some(0));
    let dir = std::env::temp_dir().join("msk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let tmp = dir.join("realized.history.json");
    std::fs::write(&tmp, stdout(&hist)).unwrap();
    let bars = msk(&["slices", "barcode", tmp.to_str().unwrap()]);
    assert_eq!(
        stdout(&bars).lines().collect::<Vec<_>>(),
        vec!["H0 [0, 5]", "H0 [1, 4)", "H0 [2, 3)"]
    );
    let reeb = msk(&["realize", "reeb", path.to_str().unwrap()]);
    assert!(stdout(&reeb).starts_with("graph reeb"));
    let bad = fixture("sublevel_bad.barcode.json");
    let out = msk(&["realize", "reeb", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("open bar forbidden"));
}

#[test]
fn render_graph_uses_the_documented_styles() {
    let out = msk(&["render", "graph", fixture("fig2.graph.json").to_str().unwrap()]);
    let text = stdout(&out);
    assert!(text.contains("style=solid"), "saddle-max connections are solid");
    assert!(text.contains("style=dashed"), "saddle-min connections are dashed");
}
