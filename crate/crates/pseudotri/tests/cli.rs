//! End-to-end checks of the command-line interface: subcommand behavior
//! and the exit-code contract (0 ok, 1 validation, 2 usage, 3 budget).

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudotri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_accepts_the_whole_corpus() {
    let dir = corpus("");
    let mut args = vec!["validate".to_string()];
    for entry in std::fs::read_dir(dir).unwrap() {
        args.push(entry.unwrap().path().to_string_lossy().into_owned());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_pseudotri"))
        .args(&args)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn validate_rejects_malformed_input_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.thd");
    std::fs::write(&bad, b"{ not json").unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run(&["invariants", "/nonexistent/file.ptd"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_prints_the_index_block() {
    let out = run(&["invariants", corpus("s1xb3.ptd").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("c         1"), "{}", text);
    assert!(text.contains("c_pair    3"), "{}", text);
    assert!(text.contains("k         [1, 1, 0]"), "{}", text);
}

#[test]
fn invariants_json_output_is_parseable() {
    let out = run(&["invariants", corpus("s2xd2.ptd").to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["c"], 1);
    assert_eq!(v["c_pair"], 3);
}

#[test]
fn bracket_of_the_trefoil_surface_is_the_left_handed_jones() {
    let out = run(&["bracket", corpus("trefoil_surface.shd").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("q^-2 + q^-6 - q^-8"), "{}", text);
    assert!(text.contains("writhe   -3"), "{}", text);
}

#[test]
fn boundary_link_extracts_a_three_crossing_knot() {
    let out = run(&["boundary-link", corpus("trefoil_surface.shd").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("components  1"), "{}", text);
    assert!(text.contains("O1- U2- O3- U1- O2- U3-"), "{}", text);
}

#[test]
fn homclass_reports_the_pairing_of_the_lift_fixtures() {
    let out = run(&[
        "homclass",
        corpus("cp1_lht_lift_1.lnk").to_str().unwrap(),
        corpus("cp1_lht_lift_2.lnk").to_str().unwrap(),
        corpus("cp1_lht_lift_3.lnk").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("sector 1  0"), "{}", text);
    assert!(text.contains("sector 2  1"), "{}", text);
    assert!(text.contains("sector 3  1"), "{}", text);
    assert!(text.contains("pairing   2"), "{}", text);
}

#[test]
fn enumerate_respects_the_complexity_budget() {
    let out = run(&["enumerate", "--max-complexity", "5"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["enumerate", "--max-complexity", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("complete  true"));
}

#[test]
fn enumerate_output_is_seed_independent() {
    let a = run(&["enumerate", "--max-complexity", "3", "--seed", "1", "--format", "json"]);
    let b = run(&["enumerate", "--max-complexity", "3", "--seed", "99", "--format", "json"]);
    assert_eq!(out_json(&a), out_json(&b));
}

fn out_json(out: &Output) -> serde_json::Value {
    assert_eq!(out.status.code(), Some(0));
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn move_band_rejects_disk_sectors_and_succeeds_on_genus() {
    // Every neat arc in a disk sector separates, so the band move on the
    // trivial ball diagram must be refused, not faked.
    let out = run(&[
        "move",
        corpus("trivial_b4.ptd").to_str().unwrap(),
        "--type",
        "band",
        "--sector",
        "0",
        "--move-site",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));

    // On a positive-genus sector the move applies and raises c by 1.
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("moved.ptd");
    let out = run(&[
        "move",
        corpus("s1xb3.ptd").to_str().unwrap(),
        "--type",
        "band",
        "--sector",
        "1",
        "--move-site",
        "0",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let check = run(&["invariants", out_file.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("c         2"), "{}", stdout(&check));
}

#[test]
fn move_torus_on_trivial_b4_yields_a_valid_complexity_1_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("moved.ptd");
    let out = run(&[
        "move",
        corpus("trivial_b4.ptd").to_str().unwrap(),
        "--type",
        "torus-i",
        "--sector",
        "0",
        "--move-site",
        "0",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let check = run(&["invariants", out_file.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("c         1"), "{}", stdout(&check));
}

#[test]
fn render_emits_svg() {
    let out = run(&["render", corpus("s1s2.thd").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("<svg "), "{}", &text[..text.len().min(80)]);
    assert!(text.trim_end().ends_with("</svg>"));
}
