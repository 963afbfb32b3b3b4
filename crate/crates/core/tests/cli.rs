use std::process::Command;

use serde_json::Value;
use spoly::cli::{run_captured, Faults, Outcome, EXIT_BUDGET, EXIT_HYPOTHESES, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK};
use spoly::codec::parse_tri3;
use spoly::model::CATALOG_NAMES;

fn run(args: &[&str]) -> Outcome {
    run_faulty(args, Faults::default())
}

fn run_faulty(args: &[&str], faults: Faults) -> Outcome {
    run_captured(std::iter::once("spoly").chain(args.iter().copied()), faults)
}

#[test]
fn validate_catalog_and_missing_inputs() {
    for name in CATALOG_NAMES {
        let o = run(&["validate", &format!("catalog:{name}")]);
        assert_eq!(o.code, EXIT_OK, "{name}: {}", o.stderr);
    }
    assert_eq!(run(&["validate", "catalog:nonexistent"]).code, EXIT_INVALID);
    assert_eq!(run(&["validate", "/nonexistent/file.spoly"]).code, EXIT_INVALID);
    assert_eq!(run(&["frobnicate"]).code, EXIT_INVALID);
}

#[test]
fn broken_file_reports_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.spoly");
    std::fs::write(&path, "polyhedron broken\nedge t circle ident 999\n").unwrap();
    let o = run(&["validate", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(!o.stderr.is_empty() || !o.stdout.is_empty());
}

#[test]
fn analyze_json_for_bing_house() {
    let o = run(&["analyze", "catalog:bing_house", "--dim", "4", "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["compatible"], Value::Bool(true));
    assert_eq!(v["pi1"]["status"], "trivial");
    let thm2 = v["decisions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["paper_ref"] == "Thm 2" && c["claim"] == "M is a standard sphere or S^4")
        .unwrap();
    assert_eq!(thm2["verdict"], "affirmed");
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(run(&["analyze", "catalog:disc", "--dim", "2"]).code, EXIT_INVALID);
    let o = run(&["analyze", "catalog:bing_house", "--dim", "4", "--budget", "0"]);
    assert_eq!(o.code, EXIT_BUDGET, "{}", o.stdout);
}

#[test]
fn thicken_writes_only_certified_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bing.tri3");
    let o = run(&["thicken", "catalog:bing_house", "-o", out.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let t = parse_tri3(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(t.tets.len(), 524);

    let refused = dir.path().join("refused.tri3");
    let o = run(&["thicken", "catalog:incompatible_circle", "-o", refused.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_HYPOTHESES);
    assert!(!refused.exists());

    let faulty = dir.path().join("faulty.tri3");
    let faults = Faults { self_glued_face: true, ..Faults::default() };
    let o = run_faulty(&["thicken", "catalog:disc", "-o", faulty.to_str().unwrap()], faults);
    assert_eq!(o.code, EXIT_INTERNAL, "{}", o.stderr);
    assert!(!faulty.exists());
}

#[test]
fn collapse_exit_codes() {
    let o = run(&["collapse", "catalog:disc", "--json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "collapsed");
    assert_eq!(run(&["collapse", "catalog:bing_house"]).code, EXIT_BUDGET);
    assert_eq!(run(&["collapse", "catalog:bing_house", "--exhaustive-max", "100000"]).code, EXIT_OK);
    assert_eq!(run(&["collapse", "catalog:round_bundle"]).code, EXIT_OK);
    let faults = Faults { truncated_collapse: true, ..Faults::default() };
    assert_eq!(run_faulty(&["collapse", "catalog:disc"], faults).code, EXIT_INTERNAL);
}

#[test]
fn output_is_byte_identical_for_a_seed() {
    for args in [
        &["collapse", "catalog:disc", "--seed", "5", "--json"][..],
        &["analyze", "catalog:two_crossings", "--dim", "5", "--json", "--seed", "5"][..],
        &["thicken", "catalog:suzuoka"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn examples_lists_the_catalog() {
    let o = run(&["examples"]);
    assert_eq!(o.code, EXIT_OK);
    for name in CATALOG_NAMES {
        assert!(o.stdout.contains(name), "{name}");
    }
    let o = run(&["examples", "bing_house"]);
    assert!(o.stdout.lines().any(|l| l == "polyhedron bing_house"), "{}", o.stdout);
}

#[test]
fn binary_matches_library_entry_point() {
    let bin = env!("CARGO_BIN_EXE_spoly");
    let out = Command::new(bin).args(["analyze", "catalog:disc", "--dim", "3", "--json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let lib = run(&["analyze", "catalog:disc", "--dim", "3", "--json"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    let out = Command::new(bin).args(["thicken", "catalog:incompatible_circle"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_HYPOTHESES));
    assert!(out.stdout.is_empty());
}
