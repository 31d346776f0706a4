use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-frattini"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn basis(v: &Value) -> &Value {
    &v["basis"]
}

#[test]
fn classify_jordan_member() {
    let r = json(&["classify", "--family", "jordan:alpha=1", "--field", "gf3"]);
    assert_eq!(r["schema"], "lie-frattini/1");
    assert_eq!(r["predicates"]["minimal_non_elementary"]["status"], "true");
    assert_eq!(r["predicates"]["shape"]["value"], "abelian-split");
    assert_eq!(r["predicates"]["jordan_alpha"]["value"], 1);
    assert_eq!(basis(&r["frattini"]), &serde_json::json!([[0, 0, 1]]));
    assert_eq!(r["predicates"]["elementary"]["witness"]["kind"], "nonzero-frattini");
}

#[test]
fn classify_heisenberg() {
    let r = json(&["classify", "--family", "heisenberg", "--field", "gf2"]);
    assert_eq!(r["predicates"]["shape"]["value"], "heisenberg");
    assert_eq!(r["predicates"]["jordan_alpha"]["value"], 0);
}

#[test]
fn search_dimension_three_binary() {
    let r = json(&["search", "--dim", "3", "--field", "gf2"]);
    assert_eq!(r["tables_scanned"], 512);
    assert_eq!(r["jacobi_valid"], 120);
    assert_eq!(r["discrepancies"].as_array().unwrap().len(), 0);
    assert_eq!(r["representatives"].as_array().unwrap().len(), 2);
}

#[test]
fn rotation_algebra_with_companions() {
    let r = json(&["analyze", "--family", "rotation5", "--companion-primes", "3,7"]);
    let expected = serde_json::json!([[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]);
    for c in r["companions"].as_array().unwrap() {
        let phi = &c["report"]["value"]["structure"]["value"]["frattini"];
        assert_eq!(basis(phi), &expected, "prime {}", c["prime"]);
    }
    assert_eq!(r["char0_frattini"]["status"], "asserted");
    assert_eq!(r["char0_frattini"]["companions_agree"], true);
}

#[test]
fn rational_file_is_reduced_by_field() {
    let path = scratch("rotation5-q.json");
    let out = run(&["family", "rotation5", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let file = path.to_str().unwrap();
    let direct = run(&["classify", "--family", "rotation5", "--field", "gf3"]);
    let reduced = run(&["classify", "--file", file, "--field", "gf3"]);
    assert_eq!(direct.stdout, reduced.stdout);
    assert!(String::from_utf8_lossy(&reduced.stderr).contains("reduced modulo 3"));
    let via_reduce = run(&["reduce", "--file", file, "--prime", "3"]);
    let by_family = run(&["family", "rotation5", "--field", "gf3"]);
    assert_eq!(via_reduce.stdout, by_family.stdout);
}

#[test]
fn round_trip_through_a_file_is_byte_identical() {
    for (spec, field) in [("jordan:alpha=1", "gf3"), ("sl2+abelian:n=1", "gf5"), ("heisenberg", "gf4")] {
        let path = scratch(&format!("{}-{field}.json", spec.replace([':', '=', '+'], "_")));
        let file = path.to_str().unwrap();
        assert!(run(&["family", spec, "--field", field, "--output", file]).status.success());
        let from_family = run(&["analyze", "--family", spec, "--field", field]);
        let from_file = run(&["analyze", "--file", file]);
        assert!(from_family.status.success());
        assert_eq!(from_family.stdout, from_file.stdout, "{spec} over {field}");
        let again = run(&["family", spec, "--field", field]);
        assert_eq!(std::fs::read(&path).unwrap(), again.stdout);
    }
}

#[test]
fn repeated_runs_agree() {
    let a = run(&["search", "--dim", "3", "--field", "gf3"]);
    let b = run(&["search", "--dim", "3", "--field", "gf3", "--workers", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

const BROKEN: &str = r#"{"field":{"kind":"prime","p":2},"dim":3,"brackets":[{"i":0,"j":1,"value":[1,0,0]},{"i":1,"j":2,"value":[0,1,0]}]}"#;

#[test]
fn validate_reports_the_failing_triple() {
    let r = json(&["validate", "--json", BROKEN]);
    assert_eq!(r["valid"], false);
    assert_eq!(r["violation"]["triple"], serde_json::json!([0, 1, 2]));
    let ok = json(&["validate", "--family", "sl2", "--field", "gf5"]);
    assert_eq!(ok["valid"], true);
}

#[test]
fn input_errors_exit_2() {
    let jacobi = run(&["analyze", "--json", BROKEN]);
    assert_eq!(jacobi.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&jacobi.stderr).contains("(0, 1, 2)"));
    let malformed = run(&["analyze", "--json", r#"{"field": {"kind":"prime","p":2}, "dim": "#]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 1"));
    let missing = run(&["analyze", "--file", scratch("does-not-exist.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    let family = run(&["classify", "--family", "nonsense"]);
    assert_eq!(family.status.code(), Some(2));
    let rational = run(&["classify", "--family", "heisenberg"]);
    assert_eq!(rational.status.code(), Some(2));
    let two_sources = run(&["classify", "--family", "sl2", "--json", BROKEN]);
    assert_eq!(two_sources.status.code(), Some(2));
}

#[test]
fn cost_caps_exit_3() {
    let lattice = run(&["analyze", "--family", "abelian:n=6", "--field", "gf7"]);
    assert_eq!(lattice.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&lattice.stderr).contains("exceeds the cap"));
    let search = run(&["search", "--dim", "4", "--field", "gf3"]);
    assert_eq!(search.status.code(), Some(3));
    let iso = run(&["isomorphic", "family:rotation5", "family:rotation5", "--field", "gf3"]);
    assert_eq!(iso.status.code(), Some(3));
    let lowered = run(&["classify", "--family", "heisenberg", "--field", "gf3", "--max-subspaces", "10"]);
    assert_eq!(lowered.status.code(), Some(3));
}

#[test]
fn isomorphism_map() {
    let r = json(&["isomorphic", "family:jordan:alpha=1", "family:jordan:alpha=2", "--field", "gf3"]);
    assert_eq!(r["isomorphic"], true);
    assert_eq!(r["map"].as_array().unwrap().len(), 3);
    let r = json(&["isomorphic", "family:heisenberg", "family:jordan:alpha=1", "--field", "gf2"]);
    assert_eq!(r["isomorphic"], false);
}

#[test]
fn lattice_export() {
    let r = json(&["lattice", "--family", "heisenberg", "--field", "gf2", "--full"]);
    assert_eq!(r["summary"]["subalgebras"], 12);
    assert_eq!(r["nodes"].as_array().unwrap().len(), 12);
    assert_eq!(r["covers"].as_array().unwrap().len(), 19);
    let summary = json(&["lattice", "--family", "heisenberg", "--field", "gf2"]);
    assert!(summary.get("nodes").is_none());
}

#[test]
fn text_reports() {
    let out = run(&["classify", "--family", "jordan:alpha=1", "--field", "gf3", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[x, y] = y + z"));
    assert!(text.contains("minimal non-elementary: true"));
    assert!(text.contains("shape: abelian-split"));
    assert!(text.contains("witness nonzero-frattini"));
    let out = run(&["analyze", "--family", "sl2", "--field", "gf2", "--format", "text"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic 2"));
    assert!(String::from_utf8(out.stdout).unwrap().contains("derived series dimensions"));
}
