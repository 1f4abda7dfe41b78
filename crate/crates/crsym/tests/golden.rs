//! Golden-file tests: the full JSON reports of the reference models are
//! pinned byte-for-byte. Any change to solver output, basis normalization,
//! term ordering or serialization shows up here.

mod common;

use crsym::cli::{analysis_to_report_json, analyze_input};
use crsym::codec::parse_model;
use crsym::grading::SolveOptions;
use crsym::zoo;

fn regenerate(name: &str) -> String {
    let doc = zoo::builtin(name).unwrap_or_else(|| panic!("unknown builtin {}", name));
    let input = parse_model(&doc).unwrap();
    let analysis = analyze_input(input, &SolveOptions::default()).unwrap();
    assert!(
        analysis.outcome.is_clean(),
        "golden model {} has discrepancies: {:?}",
        name,
        analysis.outcome.discrepancies
    );
    serde_json::to_string_pretty(&analysis_to_report_json(&analysis).unwrap()).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!(
        "{}/tests/golden/{}.report.json",
        env!("CARGO_MANIFEST_DIR"),
        name
    );
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {}: {}", path, e))
}

fn check(name: &str) {
    let fresh = regenerate(name);
    let pinned = golden(name);
    assert_eq!(
        fresh.trim(),
        pinned.trim(),
        "report for {} drifted from its golden file",
        name
    );
}

#[test]
fn quadric_report_is_stable() {
    check("quadric");
}

#[test]
fn exotic3_report_is_stable() {
    check("exotic3");
}

#[test]
fn dim13_report_is_stable() {
    check("dim13");
}

#[test]
fn dim9_report_is_stable() {
    check("dim9");
}

#[test]
fn nilpotent_triangular_report_is_stable() {
    check("nilpotent-triangular");
}

#[test]
fn nilpotent_split_report_is_stable() {
    check("nilpotent-split");
}

#[test]
fn imaginary_rotation_report_is_stable() {
    check("imaginary-rotation");
}

#[test]
fn regeneration_is_deterministic() {
    assert_eq!(regenerate("dim13"), regenerate("dim13"));
}
