//! Full analysis of one model: validation, nondegeneracy, every graded
//! component, structural predictions and the crosscheck.
//!
//! ```bash
//! cargo run --release --example analyze_model [builtin-name]
//! ```

use crsym::cli::analyze_input;
use crsym::codec::parse_model;
use crsym::grading::SolveOptions;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "dim13".into());
    let doc = crsym::zoo::builtin(&name).unwrap_or_else(|| {
        eprintln!("unknown builtin '{}'; available: {:?}", name, crsym::zoo::names());
        std::process::exit(2);
    });
    let input = parse_model(&doc).expect("builtin specs are valid");
    let analysis = analyze_input(input, &SolveOptions::default()).expect("builtins nondegenerate");

    println!(
        "model '{}': Im w = {}",
        name,
        analysis.input.surface.phi()
    );
    println!("fundamental degree d = {}", analysis.report.d);
    for entry in &analysis.report.components {
        println!(
            "  g_({:>5}): dim {:2}  (rigid {})",
            entry.component.weight.to_string(),
            entry.component.dim,
            entry.rigid_dim
        );
        for field in &entry.component.basis {
            println!("      {}", field);
        }
    }
    println!("total dimension: {}", analysis.report.total_dimension);
    println!("dim g_c (generalized rotations): {}", analysis.report.gc_dimension);
    if let Some(pred) = &analysis.prediction {
        println!(
            "closed-form predictions: g_c = {}, normal form {:?}",
            pred.gc.dim, pred.normal_form.family
        );
    }
    println!(
        "crosscheck discrepancies: {}",
        analysis.outcome.discrepancies.len()
    );
}
