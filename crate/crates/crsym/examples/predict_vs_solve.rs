//! The two independent pillars side by side: closed-form Cramer predictors
//! versus the universal ansatz-and-kernel solver, on the model whose
//! generalized-rotation space is three-dimensional.
//!
//! ```bash
//! cargo run --release --example predict_vs_solve
//! ```

use crsym::grading::{full_algebra, SolveOptions};
use crsym::model::build_from_pqr;
use crsym::structure::{crosscheck, g1_generator, predict, predict_gc, predict_g_minus};
use crsym::zoo;

fn main() {
    let doc = zoo::builtin("exotic3").unwrap();
    let input = crsym::codec::parse_model(&doc).unwrap();
    let spec = input.pqr.clone().unwrap();
    let m = build_from_pqr(&spec).unwrap();
    println!("model: Im w = {}", m.phi());

    // Closed-form route: Cramer systems on the 3×3 exponent data.
    let gc = predict_gc(&spec);
    println!("\npredicted dim g_c = {} with generators:", gc.dim);
    for x in &gc.generators {
        println!("   {}", x);
    }
    let gm = predict_g_minus(&spec);
    println!("predicted dim g_(-1/d) = {}", gm.dim);
    let y = g1_generator(&spec);
    println!("closed-form weight-1 generator: {}", y);

    // Universal route: monomial ansatz + exact kernel per weight.
    let report = full_algebra(&m, &SolveOptions::default()).unwrap();
    println!(
        "\nsolver: dim g_c = {}, dim g_(-1/d) = {}, dim g_1 = {}, total = {}",
        report.gc_dimension,
        report.dim_at_index(report.d - 1),
        report.dim_at_index(2 * report.d),
        report.total_dimension
    );

    // The crosscheck compares them exactly, plus the theorem implications.
    let prediction = predict(&spec, &report);
    let outcome = crosscheck(&report, &prediction);
    println!(
        "\ncrosscheck: {} discrepancies, {} checks skipped",
        outcome.discrepancies.len(),
        outcome.skipped.len()
    );
    assert!(outcome.is_clean());
}
