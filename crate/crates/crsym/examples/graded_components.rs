//! Solving graded components one weight at a time: candidate weights,
//! ansatz sizes, and the exact kernel dimensions they collapse to.
//!
//! ```bash
//! cargo run --release --example graded_components
//! ```

use crsym::grading::{ansatz_basis, candidate_weights, rigid_split, solve_component};
use crsym::model::{build_from_pqr, PQRSpec};
use crsym::Exponent;

fn main() {
    // The family-1 model with k = 1 (total algebra dimension 9).
    let spec = PQRSpec::monic(
        Exponent::new(vec![1, 1, 0]),
        Exponent::new(vec![0, 2, 0]),
        Exponent::new(vec![0, 1, 1]),
    )
    .unwrap();
    let m = build_from_pqr(&spec).unwrap();
    println!("model: Im w = {}   (d = {})", m.phi(), m.d());
    println!(
        "{:>8} {:>14} {:>10} {:>9}",
        "weight", "ansatz fields", "dim g_mu", "rigid"
    );

    let mut total = 0;
    for mu in candidate_weights(m.d(), false) {
        let ansatz = ansatz_basis(mu, m.n(), m.d());
        let component = solve_component(&m, mu);
        let (rigid, _) = rigid_split(&component);
        println!(
            "{:>8} {:>14} {:>10} {:>9}",
            mu.to_string(),
            ansatz.len(),
            component.dim,
            rigid.len()
        );
        total += component.dim;
    }
    println!("total dimension: {}", total);
}
