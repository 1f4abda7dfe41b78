//! Vector fields against a model: weights, tangency residuals, brackets.
//!
//! ```bash
//! cargo run --release --example tangency_check
//! ```

use crsym::algebra::{Exponent, Gauss, HoloKey, HoloPoly};
use crsym::fields::{grading_element, lie_bracket, tangency_residual, VectorField};
use crsym::model::{build_from_pqr, PQRSpec};

fn main() {
    // Im w = z1 z̄2³ + z2³ z̄1 + z2 z3 z̄2 z̄3  (degree 4)
    let spec = PQRSpec::monic(
        Exponent::new(vec![1, 0, 0]),
        Exponent::new(vec![0, 3, 0]),
        Exponent::new(vec![0, 1, 1]),
    )
    .unwrap();
    let m = build_from_pqr(&spec).unwrap();
    println!("model: Im w = {}", m.phi());

    let show = |name: &str, x: &VectorField| {
        let t = tangency_residual(x, &m);
        println!("\n{}: X = {}", name, x);
        match x.weight(m.d()) {
            crsym::fields::WeightResult::Homogeneous(w) => println!("  weight: {}", w),
            crsym::fields::WeightResult::Inhomogeneous => println!("  weight: inhomogeneous"),
            crsym::fields::WeightResult::Zero => println!("  weight: zero field"),
        }
        if t.is_zero() {
            println!("  tangent: yes");
        } else {
            println!("  tangent: no, residual = {}", t);
        }
    };

    show("w-translation", &VectorField::d_w(3));
    show("grading element", &grading_element(3, m.d()));
    show("bare z1-translation", &VectorField::d_z(3, 0));

    // The corrected translation a∂/∂z1 + 2iā z2³ ∂/∂w (a = 1) is tangent.
    let mut corrected = VectorField::d_z(3, 0);
    corrected.g = HoloPoly::monomial(
        3,
        HoloKey::new(Exponent::new(vec![0, 3, 0]), 0),
        Gauss::from_parts(0, 1, 2, 1),
    );
    show("corrected z1-translation", &corrected);

    // Brackets respect the grading: [E, X] = μ X for homogeneous X.
    let e = grading_element(3, m.d());
    let br = lie_bracket(&e, &corrected);
    println!(
        "\n[E, X] = {}  (a weight −1/4 eigenvector: equals −(1/4)·X: {})",
        br,
        br == corrected.scale(&Gauss::from_parts(-1, 4, 0, 1))
    );
}
