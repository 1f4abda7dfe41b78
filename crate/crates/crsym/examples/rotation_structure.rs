//! Rotation structure of weight zero: diagonal/off-diagonal decomposition,
//! nilpotency, the two-piece split, and the normal-form classification.
//!
//! ```bash
//! cargo run --release --example rotation_structure
//! ```

use crsym::fields::Weight;
use crsym::grading::{full_algebra, SolveOptions};
use crsym::model::build_from_pqr;
use crsym::structure::{
    classify_normal_form, diagonal_rotation_flags, rotation_space_info, split_rotation,
};
use crsym::zoo;

fn main() {
    for name in ["dim9", "nilpotent-triangular", "nilpotent-split", "dim13"] {
        let doc = zoo::builtin(name).unwrap();
        let input = crsym::codec::parse_model(&doc).unwrap();
        let spec = input.pqr.clone().expect("builtin PQR model");
        let m = build_from_pqr(&spec).unwrap();
        let report = full_algebra(&m, &SolveOptions::default()).unwrap();
        let g0 = report
            .component(&Weight::from_index(report.d, report.d))
            .unwrap();

        println!("== {} ==", name);
        println!("   Im w = {}", m.phi());
        let nf = classify_normal_form(&spec);
        println!(
            "   normal form: {:?} (parameters {:?}) — predicts {} off-diagonal parameters",
            nf.family,
            nf.parameters,
            nf.predicted_offdiag_params()
        );
        let info = rotation_space_info(&g0.rigid_basis);
        let (real, imag) = diagonal_rotation_flags(&g0.rigid_basis);
        println!(
            "   measured rotation space: s = {}, t = {}, offdiag = {} (real diag: {}, imag diag: {})",
            info.s_dim, info.t_dim, info.offdiag_dim, real, imag
        );
        for x in &g0.rigid_basis {
            let dec = split_rotation(x, &m).expect("theorem guarantees a decomposition");
            let shape = if dec.offdiag.is_zero() {
                "diagonal".to_string()
            } else if dec.n_is_nilpotent {
                "diagonal + nilpotent".to_string()
            } else {
                "diagonal + (nilpotent + nilpotent)".to_string()
            };
            println!("   rotation {}  =>  {}", x, shape);
        }
        println!();
    }
}
