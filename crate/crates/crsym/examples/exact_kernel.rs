//! Exact null spaces of rational matrices: the linear-algebra engine behind
//! every dimension the solver reports.
//!
//! ```bash
//! cargo run --release --example exact_kernel
//! ```

use crsym::algebra::{rat, RatMatrix};
use num_traits::Zero;

fn main() {
    // A 3×5 system with a two-dimensional kernel.
    let m = RatMatrix::from_dense(vec![
        vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 1), rat(3, 1)],
        vec![rat(0, 1), rat(1, 2), rat(1, 1), rat(0, 1), rat(-1, 1)],
        vec![rat(1, 1), rat(3, 1), rat(2, 1), rat(-1, 1), rat(1, 1)],
    ]);
    println!("matrix: {} rows, {} cols, rank {}", m.rows(), m.cols(), m.rank());

    let basis = m.kernel_basis();
    println!("kernel dimension: {}", basis.len());
    for v in &basis {
        let rendered: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("  v = ({})", rendered.join(", "));
        let image = m.mul_vec(v);
        assert!(image.iter().all(|x| x.is_zero()), "M·v must vanish exactly");
    }
    println!("all kernel vectors satisfy M·v = 0 exactly");

    // The basis is canonical: scaling the matrix does not change it.
    let scaled = RatMatrix::from_dense(vec![
        vec![rat(7, 3), rat(14, 3), rat(0, 1), rat(-7, 3), rat(7, 1)],
        vec![rat(0, 1), rat(5, 2), rat(5, 1), rat(0, 1), rat(-5, 1)],
        vec![rat(-1, 1), rat(-3, 1), rat(-2, 1), rat(1, 1), rat(-1, 1)],
    ]);
    assert_eq!(basis, scaled.kernel_basis());
    println!("canonical form is invariant under row scaling");
}
