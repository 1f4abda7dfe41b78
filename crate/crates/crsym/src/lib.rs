//! Exact computation of the graded Lie algebra `g = ⊕_μ g_μ` of
//! real-analytic infinitesimal CR automorphisms of weighted-homogeneous
//! polynomial model hypersurfaces `Im w = Φ(z, z̄)` in `C^{n+1}`, with a
//! structural classification layer for the monomial `PQR` class in `C⁴`
//! (`Im w = PQ̄ + QP̄ + RR̄`).
//!
//! All arithmetic is exact over Q(i); reported dimensions and bases are not
//! approximations. The crate has two independent pillars that cross-check
//! each other:
//!
//! * [`grading`] — a universal solver that finds every graded component by a
//!   monomial ansatz and an exact rational kernel computation;
//! * [`structure`] — closed-form structural predictors (generalized-rotation
//!   dimensions, rotation decompositions, normal-form classification) solved
//!   by Cramer systems on exponent data.
//!
//! Each capability has a runnable entry point under `examples/`:
//!
//! | example              | shows                                              |
//! |----------------------|----------------------------------------------------|
//! | `analyze_model`      | the full pipeline on a built-in model              |
//! | `graded_components`  | per-weight ansatz → exact kernel → dimension       |
//! | `tangency_check`     | weights, residuals, Lie brackets                   |
//! | `exact_kernel`       | canonical rational null spaces                     |
//! | `rotation_structure` | diagonal + nilpotent decomposition, normal forms   |
//! | `predict_vs_solve`   | closed-form predictors against the solver          |
//! | `scan_families`      | exhaustive verification up to a degree bound       |
//!
//! ```bash
//! cargo run --release --example analyze_model
//! ```
//!
//! The thin `crsym` binary fronts the same library for scripted use
//! (`analyze`, `scan`, `check-field`, `examples`).

pub mod algebra;
pub mod cli;
pub mod codec;
pub mod fields;
pub mod grading;
pub mod model;
pub mod structure;
pub mod zoo;

pub use algebra::{Exponent, Gauss, HoloPoly, MixedPoly, Rat, RatMatrix};
pub use fields::{grading_element, lie_bracket, tangency_residual, VectorField, Weight};
pub use grading::{candidate_weights, full_algebra, solve_component, AlgebraReport};
pub use model::{build_from_pqr, ModelSurface, PQRSpec};
