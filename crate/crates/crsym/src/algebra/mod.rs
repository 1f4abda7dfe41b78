//! Exact arithmetic over Q and Q(i), multivariate polynomial algebra, and
//! exact kernel computation for rational linear systems.
//!
//! Everything downstream — tangency residuals, graded components, structural
//! classifiers — reduces to the types in this module. All values are
//! immutable after construction.

pub mod exponent;
pub mod gauss;
pub mod matrix;
pub mod poly;

pub use exponent::{exponents_of_total, Exponent};
pub use gauss::{rat, rat_int, Gauss, Rat};
pub use matrix::{canonical_basis, in_span, same_span, Eliminator, RatMatrix};
pub use poly::{holo_det, HoloKey, HoloPoly, MixedKey, MixedPoly};

use thiserror::Error;

/// Errors from the exact-algebra layer.
#[derive(Debug, Error)]
pub enum AlgebraError {
    /// Mismatched variable contexts or non-square matrices.
    #[error("dimension error: {0}")]
    Dimension(String),
}
