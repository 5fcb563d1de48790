//! Exact linear algebra over the rationals with integer representatives.
//!
//! Vectors carry arbitrary-precision integer coordinates and subspaces are
//! kept as canonical integer echelon bases, so every routine consumes and
//! produces integers only. Elimination is fraction-free with content
//! cancellation after each row operation.

mod complement;
mod echelon;
mod matrix;
mod vector;

pub use complement::{
    orthogonal_component, orthogonalize, signed_complement, signed_complement_by_kernel,
};
pub use echelon::{
    apply, echelonize, intersect, kernel, quotient_coords, span_contains, span_equal, sum_spaces,
    EchelonBasis,
};
pub use matrix::RatMatrix;
pub use vector::{content_normalize, kron, IntVector, SignVector};
