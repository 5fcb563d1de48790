//! White and black Manin products and Koszul duals of binary quadratic
//! operads, computed exactly over the rationals.
//!
//! An operad `P(E, R)` is given by its space of binary operations `E` (an
//! `S₂`-module of dimension `n`) and a subspace `R` of the degree-3 space
//! `E(3) = k S₃ ⊗_{k S₂} (E ⊗ E)`, which has dimension `3n²`. Coordinates on
//! `E(3)` use the coset representatives `id, (13), (23)` as three blocks of
//! `n²` entries each.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod exactlin;
pub mod operad;
pub mod products;

pub use error::{Error, Result};
pub use exactlin::{EchelonBasis, IntVector, RatMatrix, SignVector};
pub use operad::{CosetRep, E3Index, OperadPresentation, Perm3};
pub use products::{black, koszul_dual, white};
