//! Presentations of binary quadratic operads and the `S₃`-module `E(3)`.
//!
//! The basis element `ρ ⊗ (e_p ⊗ e_q)` of `E(3)` reads as the monomial
//! `(x_{ρ(1)} *_q x_{ρ(2)}) *_p x_{ρ(3)}`, so for example
//! `(13) ⊗ (e_1 ⊗ e_2)` is `(x_3 *_2 x_2) *_1 x_1`.

mod perm;
mod presentation;
mod render;

pub use perm::{coset_decompose, CosetDecomposition, CosetRep, E3Index, Perm3};
pub use presentation::{
    equal_presentation, s3_act_with, s3_closure, validate_presentation, OperadPresentation,
    Validated,
};
pub use render::{Monomial, MonomialTerm};
