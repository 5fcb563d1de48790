use alloc::vec::Vec;

use num_traits::Zero;

use super::echelon::{echelonize_owned, kernel, EchelonBasis};
use super::vector::{IntVector, SignVector};
use crate::error::{check_len, Result};

/// Integer Gram-Schmidt: makes the input vectors pairwise orthogonal under the
/// standard dot product, dropping vectors dependent on earlier ones.
pub fn orthogonalize(vectors: &[IntVector]) -> Vec<IntVector> {
    let mut out: Vec<IntVector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let v = orthogonal_component(&out, v);
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// Component of `v` orthogonal to the span of the pairwise orthogonal
/// `basis`, via `v ← ⟨u,u⟩·v − ⟨u,v⟩·u` for each `u`, cancelling the content
/// after every step.
pub fn orthogonal_component(basis: &[IntVector], v: &IntVector) -> IntVector {
    let mut v = v.clone();
    for u in basis {
        let uv = u.dot(&v);
        if uv.is_zero() {
            continue;
        }
        let uu = u.dot(u);
        v.combine_in_place(&uu, &uv, u);
        v.normalize_in_place();
    }
    v
}

/// Canonical basis of `{f : Σ_k s_k·f_k·a_k = 0 for all a ∈ A}`.
///
/// Orthogonalizes the sign-twisted rows of `A`, projects every standard basis
/// vector onto their orthogonal complement and echelonizes the projections.
pub fn signed_complement(a: &EchelonBasis, signs: &SignVector) -> Result<EchelonBasis> {
    let d = a.ambient_dim();
    check_len(d, signs.len())?;
    let twisted: Vec<_> = a.rows().iter().map(|r| signs.twist(r)).collect();
    let ortho = orthogonalize(&twisted);
    let projections = (0..d)
        .map(|k| orthogonal_component(&ortho, &IntVector::unit(d, k)))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(echelonize_owned(projections, d))
}

/// Same space as [`signed_complement`], computed as the kernel of the
/// sign-twisted row matrix.
pub fn signed_complement_by_kernel(a: &EchelonBasis, signs: &SignVector) -> Result<EchelonBasis> {
    let d = a.ambient_dim();
    check_len(d, signs.len())?;
    let twisted: Vec<_> = a.rows().iter().map(|r| signs.twist(r)).collect();
    kernel(&twisted, d)
}
