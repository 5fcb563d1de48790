//! White and black Manin products and Koszul duality.
//!
//! For `P₁ = P(E₁, R₁)` and `P₂ = P(E₂, R₂)` the white product is generated by
//! `E = E₁ ⊗ E₂`; generator `(i, k)` of `E` is flattened to `i·n₂ + k`. Its
//! relations are the preimage under the embedding
//! `τ: E(3) → E₁(3) ⊗ E₂(3)`,
//! `ρ ⊗ ((e_i⊗f_k) ⊗ (e_j⊗f_l)) ↦ (ρ ⊗ e_i ⊗ e_j) ⊗ (ρ ⊗ f_k ⊗ f_l)`,
//! of the intersection of its image with `R₁ ⊗ E₂(3) + E₁(3) ⊗ R₂`.
//!
//! The Koszul dual pairs `E(3)` with itself diagonally, with sign `+1` on the
//! `id` block and `-1` on the `(13)` and `(23)` blocks, and acts on `E^∨` by
//! `-Mᵀ`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::exactlin::{
    echelonize, intersect, kernel, quotient_coords, signed_complement, EchelonBasis, IntVector,
    RatMatrix, SignVector,
};
use crate::operad::{E3Index, OperadPresentation};

/// Koszul pairing signs on `E(3)`: `sgn(ρ)` for each basis element.
pub fn koszul_signs(n: usize) -> SignVector {
    let block = n * n;
    SignVector::from_bools((0..3 * block).map(|i| i < block).collect())
}

/// Flattened pair `(flat₁, flat₂)` of the `τ`-image of a basis element of
/// `(E₁ ⊗ E₂)(3)`.
pub fn tau_components(n1: usize, n2: usize, idx: E3Index) -> (usize, usize) {
    let (i, k) = (idx.p / n2, idx.p % n2);
    let (j, l) = (idx.q / n2, idx.q % n2);
    (
        E3Index::new(idx.rho, i, j).flat(n1),
        E3Index::new(idx.rho, k, l).flat(n2),
    )
}

/// 0-based position of `τ(idx)` in `E₁(3) ⊗ E₂(3)` of dimension `9n₁²n₂²`.
pub fn tau_position(n1: usize, n2: usize, idx: E3Index) -> usize {
    let (f1, f2) = tau_components(n1, n2, idx);
    f1 * 3 * n2 * n2 + f2
}

fn tau_positions(n1: usize, n2: usize) -> Vec<usize> {
    E3Index::all(n1 * n2)
        .map(|idx| tau_position(n1, n2, idx))
        .collect()
}

pub fn tau_embed(n1: usize, n2: usize, v: &IntVector) -> Result<IntVector> {
    let n = n1 * n2;
    check_len(3 * n * n, v.len())?;
    let mut out = IntVector::zeros(9 * n1 * n1 * n2 * n2);
    for (c, pos) in v.iter().zip(tau_positions(n1, n2)) {
        out.coords_mut()[pos] = c.clone();
    }
    Ok(out)
}

fn white_action(p1: &OperadPresentation, p2: &OperadPresentation) -> RatMatrix {
    p1.action().kron(p2.action())
}

fn white_label(p1: &OperadPresentation, p2: &OperadPresentation) -> alloc::string::String {
    format!("{} o {}", p1.label(), p2.label())
}

/// White product relations by intersecting `K = R₁⊗E₂(3) + E₁(3)⊗R₂` with the
/// image `D` of `τ` and pulling back.
pub fn white_by_intersection(
    p1: &OperadPresentation,
    p2: &OperadPresentation,
) -> OperadPresentation {
    let (n1, n2) = (p1.n(), p2.n());
    let n = n1 * n2;
    let (d1, d2) = (p1.e3_dim(), p2.e3_dim());
    let big = d1 * d2;

    let mut spanning = Vec::with_capacity(p1.relations().dim() * d2 + d1 * p2.relations().dim());
    for r in p1.relations().rows() {
        for j in 0..d2 {
            let mut v = IntVector::zeros(big);
            for (a, c) in r.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                v.coords_mut()[a * d2 + j] = c.clone();
            }
            spanning.push(v);
        }
    }
    for r in p2.relations().rows() {
        for a in 0..d1 {
            let mut v = IntVector::zeros(big);
            v.coords_mut()[a * d2..(a + 1) * d2].clone_from_slice(r.coords());
            spanning.push(v);
        }
    }
    let k = echelonize(&spanning, big).expect("rows built with ambient length");

    let positions = tau_positions(n1, n2);
    let mut image_units: Vec<IntVector> =
        positions.iter().map(|&p| IntVector::unit(big, p)).collect();
    image_units.sort_by_key(|v| v.pivot());
    let image = echelonize(&image_units, big).expect("unit rows");

    let meet = intersect(&k, &image).expect("same ambient");
    let pulled: Vec<IntVector> = meet
        .rows()
        .iter()
        .map(|r| positions.iter().map(|&p| r[p].clone()).collect())
        .collect();
    let relations = echelonize(&pulled, 3 * n * n).expect("pulled back rows");
    OperadPresentation::from_closed_parts(n, white_action(p1, p2), relations, white_label(p1, p2))
}

/// White product relations as the kernel of
/// `v ↦ (Q₁ ⊗ Q₂)·τ(v)`, where `Q_i` are coordinates on `E_i(3)/R_i`.
pub fn white_by_kernel(p1: &OperadPresentation, p2: &OperadPresentation) -> OperadPresentation {
    let (n1, n2) = (p1.n(), p2.n());
    let n = n1 * n2;
    let q1 = quotient_coords(p1.relations());
    let q2 = quotient_coords(p2.relations());
    let components: Vec<(usize, usize)> = E3Index::all(n)
        .map(|idx| tau_components(n1, n2, idx))
        .collect();
    let mut composite = Vec::with_capacity(q1.len() * q2.len());
    for a in &q1 {
        for b in &q2 {
            composite.push(
                components
                    .iter()
                    .map(|&(f1, f2)| {
                        if a[f1].is_zero() || b[f2].is_zero() {
                            num_bigint::BigInt::zero()
                        } else {
                            &a[f1] * &b[f2]
                        }
                    })
                    .collect::<IntVector>(),
            );
        }
    }
    let relations = kernel(&composite, 3 * n * n).expect("composite rows have length 3n²");
    OperadPresentation::from_closed_parts(n, white_action(p1, p2), relations, white_label(p1, p2))
}

/// White product `P₁ ∘ P₂`. Both routes are computed and must agree.
pub fn white(p1: &OperadPresentation, p2: &OperadPresentation) -> Result<OperadPresentation> {
    let by_intersection = white_by_intersection(p1, p2);
    let by_kernel = white_by_kernel(p1, p2);
    if by_intersection.relations() != by_kernel.relations() {
        return Err(Error::CrossCheckFailed);
    }
    Ok(by_intersection)
}

/// Koszul dual `P^! = P(E^∨, R^⊥)`.
pub fn koszul_dual(p: &OperadPresentation) -> OperadPresentation {
    let action = p.action().transpose().neg();
    let relations: EchelonBasis =
        signed_complement(p.relations(), &koszul_signs(p.n())).expect("signs sized to E(3)");
    OperadPresentation::from_closed_parts(p.n(), action, relations, format!("{}^!", p.label()))
}

/// Black product `P₁ • P₂ = (P₁^! ∘ P₂^!)^!`.
pub fn black(p1: &OperadPresentation, p2: &OperadPresentation) -> Result<OperadPresentation> {
    let w = white(&koszul_dual(p1), &koszul_dual(p2))?;
    Ok(koszul_dual(&w).with_label(format!("{} * {}", p1.label(), p2.label())))
}

/// Change of basis taking `white(P₁, P₂)` to the generator order of
/// `white(P₂, P₁)`: new generator `k·n₁ + i` is old generator `i·n₂ + k`.
pub fn factor_swap(n1: usize, n2: usize) -> RatMatrix {
    let n = n1 * n2;
    let mut rows = alloc::vec![alloc::vec![0i64; n]; n];
    for i in 0..n1 {
        for k in 0..n2 {
            rows[k * n1 + i][i * n2 + k] = 1;
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    RatMatrix::from_i64s(&refs).expect("square")
}
