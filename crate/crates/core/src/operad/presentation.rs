use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::perm::{coset_decompose, E3Index, Perm3};
use crate::error::{check_len, Error, Result};
use crate::exactlin::{echelonize, span_contains, EchelonBasis, IntVector, RatMatrix};

/// A binary quadratic operad `P(E, R)`.
///
/// `action` row `i` holds the coordinates of `e_i^(12)`; `relations` is an
/// `S₃`-invariant subspace of `E(3)` in canonical form.
#[derive(Clone, Debug)]
pub struct OperadPresentation {
    n: usize,
    action: RatMatrix,
    relations: EchelonBasis,
    label: String,
}

/// Outcome of [`validate_presentation`].
#[derive(Clone, Debug)]
pub struct Validated {
    pub presentation: OperadPresentation,
    /// Dimension of the span of the supplied rows before closing under `S₃`.
    pub input_dim: usize,
}

impl Validated {
    pub fn closure_grew(&self) -> bool {
        self.presentation.relations.dim() > self.input_dim
    }
}

/// Checks the action is an involution of the right size and the rows have
/// length `3n²`, then closes the rows under `S₃`.
pub fn validate_presentation(
    n: usize,
    action: RatMatrix,
    rows: &[IntVector],
    label: impl Into<String>,
) -> Result<Validated> {
    check_action(n, &action)?;
    let d = 3 * n * n;
    let input = echelonize(rows, d)?;
    let relations = closure_of(n, &action, input.clone());
    Ok(Validated {
        presentation: OperadPresentation {
            n,
            action,
            relations,
            label: label.into(),
        },
        input_dim: input.dim(),
    })
}

fn check_action(n: usize, action: &RatMatrix) -> Result<()> {
    if action.nrows() != n || action.ncols() != n {
        return Err(Error::ActionShape {
            n,
            rows: action.nrows(),
            cols: action.ncols(),
        });
    }
    if action.mul(action)? != RatMatrix::identity(n) {
        return Err(Error::NotInvolution);
    }
    Ok(())
}

/// Left action of `σ ∈ S₃` on `E(3)` for an `S₂`-module with action matrix
/// `action`: `σ·(ρ ⊗ e_p ⊗ e_q) = ρ' ⊗ e_p ⊗ e_q` when `σρ = ρ'`, and
/// `Σ_t M[q][t] · ρ' ⊗ e_p ⊗ e_t` when `σρ = ρ'(12)`.
pub fn s3_act_with(action: &RatMatrix, sigma: Perm3, v: &[BigRational]) -> Vec<BigRational> {
    let n = action.nrows();
    let mut out = alloc::vec![BigRational::zero(); v.len()];
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = E3Index::from_flat(n, i).expect("index within 3n²");
        let dec = coset_decompose(sigma.compose(idx.rho.perm()));
        if dec.swapped {
            for (t, m) in action.row(idx.q).iter().enumerate() {
                if !m.is_zero() {
                    out[E3Index::new(dec.rep, idx.p, t).flat(n)] += c * m;
                }
            }
        } else {
            out[E3Index::new(dec.rep, idx.p, idx.q).flat(n)] += c;
        }
    }
    out
}

fn act_int(action: &RatMatrix, sigma: Perm3, v: &IntVector) -> IntVector {
    IntVector::from_rationals(&s3_act_with(action, sigma, &v.to_rationals()))
}

/// Smallest `S₃`-invariant subspace containing `rows`, obtained by saturating
/// under the generators `(12)` and `(13)`.
pub fn s3_closure(n: usize, action: &RatMatrix, rows: &[IntVector]) -> Result<EchelonBasis> {
    check_action(n, action)?;
    Ok(closure_of(n, action, echelonize(rows, 3 * n * n)?))
}

fn closure_of(n: usize, action: &RatMatrix, mut span: EchelonBasis) -> EchelonBasis {
    let d = 3 * n * n;
    loop {
        let mut candidates = span.rows().to_vec();
        for r in span.rows() {
            candidates.push(act_int(action, Perm3::SWAP12, r));
            candidates.push(act_int(action, Perm3::SWAP13, r));
        }
        let next = echelonize(&candidates, d).expect("lengths preserved by the action");
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

impl OperadPresentation {
    /// Presentation with no relations (the free operad on `E` up to degree 3).
    pub fn free(n: usize, action: RatMatrix, label: impl Into<String>) -> Result<Self> {
        check_action(n, &action)?;
        Ok(OperadPresentation {
            n,
            action,
            relations: EchelonBasis::zero(3 * n * n),
            label: label.into(),
        })
    }

    /// Assembles a presentation whose relation space is already known to be
    /// canonical and `S₃`-closed.
    pub(crate) fn from_closed_parts(
        n: usize,
        action: RatMatrix,
        relations: EchelonBasis,
        label: String,
    ) -> Self {
        debug_assert_eq!(relations.ambient_dim(), 3 * n * n);
        OperadPresentation {
            n,
            action,
            relations,
            label,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn action(&self) -> &RatMatrix {
        &self.action
    }

    pub fn relations(&self) -> &EchelonBasis {
        &self.relations
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `dim E(3) = 3n²`.
    pub fn e3_dim(&self) -> usize {
        3 * self.n * self.n
    }

    /// `dim P(3) = 3n² − dim R`.
    pub fn dim_space3(&self) -> usize {
        self.e3_dim() - self.relations.dim()
    }

    pub fn s3_act(&self, sigma: Perm3, v: &[BigRational]) -> Result<Vec<BigRational>> {
        check_len(self.e3_dim(), v.len())?;
        Ok(s3_act_with(&self.action, sigma, v))
    }

    /// Integer convenience wrapper around [`Self::s3_act`]; requires an
    /// integral action matrix.
    pub fn s3_act_int(&self, sigma: Perm3, v: &IntVector) -> Result<IntVector> {
        let image = self.s3_act(sigma, &v.to_rationals())?;
        image
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<IntVector>>()
            .ok_or(Error::NotIntegral)
    }

    /// Closure of `rows` under this presentation's `S₃` action.
    pub fn closure(&self, rows: &[IntVector]) -> Result<EchelonBasis> {
        Ok(closure_of(
            self.n,
            &self.action,
            echelonize(rows, self.e3_dim())?,
        ))
    }

    /// Relation rows, taken greedily in canonical order, whose `S₃` closure is
    /// the whole relation space.
    pub fn orbit_generators(&self) -> Vec<IntVector> {
        let mut generators = Vec::new();
        let mut covered = EchelonBasis::zero(self.e3_dim());
        for row in self.relations.rows() {
            if span_contains(&covered, row).expect("same ambient") {
                continue;
            }
            generators.push(row.clone());
            covered = closure_of(
                self.n,
                &self.action,
                echelonize(&generators, self.e3_dim()).expect("row lengths"),
            );
        }
        generators
    }

    /// Rewrites the presentation in the generators `e'_i = Σ_j B[i][j] e_j`.
    pub fn change_basis(&self, basis: &RatMatrix) -> Result<Self> {
        if basis.nrows() != self.n || basis.ncols() != self.n {
            return Err(Error::ActionShape {
                n: self.n,
                rows: basis.nrows(),
                cols: basis.ncols(),
            });
        }
        let inv = basis.inverse()?;
        let action = basis.mul(&self.action)?.mul(&inv)?;
        let n = self.n;
        let rows: Vec<IntVector> = self
            .relations
            .rows()
            .iter()
            .map(|r| {
                let mut v = alloc::vec![BigRational::zero(); self.e3_dim()];
                for (k, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let idx = E3Index::from_flat(n, k).expect("in range");
                    let c = BigRational::from_integer(c.clone());
                    for i in 0..n {
                        let a = inv.get(idx.p, i);
                        if a.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let b = inv.get(idx.q, j);
                            if !b.is_zero() {
                                v[E3Index::new(idx.rho, i, j).flat(n)] += &c * a * b;
                            }
                        }
                    }
                }
                IntVector::from_rationals(&v)
            })
            .collect();
        let relations = echelonize(&rows, self.e3_dim())?;
        Ok(OperadPresentation {
            n,
            action,
            relations,
            label: self.label.clone(),
        })
    }
}

/// Same `n`, identical action matrices and equal relation spans. Labels are
/// ignored.
impl PartialEq for OperadPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.action == other.action && self.relations == other.relations
    }
}

impl Eq for OperadPresentation {}

pub fn equal_presentation(a: &OperadPresentation, b: &OperadPresentation) -> bool {
    a == b
}
