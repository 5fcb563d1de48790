use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::IntVector;
use crate::error::{check_len, Result};

/// Canonical basis of a rational subspace of `Q^d`.
///
/// Rows are in reduced echelon form with strictly increasing pivot columns,
/// positive pivots, zeros in every other row's pivot column, and each row
/// primitive (gcd 1). Two bases span the same space iff they are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<IntVector>,
}

impl EchelonBasis {
    pub fn zero(ambient: usize) -> Self {
        EchelonBasis {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        EchelonBasis {
            ambient,
            rows: (0..ambient).map(|i| IntVector::unit(ambient, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.pivot().expect("nonzero row"))
            .collect()
    }

    /// Reduces `v` against the basis rows. The result is zero iff `v` lies
    /// in the span; otherwise it is a primitive representative of `v` modulo
    /// the span with zeros in every pivot column.
    pub fn reduce(&self, v: &IntVector) -> Result<IntVector> {
        check_len(self.ambient, v.len())?;
        let mut v = v.clone();
        for row in &self.rows {
            let pc = row.pivot().expect("nonzero row");
            if v[pc].is_zero() {
                continue;
            }
            let (a, b) = elimination_factors(&row[pc], &v[pc]);
            v.combine_in_place(&a, &b, row);
            v.normalize_in_place();
        }
        Ok(v)
    }
}

impl fmt::Display for EchelonBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

/// Multipliers `(a, b)` with `a·pivot − b·entry = 0` and `a > 0` minimal.
fn elimination_factors(pivot: &BigInt, entry: &BigInt) -> (BigInt, BigInt) {
    let g = pivot.gcd(entry);
    let (mut a, mut b) = (pivot / &g, entry / &g);
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    (a, b)
}

/// Fraction-free Gauss-Jordan elimination with content cancellation after
/// every row operation. Returns the canonical basis of the row span.
pub fn echelonize(rows: &[IntVector], d: usize) -> Result<EchelonBasis> {
    for r in rows {
        check_len(d, r.len())?;
    }
    let work = rows
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| {
            let mut r = r.clone();
            r.normalize_in_place();
            r
        })
        .collect();
    Ok(echelonize_owned(work, d))
}

pub(crate) fn echelonize_owned(mut work: Vec<IntVector>, d: usize) -> EchelonBasis {
    let mut rank = 0;
    for col in 0..d {
        if rank == work.len() {
            break;
        }
        // smallest pivot in absolute value keeps intermediate entries small
        let Some(best) = (rank..work.len())
            .filter(|&i| !work[i][col].is_zero())
            .min_by(|&i, &j| work[i][col].magnitude().cmp(work[j][col].magnitude()))
        else {
            continue;
        };
        work.swap(rank, best);
        if work[rank][col].is_negative() {
            for c in work[rank].coords_mut() {
                *c = -core::mem::take(c);
            }
        }
        let (head, tail) = work.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("rank < len");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let (a, b) = elimination_factors(&pivot_row[col], &other[col]);
            other.combine_in_place(&a, &b, pivot_row);
            other.normalize_in_place();
        }
        rank += 1;
        let mut i = rank;
        while i < work.len() {
            if work[i].is_zero() {
                work.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }
    work.truncate(rank);
    for row in &mut work {
        row.normalize_in_place();
    }
    EchelonBasis {
        ambient: d,
        rows: work,
    }
}

/// True iff `v` lies in the rational span of `basis`.
pub fn span_contains(basis: &EchelonBasis, v: &IntVector) -> Result<bool> {
    Ok(basis.reduce(v)?.is_zero())
}

pub fn span_equal(a: &EchelonBasis, b: &EchelonBasis) -> Result<bool> {
    check_len(a.ambient, b.ambient)?;
    Ok(a.rows == b.rows)
}

pub fn sum_spaces(a: &EchelonBasis, b: &EchelonBasis) -> Result<EchelonBasis> {
    check_len(a.ambient, b.ambient)?;
    let rows = a.rows.iter().chain(&b.rows).cloned().collect();
    Ok(echelonize_owned(rows, a.ambient))
}

/// Intersection by reducing the doubled matrix
///
/// ```text
/// [ a_i | a_i ]
/// [ b_j |  0  ]
/// ```
///
/// to echelon form: the right halves of the rows whose left half vanished
/// span `A ∩ B`.
pub fn intersect(a: &EchelonBasis, b: &EchelonBasis) -> Result<EchelonBasis> {
    check_len(a.ambient, b.ambient)?;
    let d = a.ambient;
    let zero = BigInt::zero();
    let mut doubled = Vec::with_capacity(a.dim() + b.dim());
    for r in &a.rows {
        doubled.push(r.iter().chain(r.iter()).cloned().collect::<IntVector>());
    }
    for r in &b.rows {
        doubled.push(
            r.iter()
                .cloned()
                .chain(core::iter::repeat_n(zero.clone(), d))
                .collect::<IntVector>(),
        );
    }
    let reduced = echelonize_owned(doubled, 2 * d);
    let right = reduced
        .rows
        .into_iter()
        .filter(|r| r.coords()[..d].iter().all(Zero::is_zero))
        .map(|r| r.coords()[d..].iter().cloned().collect())
        .collect();
    Ok(echelonize_owned(right, d))
}

/// Canonical basis of `{v : M·v = 0}` for the `rows.len() × d` matrix `M`.
pub fn kernel(rows: &[IntVector], d: usize) -> Result<EchelonBasis> {
    let reduced = echelonize(rows, d)?;
    let pivots = reduced.pivots();
    let mut is_pivot = alloc::vec![false; d];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(d - pivots.len());
    for free in (0..d).filter(|&c| !is_pivot[c]) {
        let scale = reduced
            .rows
            .iter()
            .zip(&pivots)
            .filter(|(r, _)| !r[free].is_zero())
            .fold(BigInt::one(), |acc, (r, &p)| acc.lcm(&r[p]));
        let mut v = IntVector::zeros(d);
        v.coords_mut()[free] = scale.clone();
        for (r, &p) in reduced.rows.iter().zip(&pivots) {
            if !r[free].is_zero() {
                v.coords_mut()[p] = -(&r[free] * (&scale / &r[p]));
            }
        }
        basis.push(v);
    }
    Ok(echelonize_owned(basis, d))
}

/// Integer matrix of size `(d − dim R) × d` whose kernel is exactly the span
/// of `relations`: reduce each standard basis vector modulo the echelon rows
/// and read off the non-pivot coordinates, all scaled by the lcm of the
/// pivot entries.
pub fn quotient_coords(relations: &EchelonBasis) -> Vec<IntVector> {
    let d = relations.ambient;
    let pivots = relations.pivots();
    let mut is_pivot = alloc::vec![false; d];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let scale = relations
        .rows
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |acc, (r, &p)| acc.lcm(&r[p]));
    (0..d)
        .filter(|&c| !is_pivot[c])
        .map(|c| {
            let mut q = IntVector::zeros(d);
            q.coords_mut()[c] = scale.clone();
            for (r, &p) in relations.rows.iter().zip(&pivots) {
                if !r[c].is_zero() {
                    q.coords_mut()[p] = -(&r[c] * (&scale / &r[p]));
                }
            }
            q
        })
        .collect()
}

/// Rows of `matrix` applied to `v`.
pub fn apply(matrix: &[IntVector], v: &IntVector) -> IntVector {
    matrix.iter().map(|row| row.dot(v)).collect()
}
