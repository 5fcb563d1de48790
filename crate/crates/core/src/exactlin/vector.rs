use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coordinate vector with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(alloc::vec![BigInt::zero(); len])
    }

    /// Standard basis vector `e_index` (0-based) of length `len`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Clears denominators: the result is the rational vector scaled by the
    /// lcm of its denominators, so it spans the same line.
    pub fn from_rationals(coords: &[BigRational]) -> Self {
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    /// Index of the first nonzero entry.
    pub fn pivot(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// gcd of all entries; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [BigInt] {
        &mut self.0
    }

    /// In-place content cancellation with positive leading entry.
    pub(crate) fn normalize_in_place(&mut self) {
        let g = self.content();
        if g.is_zero() {
            return;
        }
        let flip = self
            .0
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(Signed::is_negative);
        let g = if flip { -g } else { g };
        if !g.is_one() {
            for c in &mut self.0 {
                if !c.is_zero() {
                    *c /= &g;
                }
            }
        }
    }

    /// `self ← a·self − b·other`.
    pub(crate) fn combine_in_place(&mut self, a: &BigInt, b: &BigInt, other: &IntVector) {
        let scale = !a.is_one();
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            if scale && !x.is_zero() {
                *x *= a;
            }
            if !y.is_zero() {
                *x -= b * y;
            }
        }
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;

    fn index(&self, index: usize) -> &BigInt {
        &self.0[index]
    }
}

impl FromIterator<BigInt> for IntVector {
    fn from_iter<I: IntoIterator<Item = BigInt>>(iter: I) -> Self {
        IntVector(iter.into_iter().collect())
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }
}

impl<'a> IntoIterator for &'a IntVector {
    type Item = &'a BigInt;
    type IntoIter = core::slice::Iter<'a, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Divides `v` by the gcd of its entries and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
pub fn content_normalize(v: &IntVector) -> IntVector {
    let mut out = v.clone();
    out.normalize_in_place();
    out
}

/// Kronecker product: entry `i·len(v) + j` is `u[i]·v[j]` (0-based).
pub fn kron(u: &IntVector, v: &IntVector) -> IntVector {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            if a.is_zero() || b.is_zero() {
                out.push(BigInt::zero());
            } else {
                out.push(a * b);
            }
        }
    }
    IntVector(out)
}

/// A vector of signs, each exactly `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignVector(Vec<bool>);

impl SignVector {
    /// Builds from `true` = `+1`, `false` = `-1`.
    pub fn from_bools(positive: Vec<bool>) -> Self {
        SignVector(positive)
    }

    /// Returns `None` if some entry is not `±1`.
    pub fn from_i64s(signs: &[i64]) -> Option<Self> {
        signs
            .iter()
            .map(|&s| match s {
                1 => Some(true),
                -1 => Some(false),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
    }

    pub fn all_positive(len: usize) -> Self {
        SignVector(alloc::vec![true; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self, index: usize) -> bool {
        self.0[index]
    }

    pub fn value(&self, index: usize) -> i64 {
        if self.0[index] {
            1
        } else {
            -1
        }
    }

    /// Multiplies `v` entrywise by the signs.
    pub fn twist(&self, v: &IntVector) -> IntVector {
        v.iter()
            .zip(&self.0)
            .map(|(c, &pos)| if pos { c.clone() } else { -c })
            .collect()
    }
}
