use core::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, 2, 3}` stored as its image `[σ(1), σ(2), σ(3)]`.
///
/// Composition is right-to-left: `(σ∘τ)(i) = σ(τ(i))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([1, 2, 3]);
    pub const SWAP12: Perm3 = Perm3([2, 1, 3]);
    pub const SWAP13: Perm3 = Perm3([3, 2, 1]);
    pub const SWAP23: Perm3 = Perm3([1, 3, 2]);
    /// `(123)`: 1→2→3→1.
    pub const CYCLE123: Perm3 = Perm3([2, 3, 1]);
    /// `(132)`: 1→3→2→1.
    pub const CYCLE132: Perm3 = Perm3([3, 1, 2]);

    pub const ALL: [Perm3; 6] = [
        Self::ID,
        Self::SWAP12,
        Self::SWAP13,
        Self::SWAP23,
        Self::CYCLE123,
        Self::CYCLE132,
    ];

    pub fn new(image: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &x in &image {
            if !(1..=3).contains(&x) || seen[usize::from(x - 1)] {
                return Err(Error::NotPermutation(image));
            }
            seen[usize::from(x - 1)] = true;
        }
        Ok(Perm3(image))
    }

    pub fn image(self) -> [u8; 3] {
        self.0
    }

    /// `σ(i)` for `i ∈ {1, 2, 3}`.
    pub fn apply(self, i: u8) -> u8 {
        self.0[usize::from(i - 1)]
    }

    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([
            self.apply(other.0[0]),
            self.apply(other.0[1]),
            self.apply(other.0[2]),
        ])
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0; 3];
        for i in 1..=3u8 {
            inv[usize::from(self.apply(i) - 1)] = i;
        }
        Perm3(inv)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Self::SWAP12 | Self::SWAP13 | Self::SWAP23)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::ID => f.write_str("id"),
            Self::SWAP12 => f.write_str("(12)"),
            Self::SWAP13 => f.write_str("(13)"),
            Self::SWAP23 => f.write_str("(23)"),
            Self::CYCLE123 => f.write_str("(123)"),
            _ => f.write_str("(132)"),
        }
    }
}

/// Fixed transversal of `S₂ = ⟨(12)⟩` in `S₃`; indexes the three blocks of
/// `E(3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CosetRep {
    Id,
    T13,
    T23,
}

impl CosetRep {
    pub const ALL: [CosetRep; 3] = [CosetRep::Id, CosetRep::T13, CosetRep::T23];

    pub fn block(self) -> usize {
        self as usize
    }

    pub fn from_block(block: usize) -> Option<CosetRep> {
        Self::ALL.get(block).copied()
    }

    pub fn perm(self) -> Perm3 {
        match self {
            CosetRep::Id => Perm3::ID,
            CosetRep::T13 => Perm3::SWAP13,
            CosetRep::T23 => Perm3::SWAP23,
        }
    }

    /// Sign of the representative as a permutation.
    pub fn is_odd(self) -> bool {
        self != CosetRep::Id
    }

    /// Label used in reports: `id`, `13` or `23`.
    pub fn label(self) -> &'static str {
        match self {
            CosetRep::Id => "id",
            CosetRep::T13 => "13",
            CosetRep::T23 => "23",
        }
    }
}

/// `σ = rep ∘ tail` with `tail` either the identity or `(12)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CosetDecomposition {
    pub rep: CosetRep,
    /// `true` when the tail is `(12)`.
    pub swapped: bool,
}

impl CosetDecomposition {
    pub fn tail(self) -> Perm3 {
        if self.swapped {
            Perm3::SWAP12
        } else {
            Perm3::ID
        }
    }
}

pub fn coset_decompose(sigma: Perm3) -> CosetDecomposition {
    let (rep, swapped) = match sigma {
        Perm3::ID => (CosetRep::Id, false),
        Perm3::SWAP12 => (CosetRep::Id, true),
        Perm3::SWAP13 => (CosetRep::T13, false),
        Perm3::SWAP23 => (CosetRep::T23, false),
        Perm3::CYCLE123 => (CosetRep::T13, true),
        _ => (CosetRep::T23, true),
    };
    CosetDecomposition { rep, swapped }
}

/// Basis element `ρ ⊗ (e_p ⊗ e_q)` of `E(3)`; `p` and `q` are 0-based.
///
/// It stands for the monomial `(x_{ρ(1)} *_q x_{ρ(2)}) *_p x_{ρ(3)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct E3Index {
    pub rho: CosetRep,
    pub p: usize,
    pub q: usize,
}

impl E3Index {
    pub fn new(rho: CosetRep, p: usize, q: usize) -> Self {
        E3Index { rho, p, q }
    }

    /// 0-based flat position `block(ρ)·n² + p·n + q`.
    pub fn flat(self, n: usize) -> usize {
        self.rho.block() * n * n + self.p * n + self.q
    }

    pub fn from_flat(n: usize, index: usize) -> Option<E3Index> {
        if n == 0 {
            return None;
        }
        let rho = CosetRep::from_block(index / (n * n))?;
        let rest = index % (n * n);
        Some(E3Index {
            rho,
            p: rest / n,
            q: rest % n,
        })
    }

    /// All `3n²` basis indices in flat order.
    pub fn all(n: usize) -> impl Iterator<Item = E3Index> {
        (0..3 * n * n).filter_map(move |i| E3Index::from_flat(n, i))
    }
}
