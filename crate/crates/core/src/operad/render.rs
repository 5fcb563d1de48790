use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::perm::{coset_decompose, E3Index, Perm3};
use super::presentation::OperadPresentation;
use crate::error::{check_len, Result};
use crate::exactlin::IntVector;

/// A degree-3 monomial in the generators; operation indices are 0-based and
/// variables are `1..=3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Monomial {
    /// `ω_outer(ω_inner(x_a, x_b), x_c)`
    Left {
        outer: usize,
        inner: usize,
        vars: [u8; 3],
    },
    /// `ω_outer(x_a, ω_inner(x_b, x_c))`
    Right {
        outer: usize,
        inner: usize,
        vars: [u8; 3],
    },
}

impl OperadPresentation {
    /// Coordinates of a monomial in the standard basis of `E(3)`.
    pub fn monomial_vector(&self, m: Monomial) -> Result<Vec<BigRational>> {
        let n = self.n();
        let mut out = alloc::vec![BigRational::zero(); self.e3_dim()];
        match m {
            Monomial::Left { outer, inner, vars } => {
                self.add_left(
                    &mut out,
                    &BigRational::one(),
                    outer,
                    inner,
                    Perm3::new(vars)?,
                );
            }
            Monomial::Right {
                outer,
                inner,
                vars: [a, b, c],
            } => {
                // ω_p(x, y) = ω_p^(12)(y, x) = Σ_t M[p][t] ω_t(y, x)
                let sigma = Perm3::new([b, c, a])?;
                for t in 0..n {
                    let m = self.action().get(outer, t).clone();
                    if !m.is_zero() {
                        self.add_left(&mut out, &m, t, inner, sigma);
                    }
                }
            }
        }
        Ok(out)
    }

    fn add_left(
        &self,
        out: &mut [BigRational],
        coef: &BigRational,
        outer: usize,
        inner: usize,
        sigma: Perm3,
    ) {
        let n = self.n();
        let dec = coset_decompose(sigma);
        if dec.swapped {
            for (t, m) in self.action().row(inner).iter().enumerate() {
                if !m.is_zero() {
                    out[E3Index::new(dec.rep, outer, t).flat(n)] += coef * m;
                }
            }
        } else {
            out[E3Index::new(dec.rep, outer, inner).flat(n)] += coef;
        }
    }

    /// Integer coordinates of `Σ c·m`; denominators (from a rational action)
    /// are cleared.
    pub fn identity_vector(&self, terms: &[(i64, Monomial)]) -> Result<IntVector> {
        let mut acc = alloc::vec![BigRational::zero(); self.e3_dim()];
        for &(c, m) in terms {
            let c = BigRational::from_integer(c.into());
            for (a, x) in acc.iter_mut().zip(self.monomial_vector(m)?) {
                *a += &c * x;
            }
        }
        Ok(IntVector::from_rationals(&acc))
    }

    /// The monomial terms of `v`, one per nonzero coordinate in flat order.
    pub fn monomial_terms(&self, v: &IntVector) -> Result<Vec<MonomialTerm>> {
        check_len(self.e3_dim(), v.len())?;
        Ok(v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let idx = E3Index::from_flat(self.n(), i).expect("in range");
                let rho = idx.rho.perm();
                MonomialTerm {
                    coefficient: c.clone(),
                    outer_op: idx.p,
                    inner_op: idx.q,
                    variable_order: [rho.apply(1), rho.apply(2), rho.apply(3)],
                }
            })
            .collect())
    }

    /// Renders `v` as a signed sum of `(x_a s_q x_b) s_p x_c`, where `s_i` is
    /// `symbols[i]`.
    pub fn monomial_render<S: AsRef<str>>(&self, v: &IntVector, symbols: &[S]) -> Result<String> {
        check_len(self.n(), symbols.len())?;
        let terms = self.monomial_terms(v)?;
        if terms.is_empty() {
            return Ok(String::from("0"));
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            let negative = t.coefficient.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = t.coefficient.abs();
            if !magnitude.is_one() {
                let _ = write!(out, "{magnitude} ");
            }
            out.push_str(&t.render(symbols));
        }
        Ok(out)
    }
}

/// `coefficient · ω_outer(ω_inner(x_a, x_b), x_c)` with `(a, b, c) =
/// variable_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialTerm {
    pub coefficient: BigInt,
    pub outer_op: usize,
    pub inner_op: usize,
    pub variable_order: [u8; 3],
}

impl MonomialTerm {
    /// The monomial without its coefficient.
    pub fn render<S: AsRef<str>>(&self, symbols: &[S]) -> String {
        let [a, b, c] = self.variable_order;
        let mut s = String::new();
        let _ = write!(
            s,
            "(x{a} {} x{b}) {} x{c}",
            symbols[self.inner_op].as_ref(),
            symbols[self.outer_op].as_ref()
        );
        s
    }
}
