//! Chebyshev polynomials of the first kind and the half-degree reduction of
//! palindromic polynomials of even degree.
//!
//! For palindromic `P` of degree `2n` and `w = (z + 1/z)/2`,
//!
//! ```text
//! P(z) / (2 z^n) = a_n/2 · T_0(w) + Σ_{k=1..n} a_{n-k} T_k(w)
//! ```
//!
//! The `T_0` coefficient is `a_n/2`, not `a_n`; [`printed_reduction`] builds
//! the variant with `a_n` so that its failure can be demonstrated.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Rational, Ring};
use crate::poly::{Poly, Symmetry};
use crate::text::{render_sum, Joiner};

/// `Σ c_k T_k(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChebExpansion<F> {
    coeffs: Vec<F>,
}

/// JSON form: `{n, coeffs: [...]}` with coefficients as text.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ChebJson {
    pub n: usize,
    pub coeffs: Vec<String>,
}

/// `T_n` via `T_0 = 1`, `T_1 = w`, `T_{k+1} = 2w T_k − T_{k−1}`.
pub fn cheb_t(n: usize) -> Poly<Rational> {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let two_w = Poly::monomial(Rational::from_i64(2), 1);
    let mut cur = Poly::x();
    for _ in 1..n {
        let next = &(&two_w * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `w = (z + 1/z) / 2`.
pub fn joukowski<F: Field>(z: &F) -> Result<F> {
    let inv = z.inv().ok_or(Error::DivisionByZero)?;
    (z.clone() + inv).checked_div(&F::from_i64(2))
}

impl<F: Field> ChebExpansion<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        ChebExpansion { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Highest index `n` (the expansion has `n + 1` coefficients).
    pub fn n(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `Σ c_k T_k(w)` by running the three-term recurrence on values.
    pub fn eval(&self, w: &F) -> F {
        let two_w = F::from_i64(2) * w.clone();
        let (mut prev, mut cur) = (F::one(), w.clone());
        let mut acc = F::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let t = match k {
                0 => F::one(),
                1 => w.clone(),
                _ => {
                    let next = two_w.clone() * cur.clone() - prev.clone();
                    prev = std::mem::replace(&mut cur, next);
                    cur.clone()
                }
            };
            acc = acc + c.clone() * t;
        }
        acc
    }

    /// `2 z^n Σ c_k T_k((z + 1/z)/2)`, which reproduces `P(z)` when the
    /// expansion came from `P`.
    pub fn eval_at_z(&self, z: &F) -> Result<F> {
        let w = joukowski(z)?;
        let zn = (0..self.n()).fold(F::one(), |acc, _| acc * z.clone());
        Ok(F::from_i64(2) * zn * self.eval(&w))
    }

    pub fn to_json(&self) -> ChebJson {
        ChebJson {
            n: self.n(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl<F: Field> fmt::Display for ChebExpansion<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.term_text(), Some(format!("T_{k}(w)"))))
            .collect();
        f.write_str(&render_sum(terms, Joiner::Star))
    }
}

fn half_degree<F: Field>(p: &Poly<F>) -> Result<usize> {
    if p.classify()? != Symmetry::Palindromic {
        return Err(Error::domain(
            "Chebyshev reduction needs a palindromic polynomial",
        ));
    }
    let cipher = p.cipher()?;
    if cipher % 2 == 0 {
        return Err(Error::domain(
            "Chebyshev reduction needs an even degree (odd cipher)",
        ));
    }
    Ok(cipher / 2)
}

/// Expansion of `P(z)/(2z^n)` in `T_k(w)`: `c_0 = a_n/2`, `c_k = a_{n−k}`.
pub fn palindromic_to_cheb<F: Field>(p: &Poly<F>) -> Result<ChebExpansion<F>> {
    let n = half_degree(p)?;
    let a = p.coeffs();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(a[n].checked_div(&F::from_i64(2))?);
    coeffs.extend((1..=n).map(|k| a[n - k].clone()));
    Ok(ChebExpansion { coeffs })
}

/// The expansion with `c_0 = a_n` instead of `a_n/2`. Kept only to
/// demonstrate that this form fails the evaluation identity.
pub fn printed_reduction<F: Field>(p: &Poly<F>) -> Result<ChebExpansion<F>> {
    let n = half_degree(p)?;
    let a = p.coeffs();
    Ok(ChebExpansion {
        coeffs: (0..=n).map(|k| a[n - k].clone()).collect(),
    })
}

/// Inverse of [`palindromic_to_cheb`]. Trailing zero coefficients are
/// treated as a shorter expansion.
pub fn cheb_to_palindromic<F: Field>(c: &ChebExpansion<F>) -> Poly<F> {
    let mut cs = c.coeffs.clone();
    crate::poly::trim_zeros(&mut cs);
    let Some(n) = cs.len().checked_sub(1) else {
        return Poly::zero();
    };
    let mut a = vec![F::zero(); 2 * n + 1];
    a[n] = F::from_i64(2) * cs[0].clone();
    for k in 1..=n {
        a[n - k] = cs[k].clone();
        a[n + k] = cs[k].clone();
    }
    Poly::new(a)
}
