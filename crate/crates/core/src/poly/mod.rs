//! Dense univariate polynomials with Reversing (`~`) and Pasting (`⋄`).
//!
//! Coefficients are stored constant-term first, so Reversing is a flip of
//! the coefficient vector and Pasting is a shift followed by an addition.
//! Only polynomials with a nonzero constant term can be reversed; the
//! unchecked [`Poly::raw_coefficient_flip`] exists for exhibiting what goes
//! wrong without that restriction.

mod factored;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Ring, TermKind, TermText};
use crate::text::{render_sum, Joiner};

pub(crate) use factored::reciprocal_matching;
pub use factored::{FactoredLinear, RootPairing};

/// Symmetry class of a coefficient sequence under Reversing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Palindromic,
    Antipalindromic,
    Neither,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Palindromic => "palindromic",
            Symmetry::Antipalindromic => "antipalindromic",
            Symmetry::Neither => "neither",
        })
    }
}

/// Classifies a coefficient sequence against its reversal.
pub(crate) fn symmetry_of<R: Ring>(coeffs: &[R]) -> Symmetry {
    let n = coeffs.len();
    if (0..n).all(|k| coeffs[k] == coeffs[n - 1 - k]) {
        Symmetry::Palindromic
    } else if (0..n).all(|k| coeffs[k] == -coeffs[n - 1 - k].clone()) {
        Symmetry::Antipalindromic
    } else {
        Symmetry::Neither
    }
}

pub(crate) fn trim_zeros<R: Zero>(v: &mut Vec<R>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// A polynomial `Σ coeffs[k] x^k`. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        trim_zeros(&mut coeffs);
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `βx − α`.
    pub fn linear(beta: R, alpha: R) -> Self {
        Self::new(vec![-alpha, beta])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> R {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Digital cipher Ç(P): the number of coefficients, deg(P) + 1.
    pub fn cipher(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("cipher"));
        }
        Ok(self.coeffs.len())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| R::from_i64(k as i64) * a.clone())
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn require_unit_constant_term(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reversing"));
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(())
    }

    /// Reversing: `b_{n-k} = a_k`, defined when x ∤ P(x).
    pub fn reverse(&self) -> Result<Self> {
        self.require_unit_constant_term()?;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Poly { coeffs })
    }

    /// Flips the coefficient sequence without checking the constant term.
    /// Leading zeros produced by the flip are dropped.
    pub fn raw_coefficient_flip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("coefficient flip"));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self::new(coeffs))
    }

    /// Pasting: `x^{Ç(Q)}·P + Q`.
    pub fn paste(&self, q: &Self) -> Result<Self> {
        if self.is_zero() || q.is_zero() {
            return Err(Error::ZeroPolynomial("pasting"));
        }
        let mut coeffs = q.coeffs.clone();
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(Poly { coeffs })
    }

    /// Left fold of [`Poly::paste`] over a nonempty sequence.
    pub fn paste_fold(ps: &[Self]) -> Result<Self> {
        let (first, rest) = ps.split_first().ok_or(Error::EmptySequence)?;
        if first.is_zero() {
            return Err(Error::ZeroPolynomial("pasting"));
        }
        rest.iter().try_fold(first.clone(), |acc, p| acc.paste(p))
    }

    pub fn classify(&self) -> Result<Symmetry> {
        self.require_unit_constant_term()?;
        Ok(symmetry_of(&self.coeffs))
    }

    /// Whether `(x − c)` divides P, decided by `P(c) = 0`.
    pub fn divides_at(&self, c: &R) -> bool {
        self.eval(c).is_zero()
    }

    pub fn render(&self, var: char) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.term_text(), power_text(var, k)))
            .collect();
        render_sum(terms, Joiner::Implicit)
    }
}

fn power_text(var: char, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let lead_inv = d
            .leading()
            .and_then(Field::inv)
            .ok_or(Error::DivisionByZero)?;
        let dn = d.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dn - 1].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dj.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(Field::inv) {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `P*`: conjugated coefficients in reversed order. Equals the Reversing
    /// for real coefficients.
    pub fn reciprocal_conj(&self) -> Result<Self> {
        self.require_unit_constant_term()?;
        Ok(Poly {
            coeffs: self.coeffs.iter().rev().map(Field::conj).collect(),
        })
    }
}

impl<R: Ring> Default for Poly<R> {
    fn default() -> Self {
        Poly { coeffs: Vec::new() }
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &'a Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &'a Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -self.clone()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }

    fn term_text(&self) -> TermText {
        let nonzero: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        match nonzero.as_slice() {
            [] => TermText {
                negative: false,
                body: "0".into(),
                kind: TermKind::Integer,
            },
            [(0, c)] => c.term_text(),
            [(k, c)] => {
                let tt = c.term_text();
                let var = power_text('x', *k).expect("positive power");
                let body = match tt.kind {
                    TermKind::Unit => var,
                    TermKind::Integer => format!("{}{var}", tt.body),
                    TermKind::Other => format!("{}*{var}", tt.body),
                    TermKind::Compound => format!("({})*{var}", tt.body),
                };
                TermText {
                    negative: tt.negative,
                    body,
                    kind: TermKind::Other,
                }
            }
            _ => TermText {
                negative: false,
                body: self.to_string(),
                kind: TermKind::Compound,
            },
        }
    }
}
