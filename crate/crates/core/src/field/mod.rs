//! Exact coefficient domains.
//!
//! Three fields are provided: the rationals (`Rational`), the Gaussian
//! rationals ℚ(i) (`GaussianRational`) and rational functions over ℚ
//! (`RationalFunc`). Every value is kept in a canonical form, so `==` is
//! exact mathematical equality.

mod gaussian;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gaussian::GaussianRational;
pub use ratfunc::RationalFunc;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// How a coefficient renders in front of a variable or `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermText {
    pub negative: bool,
    pub body: String,
    pub kind: TermKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermKind {
    /// Magnitude one; elided in front of a variable.
    Unit,
    /// Integer magnitude; may be juxtaposed with a variable (`2x`).
    Integer,
    /// Anything else; joined to a variable with `*`.
    Other,
    /// A sum; parenthesized in front of a variable, bare when it stands alone.
    Compound,
}

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_i64(n: i64) -> Self;

    fn term_text(&self) -> TermText;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn from_rational(q: &Rational) -> Self;

    /// Complex conjugation; the identity on real fields.
    fn conj(&self) -> Self {
        self.clone()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        rhs.inv()
            .map(|r| self.clone() * r)
            .ok_or(Error::DivisionByZero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith<F: Field>(a: &F, b: &F, op: ArithOp) -> Result<F> {
    Ok(match op {
        ArithOp::Add => a.clone() + b.clone(),
        ArithOp::Sub => a.clone() - b.clone(),
        ArithOp::Mul => a.clone() * b.clone(),
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn conj(z: &GaussianRational) -> GaussianRational {
    z.conj()
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rational_term_text(q: &Rational) -> TermText {
    let mag = q.abs();
    let kind = if mag.is_one() {
        TermKind::Unit
    } else if mag.is_integer() {
        TermKind::Integer
    } else {
        TermKind::Other
    };
    TermText {
        negative: q.is_negative(),
        body: mag.to_string(),
        kind,
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn term_text(&self) -> TermText {
        rational_term_text(self)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}
