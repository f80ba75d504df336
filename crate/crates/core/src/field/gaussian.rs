use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rational_term_text, Field, Rational, Ring, TermKind, TermText};

/// An element `re + im·i` of ℚ(i).
///
/// The derived ordering is lexicographic on `(re, im)`. It is only used to
/// sort terms canonically and has nothing to do with the field structure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::real(re)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
}

fn imaginary_text(im: &Rational) -> String {
    let mag = im.abs();
    if mag.is_one() {
        "i".to_string()
    } else {
        format!("{mag}i")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", imaginary_text(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{sign}{}", self.re, imaginary_text(&self.im))
            }
        }
    }
}

impl Ring for GaussianRational {
    fn from_i64(n: i64) -> Self {
        GaussianRational::real(Rational::from_i64(n))
    }

    fn term_text(&self) -> TermText {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => rational_term_text(&self.re),
            (true, false) => TermText {
                negative: self.im.is_negative(),
                body: imaginary_text(&self.im),
                kind: TermKind::Other,
            },
            (false, false) => TermText {
                negative: false,
                body: self.to_string(),
                kind: TermKind::Compound,
            },
        }
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn from_rational(q: &Rational) -> Self {
        GaussianRational::real(q.clone())
    }

    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_arith, rational, ArithOp};

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(rational(a, 1), rational(b, 1))
    }

    #[test]
    fn conjugate_product_is_real() {
        let p = field_arith(&g(1, 1), &g(1, -1), ArithOp::Mul).unwrap();
        assert_eq!(p, g(2, 0));
        assert_eq!(p.to_string(), "2");
    }

    #[test]
    fn conj_examples() {
        assert_eq!(g(3, 2).conj(), g(3, -2));
        assert_eq!(g(5, 0).conj(), g(5, 0));
        assert_eq!(g(1, -7).conj().conj(), g(1, -7));
    }

    #[test]
    fn inverse() {
        let z = g(3, 4);
        assert_eq!(z.clone() * z.inv().unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(3, 2).to_string(), "3+2i");
        assert_eq!(g(3, -1).to_string(), "3-i");
        assert_eq!(g(0, -2).to_string(), "-2i");
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(
            GaussianRational::new(rational(1, 2), rational(-3, 4)).to_string(),
            "1/2-3/4i"
        );
    }
}
