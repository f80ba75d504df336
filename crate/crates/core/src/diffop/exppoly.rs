use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{GaussianRational, Ring};
use crate::poly::Poly;
use crate::text::{render_sum, Joiner};

type CPoly = Poly<GaussianRational>;

/// A finite sum `Σ q_i(x)·e^{s_i(x)}` with pairwise distinct exponents.
///
/// Terms are kept sorted by exponent and zero terms are dropped, so two
/// values are equal exactly when they are equal as functions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExpPoly {
    terms: Vec<(CPoly, CPoly)>,
}

fn exponent_order(a: &CPoly, b: &CPoly) -> Ordering {
    a.coeffs()
        .len()
        .cmp(&b.coeffs().len())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

impl ExpPoly {
    pub fn new(terms: impl IntoIterator<Item = (CPoly, CPoly)>) -> Self {
        let mut merged: Vec<(CPoly, CPoly)> = Vec::new();
        for (q, s) in terms {
            match merged.iter_mut().find(|(_, t)| *t == s) {
                Some(slot) => slot.0 = &slot.0 + &q,
                None => merged.push((q, s)),
            }
        }
        merged.retain(|(q, _)| !q.is_zero());
        merged.sort_by(|a, b| exponent_order(&a.1, &b.1));
        ExpPoly { terms: merged }
    }

    pub fn term(q: CPoly, s: CPoly) -> Self {
        Self::new([(q, s)])
    }

    /// `e^{s(x)}`.
    pub fn exp(s: CPoly) -> Self {
        Self::term(CPoly::one(), s)
    }

    /// `x^j e^{λx}`.
    pub fn monomial_exp(j: usize, lambda: GaussianRational) -> Self {
        Self::term(
            CPoly::monomial(GaussianRational::one(), j),
            CPoly::monomial(lambda, 1),
        )
    }

    pub fn poly(q: CPoly) -> Self {
        Self::term(q, CPoly::zero())
    }

    pub fn terms(&self) -> &[(CPoly, CPoly)] {
        &self.terms
    }

    /// `(q e^s)' = (q' + q s') e^s`.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|(q, s)| (&q.derivative() + &(q * &s.derivative()), s.clone())),
        )
    }

    pub fn mul_poly(&self, c: &CPoly) -> Self {
        Self::new(self.terms.iter().map(|(q, s)| (q * c, s.clone())))
    }
}

impl Add for ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: ExpPoly) -> ExpPoly {
        ExpPoly::new(self.terms.into_iter().chain(rhs.terms))
    }
}

impl Sub for ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: ExpPoly) -> ExpPoly {
        self + (-rhs)
    }
}

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            terms: self.terms.into_iter().map(|(q, s)| (-q, s)).collect(),
        }
    }
}

impl Mul for ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: ExpPoly) -> ExpPoly {
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (q1, s1) in &self.terms {
            for (q2, s2) in &rhs.terms {
                out.push((q1 * q2, s1 + s2));
            }
        }
        ExpPoly::new(out)
    }
}

impl Zero for ExpPoly {
    fn zero() -> Self {
        ExpPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ExpPoly {
    fn one() -> Self {
        ExpPoly::poly(CPoly::one())
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(q, s)| {
                let var = (!s.is_zero()).then(|| format!("exp({s})"));
                (q.term_text(), var)
            })
            .collect();
        f.write_str(&render_sum(terms, Joiner::Star))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rational, Rational};

    fn c(n: i64) -> GaussianRational {
        GaussianRational::real(Rational::from_i64(n))
    }

    fn p(cs: &[i64]) -> CPoly {
        Poly::new(cs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn canonical_form_merges_and_drops() {
        let a = ExpPoly::new([
            (p(&[1]), p(&[0, 1])),
            (p(&[2]), p(&[])),
            (p(&[-1]), p(&[0, 1])),
        ]);
        assert_eq!(a, ExpPoly::poly(p(&[2])));
        let b = ExpPoly::new([(p(&[1]), p(&[0, 2])), (p(&[1]), p(&[0, 1]))]);
        let c = ExpPoly::new([(p(&[1]), p(&[0, 1])), (p(&[1]), p(&[0, 2]))]);
        assert_eq!(b, c);
    }

    #[test]
    fn derivative_of_gaussian() {
        let half = GaussianRational::real(rational(-1, 2));
        let f = ExpPoly::exp(Poly::monomial(half, 2));
        // (e^{-x^2/2})' = -x e^{-x^2/2}
        let expected = ExpPoly::term(p(&[0, -1]), f.terms()[0].1.clone());
        assert_eq!(f.derivative(), expected);
    }

    #[test]
    fn product_adds_exponents() {
        let a = ExpPoly::exp(p(&[0, 1]));
        let b = ExpPoly::exp(p(&[0, -1]));
        assert_eq!(a * b, ExpPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(ExpPoly::monomial_exp(1, c(2)).to_string(), "x*exp(2x)");
        assert_eq!((-ExpPoly::exp(p(&[0, -1]))).to_string(), "-exp(-x)");
        assert_eq!(ExpPoly::zero().to_string(), "0");
        let f = ExpPoly::term(p(&[1, 1]), p(&[0, 1])) + ExpPoly::poly(p(&[3]));
        assert_eq!(f.to_string(), "3+(x+1)*exp(x)");
    }
}
