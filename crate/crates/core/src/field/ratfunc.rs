use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Rational, Ring, TermKind, TermText};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A quotient of polynomials over ℚ, reduced and with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RationalFunc {
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero denominator").clone();
        let scale = lead.inv().expect("nonzero leading coefficient");
        Ok(RationalFunc {
            num: num.scale(&scale),
            den: den.scale(&scale),
        })
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RationalFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rational> {
        &self.den
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    fn build(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        Self::new(num, den).expect("denominator product is nonzero")
    }
}

impl Add for RationalFunc {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        Self::build(num, &self.den * &rhs.den)
    }
}

impl Sub for RationalFunc {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunc {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::build(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RationalFunc {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Zero for RationalFunc {
    fn zero() -> Self {
        RationalFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunc {
    fn one() -> Self {
        RationalFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RationalFunc {
    fn from_i64(n: i64) -> Self {
        Self::from_poly(Poly::constant(Rational::from_i64(n)))
    }

    fn term_text(&self) -> TermText {
        if self.den.is_one() {
            return self.num.term_text();
        }
        TermText {
            negative: false,
            body: self.to_string(),
            kind: TermKind::Compound,
        }
    }
}

impl Field for RationalFunc {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::build(self.den.clone(), self.num.clone()))
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
}
