//! Linear differential operators `Σ a_k ∂^k` over a differential ring.
//!
//! Composition follows `∂∘a = a∂ + ∂(a)`, so operators with non-constant
//! coefficients do not commute. Kernel membership is decided by applying an
//! operator to an [`ExpPoly`] and checking for the zero function.

mod exppoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational, RationalFunc, Ring};
use crate::poly::{symmetry_of, trim_zeros, FactoredLinear, Poly, Symmetry};
use crate::text::{render_sum, Joiner};

pub use exppoly::ExpPoly;

/// A coefficient field that embeds into ℚ(i).
pub trait Embed: Field {
    fn to_gaussian(&self) -> GaussianRational;
    fn to_rational(&self) -> Option<Rational>;
}

impl Embed for Rational {
    fn to_gaussian(&self) -> GaussianRational {
        GaussianRational::real(self.clone())
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Embed for GaussianRational {
    fn to_gaussian(&self) -> GaussianRational {
        self.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }
}

/// A ring with an additive derivation obeying the Leibniz rule.
pub trait DiffRing: Ring {
    const NAME: &'static str;

    fn derive(&self) -> Self;

    /// The element as a polynomial over ℚ(i), for applying operators to
    /// exp-polynomials.
    fn to_exp_coeff(&self) -> Poly<GaussianRational>;

    fn to_rational_func(&self) -> Option<RationalFunc>;
}

/// Constants: the derivation is identically zero.
impl DiffRing for GaussianRational {
    const NAME: &'static str = "constants";

    fn derive(&self) -> Self {
        GaussianRational::zero()
    }

    fn to_exp_coeff(&self) -> Poly<GaussianRational> {
        Poly::constant(self.clone())
    }

    fn to_rational_func(&self) -> Option<RationalFunc> {
        self.to_rational().map(|q| RationalFunc::from_rational(&q))
    }
}

/// Polynomials with `d/dx`.
impl<F: Embed> DiffRing for Poly<F> {
    const NAME: &'static str = "polynomials";

    fn derive(&self) -> Self {
        self.derivative()
    }

    fn to_exp_coeff(&self) -> Poly<GaussianRational> {
        self.map(Embed::to_gaussian)
    }

    fn to_rational_func(&self) -> Option<RationalFunc> {
        let coeffs: Option<Vec<Rational>> = self.coeffs().iter().map(Embed::to_rational).collect();
        coeffs.map(|cs| RationalFunc::from_poly(Poly::new(cs)))
    }
}

/// `Σ coeffs[k] ∂^k`. The zero operator has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp<R> {
    coeffs: Vec<R>,
}

/// Logarithmic derivatives of kernel elements of an order-one operator and
/// of its Reversing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogDerivative {
    /// `∂ ln y = −a_0/a_1` for `y ∈ ker L`.
    pub u1: RationalFunc,
    /// `∂ ln u = −a_1/a_0` for `u ∈ ker L̃`.
    pub u2: RationalFunc,
    pub product: RationalFunc,
}

impl<R: DiffRing> DiffOp<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        trim_zeros(&mut coeffs);
        DiffOp { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The generator `∂`.
    pub fn d() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `∂ + c`.
    pub fn monic_linear(c: R) -> Self {
        Self::new(vec![c, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn cipher(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("cipher"));
        }
        Ok(self.coeffs.len())
    }

    pub fn map<S: DiffRing>(&self, f: impl Fn(&R) -> S) -> DiffOp<S> {
        DiffOp::new(self.coeffs.iter().map(f).collect())
    }

    /// `L ∘ ∂^m`: shifts coefficients up without differentiating anything.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        DiffOp { coeffs }
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() - 1;
        // derivs[j][t] = t-th derivative of rhs.coeffs[j]
        let derivs: Vec<Vec<R>> = rhs
            .coeffs
            .iter()
            .map(|b| {
                std::iter::successors(Some(b.clone()), |x| Some(x.derive()))
                    .take(n + 1)
                    .collect()
            })
            .collect();
        let mut out = vec![R::zero(); n + rhs.coeffs.len()];
        let mut binom = vec![1i64];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                let mut next = vec![1i64; i + 1];
                for t in 1..i {
                    next[t] = binom[t - 1] + binom[t];
                }
                binom = next;
            }
            if a.is_zero() {
                continue;
            }
            for (j, db) in derivs.iter().enumerate() {
                for t in 0..=i {
                    if db[t].is_zero() {
                        continue;
                    }
                    let term = R::from_i64(binom[t]) * a.clone() * db[t].clone();
                    out[i - t + j] = out[i - t + j].clone() + term;
                }
            }
        }
        Self::new(out)
    }

    fn require_unit_constant_term(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reversing"));
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::domain(
                "coefficient a_0 is zero: reversing requires a_0 ≠ 0",
            ));
        }
        Ok(())
    }

    /// Reversing: `b_{n-k} = a_k`, defined when `a_0 ≠ 0`.
    pub fn reverse(&self) -> Result<Self> {
        self.require_unit_constant_term()?;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(DiffOp { coeffs })
    }

    /// Pasting: `L ∘ ∂^{Ç(R)} + R`.
    pub fn paste(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Err(Error::ZeroPolynomial("pasting"));
        }
        let mut coeffs = rhs.coeffs.clone();
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(DiffOp { coeffs })
    }

    pub fn classify(&self) -> Result<Symmetry> {
        self.require_unit_constant_term()?;
        Ok(symmetry_of(&self.coeffs))
    }

    /// `Σ a_k f^{(k)}`.
    pub fn apply(&self, f: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        let mut deriv = f.clone();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                deriv = deriv.derivative();
            }
            if !a.is_zero() {
                out = out + deriv.mul_poly(&a.to_exp_coeff());
            }
        }
        out
    }

    /// Ore division on the right by the monic divisor `∂ + c`:
    /// returns `(S, r)` with `L = S∘(∂ + c) + r`.
    ///
    /// For constant `c`, `r = 0` exactly when `e^{−cx} ∈ ker L`, and
    /// `L e^{−cx} = r e^{−cx}`.
    pub fn right_divide_monic_linear(&self, c: &R) -> Result<(Self, R)> {
        let order = self.order().unwrap_or(0);
        if order == 0 {
            return Err(Error::domain("right division by ∂ + c needs order ≥ 1"));
        }
        let divisor = Self::monic_linear(c.clone());
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); order];
        while let Some(d) = rem.order().filter(|&d| d >= 1) {
            let lead = rem.coeffs[d].clone();
            let term = Self::new(
                vec![R::zero(); d - 1]
                    .into_iter()
                    .chain([lead.clone()])
                    .collect(),
            );
            quot[d - 1] = quot[d - 1].clone() + lead;
            rem = &rem - &term.compose(&divisor);
        }
        Ok((Self::new(quot), rem.coeff(0)))
    }

    /// `(∂ ln y, ∂ ln u, product)` for an operator of cipher 2.
    pub fn log_derivative_product(&self) -> Result<LogDerivative> {
        if self.coeffs.len() != 2 {
            return Err(Error::domain("log-derivative product needs Ç(L) = 2"));
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::domain("log-derivative product needs a_0 ≠ 0"));
        }
        let embed = |a: &R| {
            a.to_rational_func().ok_or_else(|| {
                Error::domain("coefficients must be real to form rational functions")
            })
        };
        let a0 = embed(&self.coeffs[0])?;
        let a1 = embed(&self.coeffs[1])?;
        let u1 = -a0.checked_div(&a1)?;
        let u2 = -a1.checked_div(&a0)?;
        let product = u1.clone() * u2.clone();
        Ok(LogDerivative { u1, u2, product })
    }

    pub fn render(&self) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let var = match k {
                    0 => None,
                    1 => Some("D".to_string()),
                    _ => Some(format!("D^{k}")),
                };
                (c.term_text(), var)
            })
            .collect();
        render_sum(terms, Joiner::Star)
    }
}

/// Constant-coefficient operators, which commute and mirror polynomials.
impl DiffOp<GaussianRational> {
    /// Transfers the coefficients to `Σ a_k λ^k`.
    pub fn char_poly(&self) -> Poly<GaussianRational> {
        Poly::new(self.coeffs.clone())
    }

    pub fn from_char_poly(p: &Poly<GaussianRational>) -> Self {
        Self::new(p.coeffs().to_vec())
    }

    /// `unit · Π (β_i ∂ − α_i)`.
    pub fn from_factored(f: &FactoredLinear<GaussianRational>) -> Self {
        Self::from_char_poly(&f.expand())
    }

    /// Embeds into the polynomial-coefficient ring.
    pub fn to_polynomial_ring<F: Embed>(
        &self,
        narrow: impl Fn(&GaussianRational) -> Option<F>,
    ) -> Result<DiffOp<Poly<F>>> {
        let coeffs: Option<Vec<Poly<F>>> = self
            .coeffs
            .iter()
            .map(|c| narrow(c).map(Poly::constant))
            .collect();
        coeffs.map(DiffOp::new).ok_or_else(|| {
            Error::RingMismatch("coefficient does not embed into the polynomial ring".into())
        })
    }
}

impl<F: Embed> DiffOp<Poly<F>> {
    /// The same operator over the constants ring, when every coefficient is
    /// constant.
    pub fn to_constants(&self) -> Result<DiffOp<GaussianRational>> {
        if self.coeffs.iter().any(|c| !c.is_constant()) {
            return Err(Error::RingMismatch(
                "operator has non-constant coefficients".into(),
            ));
        }
        Ok(DiffOp::new(
            self.coeffs
                .iter()
                .map(|c| c.constant_term().to_gaussian())
                .collect(),
        ))
    }
}

/// Kernel exponents `λ_i = α_i / β_i` of `Π (β_i ∂ − α_i)`, with
/// multiplicities, in order of first appearance.
///
/// For an exponent of multiplicity `m`, `x^j e^{λx}` lies in the kernel for
/// every `j < m`.
pub fn kernel_exponents(
    f: &FactoredLinear<GaussianRational>,
) -> Result<Vec<(GaussianRational, usize)>> {
    let roots = f
        .roots()
        .map_err(|_| Error::domain("kernel exponents need every β_i ≠ 0"))?;
    let mut out: Vec<(GaussianRational, usize)> = Vec::new();
    for r in roots {
        match out.iter_mut().find(|(l, _)| *l == r) {
            Some(slot) => slot.1 += 1,
            None => out.push((r, 1)),
        }
    }
    Ok(out)
}

impl<R: DiffRing> Default for DiffOp<R> {
    fn default() -> Self {
        DiffOp { coeffs: Vec::new() }
    }
}

impl<R: DiffRing> fmt::Display for DiffOp<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a, R: DiffRing> Add<&'a DiffOp<R>> for &'a DiffOp<R> {
    type Output = DiffOp<R>;
    fn add(self, rhs: &'a DiffOp<R>) -> DiffOp<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, R: DiffRing> Sub<&'a DiffOp<R>> for &'a DiffOp<R> {
    type Output = DiffOp<R>;
    fn sub(self, rhs: &'a DiffOp<R>) -> DiffOp<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, R: DiffRing> Mul<&'a DiffOp<R>> for &'a DiffOp<R> {
    type Output = DiffOp<R>;
    fn mul(self, rhs: &'a DiffOp<R>) -> DiffOp<R> {
        self.compose(rhs)
    }
}

impl<R: DiffRing> Add for DiffOp<R> {
    type Output = DiffOp<R>;
    fn add(self, rhs: DiffOp<R>) -> DiffOp<R> {
        &self + &rhs
    }
}

impl<R: DiffRing> Sub for DiffOp<R> {
    type Output = DiffOp<R>;
    fn sub(self, rhs: DiffOp<R>) -> DiffOp<R> {
        &self - &rhs
    }
}

impl<R: DiffRing> Mul for DiffOp<R> {
    type Output = DiffOp<R>;
    fn mul(self, rhs: DiffOp<R>) -> DiffOp<R> {
        self.compose(&rhs)
    }
}

impl<R: DiffRing> Neg for DiffOp<R> {
    type Output = DiffOp<R>;
    fn neg(self) -> DiffOp<R> {
        DiffOp {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: DiffRing> Zero for DiffOp<R> {
    fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: DiffRing> One for DiffOp<R> {
    fn one() -> Self {
        DiffOp::constant(R::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    type QX = Poly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qx(cs: &[i64]) -> QX {
        Poly::new(cs.iter().map(|&c| q(c)).collect())
    }

    /// Operator over ℚ[x]; each inner slice is a coefficient polynomial.
    fn op(cs: &[&[i64]]) -> DiffOp<QX> {
        DiffOp::new(cs.iter().map(|c| qx(c)).collect())
    }

    fn c(n: i64) -> GaussianRational {
        GaussianRational::real(q(n))
    }

    fn cop(cs: &[i64]) -> DiffOp<GaussianRational> {
        DiffOp::new(cs.iter().map(|&n| c(n)).collect())
    }

    fn cp(cs: &[i64]) -> Poly<GaussianRational> {
        Poly::new(cs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&op(&[&[1], &[1]]) + &op(&[&[-1], &[1]]), op(&[&[], &[2]]));
        assert_eq!(
            &op(&[&[1], &[], &[0, 1]]) + &op(&[&[0, 1], &[], &[1]]),
            op(&[&[1, 1], &[], &[1, 1]])
        );
        let l = op(&[&[3, 1], &[2], &[0, 1]]);
        assert!((&l + &(-l.clone())).is_zero());
    }

    #[test]
    fn compose_examples() {
        let d = DiffOp::<QX>::d();
        let x = DiffOp::constant(qx(&[0, 1]));
        assert_eq!(d.compose(&x), op(&[&[1], &[0, 1]]));
        // (∂ + x)(∂ + 1) = ∂² + (1 + x)∂ + x
        assert_eq!(
            op(&[&[0, 1], &[1]]).compose(&op(&[&[1], &[1]])),
            op(&[&[0, 1], &[1, 1], &[1]])
        );
        let a = cop(&[-2, 1]);
        let b = cop(&[-3, 1]);
        assert_eq!(a.compose(&b), cop(&[6, -5, 1]));
        assert_eq!(b.compose(&a), cop(&[6, -5, 1]));
    }

    #[test]
    fn weyl_commutator() {
        let d = DiffOp::<QX>::d();
        let x = DiffOp::constant(qx(&[0, 1]));
        assert_eq!(&d.compose(&x) - &x.compose(&d), DiffOp::one());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(op(&[&[3], &[2]]).reverse().unwrap(), op(&[&[2], &[3]]));
        let weber = op(&[&[1, 0, -1], &[], &[1]]);
        assert_eq!(weber.reverse().unwrap(), op(&[&[1], &[], &[1, 0, -1]]));
        let l = op(&[&[0, 1], &[2], &[2], &[0, 1]]);
        assert_eq!(l.reverse().unwrap().reverse().unwrap(), l);
        assert!(op(&[&[], &[1]]).reverse().is_err());
    }

    #[test]
    fn paste_examples() {
        let l = op(&[&[2], &[1]]);
        let r = op(&[&[1], &[2]]);
        let expected = &l.compose(&DiffOp::d().compose(&DiffOp::d())) + &r;
        assert_eq!(l.paste(&r).unwrap(), expected);
        assert_eq!(expected, op(&[&[1], &[2], &[2], &[1]]));
        assert_eq!(op(&[&[1]]).paste(&op(&[&[1]])).unwrap(), op(&[&[1], &[1]]));
    }

    #[test]
    fn paste_associativity_instance() {
        let (l, r, s) = (DiffOp::<QX>::d(), op(&[&[0, 1]]), op(&[&[1]]));
        // L∘∂^{Ç(R)+Ç(S)} + R∘∂^{Ç(S)} + S, built by composition
        let d = DiffOp::<QX>::d();
        let oracle = &(&l.compose(&d).compose(&d) + &r.compose(&d)) + &s;
        assert_eq!(l.paste(&r).unwrap().paste(&s).unwrap(), oracle);
        assert_eq!(l.paste(&r.paste(&s).unwrap()).unwrap(), oracle);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(op(&[&[1], &[1]]).classify(), Ok(Symmetry::Palindromic));
        assert_eq!(op(&[&[-1], &[1]]).classify(), Ok(Symmetry::Antipalindromic));
        assert_eq!(
            op(&[&[0, 1], &[2], &[2], &[0, 1]]).classify(),
            Ok(Symmetry::Palindromic)
        );
    }

    #[test]
    fn apply_examples() {
        let weber = op(&[&[1, 0, -1], &[], &[1]]);
        let gauss = ExpPoly::exp(Poly::monomial(GaussianRational::real(rational(-1, 2)), 2));
        assert!(weber.apply(&gauss).is_zero());

        let l = op(&[&[1], &[1]]);
        assert!(l.apply(&ExpPoly::exp(cp(&[0, -1]))).is_zero());

        let m = cop(&[-2, 1]);
        assert_eq!(
            m.apply(&ExpPoly::monomial_exp(1, c(2))),
            ExpPoly::exp(cp(&[0, 2]))
        );
    }

    #[test]
    fn right_division_examples() {
        let l = op(&[&[0, 1], &[1, 1], &[1]]);
        let (s, r) = l.right_divide_monic_linear(&qx(&[1])).unwrap();
        assert_eq!(s, op(&[&[0, 1], &[1]]));
        assert!(r.is_zero());

        let l = op(&[&[0, 1], &[2], &[2], &[0, 1]]);
        let (s, r) = l.right_divide_monic_linear(&qx(&[1])).unwrap();
        assert_eq!(s, op(&[&[0, 1], &[2, -1], &[0, 1]]));
        assert!(r.is_zero());

        let l = op(&[&[-1], &[1]]);
        let (s, r) = l.right_divide_monic_linear(&qx(&[1])).unwrap();
        assert_eq!(s, DiffOp::one());
        assert_eq!(r, qx(&[-2]));
        assert_eq!(
            l.apply(&ExpPoly::exp(cp(&[0, -1]))),
            ExpPoly::term(cp(&[-2]), cp(&[0, -1]))
        );

        assert!(op(&[&[3]]).right_divide_monic_linear(&qx(&[1])).is_err());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(cop(&[6, -5, 1]).char_poly(), cp(&[6, -5, 1]));
        assert_eq!(cop(&[3, 2]).reverse().unwrap().char_poly(), cp(&[2, 3]));
        let prod = cop(&[-2, 1]).compose(&cop(&[-3, 1]));
        assert_eq!(prod.char_poly(), &cp(&[-2, 1]) * &cp(&[-3, 1]));
        assert!(op(&[&[0, 1], &[1]]).to_constants().is_err());
        assert_eq!(
            op(&[&[6], &[-5], &[1]]).to_constants().unwrap(),
            cop(&[6, -5, 1])
        );
    }

    #[test]
    fn kernel_exponent_examples() {
        let f = FactoredLinear::new(c(1), vec![(c(1), c(2))]).unwrap();
        assert_eq!(kernel_exponents(&f).unwrap(), vec![(c(2), 1)]);
        let rev = DiffOp::from_factored(&f).reverse().unwrap();
        assert_eq!(rev, cop(&[-2, 1]).reverse().unwrap());
        let half = GaussianRational::real(rational(1, 2));
        assert!(rev.apply(&ExpPoly::monomial_exp(0, half)).is_zero());

        let sq = FactoredLinear::new(c(1), vec![(c(1), c(-1)), (c(1), c(-1))]).unwrap();
        assert_eq!(kernel_exponents(&sq).unwrap(), vec![(c(-1), 2)]);
        assert!(DiffOp::from_factored(&sq)
            .apply(&ExpPoly::monomial_exp(1, c(-1)))
            .is_zero());

        let half = GaussianRational::real(rational(1, 2));
        let pal = FactoredLinear::new(half.clone(), vec![(c(1), c(-2)), (c(2), c(-1))]).unwrap();
        let l = DiffOp::from_factored(&pal);
        assert_eq!(
            l,
            DiffOp::new(vec![c(1), GaussianRational::real(rational(5, 2)), c(1)])
        );
        assert_eq!(l.classify(), Ok(Symmetry::Palindromic));
        let ks = kernel_exponents(&pal).unwrap();
        assert_eq!(
            ks,
            vec![(c(-2), 1), (GaussianRational::real(rational(-1, 2)), 1)]
        );

        let bad = FactoredLinear::new(c(1), vec![(c(0), c(1))]).unwrap();
        assert!(kernel_exponents(&bad).is_err());
    }

    #[test]
    fn log_derivative_examples() {
        let l = op(&[&[1, 0, 1], &[0, 1]]);
        let ld = l.log_derivative_product().unwrap();
        assert_eq!(
            ld.u1,
            -RationalFunc::new(qx(&[1, 0, 1]), qx(&[0, 1])).unwrap()
        );
        assert_eq!(
            ld.u2,
            -RationalFunc::new(qx(&[0, 1]), qx(&[1, 0, 1])).unwrap()
        );
        assert_eq!(ld.product, RationalFunc::one());

        let k = cop(&[3, 2]).log_derivative_product().unwrap();
        assert_eq!(k.u1, RationalFunc::from_rational(&rational(-3, 2)));
        assert_eq!(k.u2, RationalFunc::from_rational(&rational(-2, 3)));
        assert_eq!(k.product, RationalFunc::one());

        let u = cop(&[1, 1]).log_derivative_product().unwrap();
        assert_eq!(u.u1, RationalFunc::from_rational(&q(-1)));

        assert!(cop(&[1, 1, 1]).log_derivative_product().is_err());
        assert!(cop(&[0, 1]).log_derivative_product().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            op(&[&[0, 1], &[2], &[2], &[0, 1]]).to_string(),
            "x*D^3+2*D^2+2*D+x"
        );
        assert_eq!(op(&[&[1], &[], &[1, 0, -1]]).to_string(), "(-x^2+1)*D^2+1");
        assert_eq!(op(&[&[1, 0, -1], &[], &[1]]).to_string(), "D^2-x^2+1");
        assert_eq!(cop(&[1, -1]).to_string(), "-D+1");
    }
}
