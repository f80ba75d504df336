use serde::Serialize;

use super::{Poly, Symmetry};
use crate::error::{Error, Result};
use crate::field::Field;

/// `unit · Π (β_i x − α_i)`, with each factor stored as the pair `(β_i, α_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredLinear<F> {
    unit: F,
    factors: Vec<(F, F)>,
}

/// Reciprocal pairing of the roots of a palindromic or antipalindromic
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootPairing<F> {
    pub symmetry: Symmetry,
    /// Pairs `(ρ, 1/ρ)`, listed in order of first appearance of `ρ`.
    pub pairs: Vec<(F, F)>,
    /// Roots forced by the symmetry class that pair with nothing.
    pub unpaired: Vec<F>,
}

impl<F: Field> FactoredLinear<F> {
    pub fn new(unit: F, factors: Vec<(F, F)>) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::domain("factored form needs a nonzero unit"));
        }
        if factors.iter().any(|(b, a)| b.is_zero() && a.is_zero()) {
            return Err(Error::domain("linear factor 0·x − 0 is not allowed"));
        }
        Ok(FactoredLinear { unit, factors })
    }

    pub fn unit(&self) -> &F {
        &self.unit
    }

    pub fn factors(&self) -> &[(F, F)] {
        &self.factors
    }

    pub fn expand(&self) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (b, a)| {
                &acc * &Poly::linear(b.clone(), a.clone())
            })
    }

    /// Factored form of the Reversing: `(β x − α)` becomes `(α x − β)` and
    /// the unit picks up `(−1)^n`, `n` the degree. Constant factors
    /// (`β = 0`) are left alone.
    pub fn reverse_factored(&self) -> Result<Self> {
        if self.factors.iter().any(|(_, a)| a.is_zero()) {
            return Err(Error::ZeroConstantTerm);
        }
        let mut unit = self.unit.clone();
        let factors = self
            .factors
            .iter()
            .map(|(b, a)| {
                if b.is_zero() {
                    (b.clone(), a.clone())
                } else {
                    unit = -unit.clone();
                    (a.clone(), b.clone())
                }
            })
            .collect();
        Ok(FactoredLinear { unit, factors })
    }

    /// Roots `α_i / β_i` in factor order; requires every `β_i ≠ 0`.
    pub fn roots(&self) -> Result<Vec<F>> {
        self.factors
            .iter()
            .map(|(b, a)| {
                b.inv()
                    .map(|bi| a.clone() * bi)
                    .ok_or_else(|| Error::domain("root pairing needs every β_i ≠ 0"))
            })
            .collect()
    }

    /// Matches the roots into reciprocal pairs `{ρ, 1/ρ}`.
    ///
    /// With an even cipher one root is left over: `−1` for palindromic and
    /// `+1` for antipalindromic input. An antipalindromic polynomial of odd
    /// cipher always has both `+1` and `−1` as roots, and both stay unpaired.
    pub fn root_pairing(&self) -> Result<RootPairing<F>> {
        let roots = self.roots()?;
        let p = self.expand();
        let symmetry = p.classify()?;
        let one = F::one();
        let even_cipher = p.cipher()? % 2 == 0;
        let forced = match (symmetry, even_cipher) {
            (Symmetry::Neither, _) => {
                return Err(Error::domain(
                    "root pairing needs a palindromic or antipalindromic polynomial",
                ))
            }
            (Symmetry::Palindromic, true) => vec![-one],
            (Symmetry::Palindromic, false) => vec![],
            (Symmetry::Antipalindromic, true) => vec![one],
            (Symmetry::Antipalindromic, false) => vec![one.clone(), -one],
        };
        let mut rest = roots;
        for m in &forced {
            let pos = rest
                .iter()
                .position(|r| r == m)
                .ok_or_else(|| Error::Verification(format!("{p}: expected root {m} is missing")))?;
            rest.remove(pos);
        }
        let pairs = reciprocal_matching(&rest).ok_or_else(|| {
            Error::Verification(format!("{p}: roots admit no reciprocal matching"))
        })?;
        Ok(RootPairing {
            symmetry,
            pairs,
            unpaired: forced,
        })
    }
}

/// Perfect matching of `roots` into pairs `(ρ, σ)` with `ρσ = 1`, scanning in
/// sequence order and taking the first available partner. Returns `None`
/// when no such matching exists.
pub(crate) fn reciprocal_matching<F: Field>(roots: &[F]) -> Option<Vec<(F, F)>> {
    let mut used = vec![false; roots.len()];
    let mut pairs = Vec::with_capacity(roots.len() / 2);
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = roots[i].inv()?;
        let j = (i + 1..roots.len()).find(|&j| !used[j] && roots[j] == target)?;
        used[j] = true;
        pairs.push((roots[i].clone(), roots[j].clone()));
    }
    Some(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rational, Rational, Ring};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| q(c)).collect())
    }

    fn f(unit: i64, fs: &[(i64, i64)]) -> FactoredLinear<Rational> {
        FactoredLinear::new(q(unit), fs.iter().map(|&(b, a)| (q(b), q(a))).collect()).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(f(1, &[(1, 2), (2, 1)]).expand(), p(&[2, -5, 2]));
        assert_eq!(f(1, &[]).expand(), p(&[1]));
        assert_eq!(f(-3, &[(1, 0)]).expand(), p(&[0, -3]));
    }

    #[test]
    fn reverse_factored_examples() {
        let a = f(1, &[(1, 2), (2, 1)]);
        let ra = a.reverse_factored().unwrap();
        assert_eq!(ra, f(1, &[(2, 1), (1, 2)]));
        assert_eq!(ra.expand(), p(&[2, -5, 2]));

        let b = f(1, &[(1, -1)]);
        let rb = b.reverse_factored().unwrap();
        assert_eq!(rb, f(-1, &[(-1, 1)]));
        assert_eq!(rb.expand(), p(&[1, 1]));

        let c = f(1, &[(2, 3)]);
        // (-1)^1 (3x - 2)
        assert_eq!(c.reverse_factored().unwrap().expand(), p(&[2, -3]));
        assert_eq!(
            c.reverse_factored().unwrap().expand(),
            c.expand().reverse().unwrap()
        );

        assert_eq!(
            f(1, &[(1, 0)]).reverse_factored(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn reverse_factored_keeps_constant_factors() {
        let a = f(2, &[(0, 3), (1, 5)]);
        assert_eq!(
            a.reverse_factored().unwrap().expand(),
            a.expand().reverse().unwrap()
        );
    }

    #[test]
    fn pairing_examples() {
        let a = f(1, &[(1, 2), (2, 1)]).root_pairing().unwrap();
        assert_eq!(a.pairs, vec![(q(2), rational(1, 2))]);
        assert!(a.unpaired.is_empty());

        let b = f(1, &[(1, -1)]).root_pairing().unwrap();
        assert_eq!(b.symmetry, Symmetry::Palindromic);
        assert_eq!(b.unpaired, vec![q(-1)]);

        let c = f(1, &[(1, 1)]).root_pairing().unwrap();
        assert_eq!(c.symmetry, Symmetry::Antipalindromic);
        assert_eq!(c.unpaired, vec![q(1)]);
    }

    #[test]
    fn pairing_with_repeated_self_reciprocal_roots() {
        // (x + 1)^2 (x - 1)^2 is palindromic with odd cipher.
        let a = f(1, &[(1, -1), (1, 1), (1, -1), (1, 1)])
            .root_pairing()
            .unwrap();
        assert_eq!(a.pairs, vec![(q(-1), q(-1)), (q(1), q(1))]);
        assert!(a.unpaired.is_empty());
    }

    #[test]
    fn antipalindromic_odd_cipher_leaves_both_units() {
        let a = f(1, &[(1, 1), (1, -1)]).root_pairing().unwrap();
        assert_eq!(a.symmetry, Symmetry::Antipalindromic);
        assert_eq!(a.unpaired, vec![q(1), q(-1)]);
        assert!(a.pairs.is_empty());
        assert!(reciprocal_matching(&[q(1), q(-1)]).is_none());
    }

    #[test]
    fn pairing_rejects_bad_input() {
        assert!(f(1, &[(0, 1), (1, 1)]).root_pairing().is_err());
        assert!(matches!(
            f(1, &[(1, 2), (1, 3)]).root_pairing(),
            Err(Error::Domain(_))
        ));
    }
}
