//! Random generators. Rationals have numerator and denominator in
//! `[-9, 9]`; palindromic objects are mirrored from a random half.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::diffop::DiffOp;
use crate::field::{Field, GaussianRational, Rational, Ring};
use crate::poly::{FactoredLinear, Poly};

pub type Q = Rational;
pub type QI = GaussianRational;
pub type QX = Poly<Rational>;

pub fn rat(rng: &mut ChaCha8Rng) -> Q {
    let n = rng.gen_range(-9i64..=9);
    let mut d = rng.gen_range(-9i64..=8);
    if d >= 0 {
        d += 1;
    }
    Q::new(n.into(), d.into())
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let q = rat(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn gauss(rng: &mut ChaCha8Rng) -> QI {
    QI::new(rat(rng), rat(rng))
}

pub fn nonzero_gauss(rng: &mut ChaCha8Rng) -> QI {
    loop {
        let g = gauss(rng);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Degree uniform in `[0, max_deg]`, leading coefficient nonzero.
pub fn poly(rng: &mut ChaCha8Rng, max_deg: usize, nonzero_const: bool) -> QX {
    let deg = rng.gen_range(0..=max_deg);
    poly_of_degree(rng, deg, nonzero_const)
}

pub fn poly_of_degree(rng: &mut ChaCha8Rng, deg: usize, nonzero_const: bool) -> QX {
    let mut cs: Vec<Q> = (0..=deg).map(|_| rat(rng)).collect();
    cs[deg] = nonzero_rat(rng);
    if nonzero_const {
        cs[0] = nonzero_rat(rng);
    }
    Poly::new(cs)
}

pub fn gauss_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly<QI> {
    let deg = rng.gen_range(0..=max_deg);
    let mut cs: Vec<QI> = (0..=deg).map(|_| gauss(rng)).collect();
    cs[deg] = nonzero_gauss(rng);
    Poly::new(cs)
}

/// Coefficient vector of the given length, mirrored (`sign = 1`) or
/// anti-mirrored (`sign = -1`) around its centre; the ends are nonzero.
pub fn mirrored<T: Ring>(
    rng: &mut ChaCha8Rng,
    len: usize,
    sign: i64,
    mut draw: impl FnMut(&mut ChaCha8Rng, bool) -> T,
) -> Vec<T> {
    let s = T::from_i64(sign);
    let mut cs = vec![T::zero(); len];
    for k in 0..len.div_ceil(2) {
        let j = len - 1 - k;
        if k == j {
            if sign == 1 {
                cs[k] = draw(rng, k == 0);
            }
        } else {
            let c = draw(rng, k == 0);
            cs[j] = s.clone() * c.clone();
            cs[k] = c;
        }
    }
    cs
}

/// Palindromic (`sign = 1`) or antipalindromic (`sign = -1`) polynomial
/// of the given cipher (at least 2 when antipalindromic).
pub fn sym_poly(rng: &mut ChaCha8Rng, cipher: usize, sign: i64) -> QX {
    Poly::new(mirrored(rng, cipher, sign, |r, nz| {
        if nz {
            nonzero_rat(r)
        } else {
            rat(r)
        }
    }))
}

/// Polynomial coefficient for operators: degree ≤ `max_deg`, possibly zero
/// unless `nonzero`.
pub fn small_qx(rng: &mut ChaCha8Rng, max_deg: usize, nonzero: bool) -> QX {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let p = Poly::new((0..=deg).map(|_| rat(rng)).collect());
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

/// Operator of order in `[0, max_order]` over `Q[x]` with nonzero `a_0` and
/// nonzero leading coefficient.
pub fn op(rng: &mut ChaCha8Rng, max_order: usize, coeff_deg: usize) -> DiffOp<QX> {
    let order = rng.gen_range(0..=max_order);
    op_of_order(rng, order, coeff_deg)
}

pub fn op_of_order(rng: &mut ChaCha8Rng, order: usize, coeff_deg: usize) -> DiffOp<QX> {
    let mut cs: Vec<QX> = (0..=order)
        .map(|_| small_qx(rng, coeff_deg, false))
        .collect();
    cs[0] = small_qx(rng, coeff_deg, true);
    cs[order] = small_qx(rng, coeff_deg, true);
    DiffOp::new(cs)
}

/// Palindromic or antipalindromic operator over `Q[x]` of the given cipher.
pub fn sym_op(rng: &mut ChaCha8Rng, cipher: usize, sign: i64, coeff_deg: usize) -> DiffOp<QX> {
    DiffOp::new(mirrored(rng, cipher, sign, |r, nz| {
        small_qx(r, coeff_deg, nz)
    }))
}

/// Constant-coefficient operator over `Q(i)` with nonzero `a_0`.
pub fn const_op(rng: &mut ChaCha8Rng, max_order: usize) -> DiffOp<QI> {
    let order = rng.gen_range(0..=max_order);
    let mut cs: Vec<QI> = (0..=order).map(|_| gauss(rng)).collect();
    cs[0] = nonzero_gauss(rng);
    cs[order] = nonzero_gauss(rng);
    DiffOp::new(cs)
}

pub fn const_sym_op(rng: &mut ChaCha8Rng, cipher: usize, sign: i64) -> DiffOp<QI> {
    DiffOp::new(mirrored(rng, cipher, sign, |r, nz| {
        if nz {
            nonzero_gauss(r)
        } else {
            gauss(r)
        }
    }))
}

/// Factored palindromic (or antipalindromic when `anti`) instance of degree
/// at most `max_deg`: reciprocal pairs `(βx − α)(αx − β)` times
/// `(x + 1)^a (x − 1)^b`, with `b` odd exactly when `anti`.
pub fn sym_factored<F: Field>(
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    anti: bool,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> F,
) -> FactoredLinear<F> {
    let min_b = usize::from(anti);
    let pairs = rng.gen_range(0..=(max_deg - min_b) / 2);
    let rest = max_deg - 2 * pairs;
    let mut b = rng.gen_range(min_b..=rest);
    if b % 2 != min_b {
        b -= 1;
    }
    let a = rng.gen_range(0..=rest - b);
    let mut factors = Vec::with_capacity(2 * pairs + a + b);
    for _ in 0..pairs {
        let (beta, alpha) = (draw(rng), draw(rng));
        factors.push((beta.clone(), alpha.clone()));
        factors.push((alpha, beta));
    }
    factors.extend((0..a).map(|_| (F::one(), -F::one())));
    factors.extend((0..b).map(|_| (F::one(), F::one())));
    // Interleave so the forced roots are not always last.
    for i in (1..factors.len()).rev() {
        factors.swap(i, rng.gen_range(0..=i));
    }
    FactoredLinear::new(draw(rng), factors).expect("nonzero unit and factors")
}
