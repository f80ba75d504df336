//! Field, polynomial and Chebyshev properties.

use num_traits::{One, Zero};
use rand::Rng;

use super::gen::{self, Q, QI, QX};
use super::{ensure, Cx, Kind, Mode, PropertySpec, STANDARD_CASES};
use crate::cheb::{cheb_t, cheb_to_palindromic, joukowski, palindromic_to_cheb, printed_reduction};
use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::poly::{reciprocal_matching, FactoredLinear, Poly, Symmetry};

const T: Kind = Kind::Theorem;
const E: Kind = Kind::Erratum;
const R: Mode = Mode::Randomized;
const S: usize = STANDARD_CASES;

pub(super) static SPECS: &[PropertySpec] = &[
    PropertySpec::new("RING-Q", "ring axioms hold in Q", T, R, S, ring_q),
    PropertySpec::new("RING-QI", "ring axioms hold in Q(i)", T, R, S, ring_qi),
    PropertySpec::new("RING-QX", "ring axioms hold in Q[x]", T, R, S, ring_qx),
    PropertySpec::new(
        "CONJ",
        "conjugation is an involutive automorphism of Q(i)",
        T,
        R,
        S,
        conj_auto,
    ),
    PropertySpec::new(
        "LEIBNIZ",
        "d/dx on Q[x] is additive and satisfies d(ab) = d(a)b + a d(b)",
        T,
        R,
        S,
        leibniz,
    ),
    PropertySpec::new(
        "P1.1",
        "reverse(P)(x) = x^n P(1/x), n + 1 = cipher(P)",
        T,
        R,
        S,
        p1_1,
    ),
    PropertySpec::new("P1.2", "P(a) = 0 iff reverse(P)(1/a) = 0", T, R, S, p1_2),
    PropertySpec::new(
        "P1.3",
        "reverse of unit*prod(bx - a) is (-1)^n unit*prod(ax - b)",
        T,
        R,
        S,
        p1_3,
    ),
    PropertySpec::new("P1.4", "reverse(reverse(P)) = P", T, R, S, p1_4),
    PropertySpec::new("P1.5", "cipher(P) = cipher(reverse(P))", T, R, S, p1_5),
    PropertySpec::new(
        "P1.6",
        "reverse(P + Q) = reverse(P) + reverse(Q) for equal ciphers",
        T,
        R,
        S,
        p1_6,
    ),
    PropertySpec::new("P1.7", "reverse(PQ) = reverse(P) reverse(Q)", T, R, S, p1_7),
    PropertySpec::new(
        "R1-FLIP",
        "a plain coefficient flip with a_0 = 0 breaks root reciprocity and cipher preservation",
        E,
        R,
        50,
        r1_flip,
    ),
    PropertySpec::new(
        "P2",
        "roots of a (anti)palindromic polynomial pair as {r, 1/r}, leaving only forced roots +1/-1",
        T,
        R,
        200,
        p2,
    ),
    PropertySpec::new(
        "ERR-P2-ANTI-ODD",
        "printed pairing claim fails for antipalindromic polynomials of odd cipher",
        E,
        R,
        100,
        err_p2_anti_odd,
    ),
    PropertySpec::new(
        "P3.1",
        "palindromic + palindromic of equal degree is palindromic",
        T,
        R,
        S,
        p3_1,
    ),
    PropertySpec::new(
        "P3.2",
        "palindromic * palindromic is palindromic",
        T,
        R,
        S,
        p3_2,
    ),
    PropertySpec::new(
        "P3.3",
        "antipalindromic + antipalindromic of equal degree is antipalindromic",
        T,
        R,
        S,
        p3_3,
    ),
    PropertySpec::new(
        "P3.4",
        "antipalindromic * antipalindromic is palindromic",
        T,
        R,
        S,
        p3_4,
    ),
    PropertySpec::new(
        "P3.5",
        "palindromic * antipalindromic is antipalindromic",
        T,
        R,
        S,
        p3_5,
    ),
    PropertySpec::new(
        "P4.1",
        "reverse(P) <> reverse(Q) = reverse(Q <> P)",
        T,
        R,
        S,
        p4_1,
    ),
    PropertySpec::new("P4.2", "(P <> Q) <> R = P <> (Q <> R)", T, R, S, p4_2),
    PropertySpec::new(
        "P5",
        "P <> reverse(P) is palindromic and divisible by x + 1",
        T,
        R,
        S,
        p5,
    ),
    PropertySpec::new("RECIP", "P*(x) = x^n conj(P(1/conj(x)))", T, R, S, recip),
    PropertySpec::new(
        "CHEB-L1",
        "T_n((z + 1/z)/2) = (z^n + z^-n)/2 for n <= 32",
        T,
        R,
        10,
        cheb_l1,
    ),
    PropertySpec::new(
        "CHEB-SOKO",
        "P(z) = 2 z^n sum c_k T_k((z + 1/z)/2), c_0 = a_n/2, c_k = a_(n-k)",
        T,
        R,
        100,
        cheb_soko,
    ),
    PropertySpec::new(
        "CHEB-RT",
        "expansion back to a palindromic polynomial is the identity",
        T,
        R,
        S,
        cheb_rt,
    ),
    PropertySpec::new(
        "ERR-SOKOEQ",
        "the reduction with c_0 = a_n fails the evaluation identity",
        E,
        R,
        100,
        err_printed_reduction,
    ),
];

const MAX_DEG: usize = 16;

fn ring_axioms<X: Ring>(a: &X, b: &X, c: &X) -> Result<()> {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let checks = [
        (
            "additive associativity",
            (a.clone() + b.clone()) + c.clone() == a.clone() + (b.clone() + c.clone()),
        ),
        (
            "additive identity",
            X::zero() + a.clone() == a && a.clone() + X::zero() == a,
        ),
        (
            "additive inverse",
            (a.clone() + (-a.clone())).is_zero() && ((-a.clone()) + a.clone()).is_zero(),
        ),
        (
            "additive commutativity",
            a.clone() + b.clone() == b.clone() + a.clone(),
        ),
        (
            "multiplicative associativity",
            (a.clone() * b.clone()) * c.clone() == a.clone() * (b.clone() * c.clone()),
        ),
        (
            "multiplicative identity",
            X::one() * a.clone() == a && a.clone() * X::one() == a,
        ),
        (
            "left distributivity",
            a.clone() * (b.clone() + c.clone()) == a.clone() * b.clone() + a.clone() * c.clone(),
        ),
        (
            "right distributivity",
            (a.clone() + b.clone()) * c.clone() == a.clone() * c.clone() + b.clone() * c.clone(),
        ),
    ];
    for (name, ok) in checks {
        ensure(ok, || format!("{name} fails"))?;
    }
    Ok(())
}

fn triples<X: Ring>(cx: &mut Cx, mut draw: impl FnMut(&mut Cx) -> X) {
    for _ in 0..cx.cases {
        let (a, b, c) = (draw(cx), draw(cx), draw(cx));
        let r = ring_axioms(&a, &b, &c);
        cx.check_result(|| format!("a = {a}, b = {b}, c = {c}"), r);
    }
}

fn ring_q(cx: &mut Cx) {
    triples(cx, |cx| gen::rat(&mut cx.rng));
}

fn ring_qi(cx: &mut Cx) {
    triples(cx, |cx| gen::gauss(&mut cx.rng));
}

fn ring_qx(cx: &mut Cx) {
    triples(cx, |cx| gen::poly(&mut cx.rng, 6, false));
}

fn conj_auto(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (a, b) = (gen::gauss(&mut cx.rng), gen::gauss(&mut cx.rng));
        let ok = (a.clone() * b.clone()).conj() == a.conj() * b.conj()
            && (a.clone() + b.clone()).conj() == a.conj() + b.conj()
            && a.conj().conj() == a;
        cx.check(
            ok,
            || format!("a = {a}, b = {b}"),
            || "automorphism".into(),
            || "mismatch".into(),
        );
    }
}

fn leibniz(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let a = gen::poly(&mut cx.rng, 8, false);
        let b = gen::poly(&mut cx.rng, 8, false);
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        let additive = (&a + &b).derivative() == &a.derivative() + &b.derivative();
        cx.check(
            lhs == rhs && additive,
            || format!("a = {a}, b = {b}"),
            || rhs.to_string(),
            || lhs.to_string(),
        );
    }
}

fn unit_poly(cx: &mut Cx) -> QX {
    gen::poly(&mut cx.rng, MAX_DEG, true)
}

fn p1_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = unit_poly(cx);
        let rev = p.reverse().expect("a_0 != 0");
        let n = p.degree().unwrap_or(0);
        let points: Vec<Q> = (0..10).map(|_| gen::nonzero_rat(&mut cx.rng)).collect();
        let bad = points.iter().find(|t| {
            let tn = (0..n).fold(Q::one(), |acc, _| acc * *t);
            rev.eval(t) != tn * p.eval(&t.recip())
        });
        cx.check(
            bad.is_none(),
            || format!("P = {p}, x = {}", bad.unwrap()),
            || "x^n P(1/x)".into(),
            || rev.to_string(),
        );
    }
}

fn random_factored(cx: &mut Cx, max_deg: usize) -> FactoredLinear<Q> {
    let deg = cx.rng.gen_range(1..=max_deg);
    let factors = (0..deg)
        .map(|_| (gen::nonzero_rat(&mut cx.rng), gen::nonzero_rat(&mut cx.rng)))
        .collect();
    FactoredLinear::new(gen::nonzero_rat(&mut cx.rng), factors).expect("nonzero data")
}

fn p1_2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let f = random_factored(cx, 8);
        let p = f.expand();
        let rev = p.reverse().expect("roots nonzero");
        let probe = gen::nonzero_rat(&mut cx.rng);
        let r = (|| {
            for rho in f.roots()? {
                ensure(p.eval(&rho).is_zero(), || format!("P({rho}) != 0"))?;
                ensure(rev.eval(&rho.recip()).is_zero(), || {
                    format!("reverse(P)(1/{rho}) != 0")
                })?;
            }
            let p_zero = p.eval(&probe).is_zero();
            let rev_zero = rev.eval(&probe.recip()).is_zero();
            ensure(p_zero == rev_zero, || {
                format!("P({probe}) = 0 is {p_zero} but reverse(P)(1/{probe}) = 0 is {rev_zero}")
            })
        })();
        cx.check_result(|| format!("P = {p}"), r);
    }
}

fn p1_3(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let deg = cx.rng.gen_range(0..=8);
        let factors = (0..deg)
            .map(|_| {
                let beta = if cx.rng.gen_ratio(1, 8) {
                    Q::zero()
                } else {
                    gen::rat(&mut cx.rng)
                };
                (beta, gen::nonzero_rat(&mut cx.rng))
            })
            .collect();
        let f = FactoredLinear::new(gen::nonzero_rat(&mut cx.rng), factors).expect("nonzero data");
        let got = f.reverse_factored().map(|g| g.expand());
        let want = f.expand().reverse();
        cx.check(
            got == want,
            || {
                format!(
                    "factors {:?}",
                    f.factors()
                        .iter()
                        .map(|(b, a)| format!("({b})x-({a})"))
                        .collect::<Vec<_>>()
                )
            },
            || format!("{want:?}"),
            || format!("{got:?}"),
        );
    }
}

fn p1_4(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = unit_poly(cx);
        let back = p.reverse().and_then(|r| r.reverse());
        cx.check(
            back.as_ref() == Ok(&p),
            || p.to_string(),
            || p.to_string(),
            || format!("{back:?}"),
        );
    }
}

fn p1_5(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = unit_poly(cx);
        let c = p.cipher().ok();
        let rc = p.reverse().ok().and_then(|r| r.cipher().ok());
        cx.check(
            c == rc,
            || p.to_string(),
            || format!("{c:?}"),
            || format!("{rc:?}"),
        );
    }
}

/// Same-cipher pair whose sum keeps both its leading and constant term.
fn additive_pair(cx: &mut Cx) -> (QX, QX) {
    let deg = cx.rng.gen_range(0..=MAX_DEG);
    let p = gen::poly_of_degree(&mut cx.rng, deg, true);
    loop {
        let q = gen::poly_of_degree(&mut cx.rng, deg, true);
        let s = &p + &q;
        if s.degree() == Some(deg) && !s.constant_term().is_zero() {
            return (p, q);
        }
    }
}

fn p1_6(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = additive_pair(cx);
        let lhs = (&p + &q).reverse();
        let rhs = p.reverse().and_then(|a| Ok(&a + &q.reverse()?));
        cx.check(
            lhs == rhs,
            || format!("P = {p}, Q = {q}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn p1_7(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = unit_poly(cx);
        let q = unit_poly(cx);
        let lhs = (&p * &q).reverse();
        let rhs = p.reverse().and_then(|a| Ok(&a * &q.reverse()?));
        cx.check(
            lhs == rhs,
            || format!("P = {p}, Q = {q}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

/// Compares a flip with the two claims it is supposed to satisfy; returns
/// a description of what broke.
fn flip_breakage(p: &QX) -> Option<String> {
    let flip = p.raw_coefficient_flip().ok()?;
    let (c, fc) = (p.cipher().ok()?, flip.cipher().ok()?);
    let root_zero = p.eval(&Q::zero()).is_zero();
    (c != fc || root_zero)
        .then(|| format!("flip = {flip}, cipher {fc} vs {c}; root 0 of P has no reciprocal root"))
}

fn r1_flip(cx: &mut Cx) {
    let witness = Poly::new(vec![Q::zero(), Q::one(), Q::one()]);
    let mut inputs = vec![witness];
    for _ in 1..cx.cases {
        let deg = cx.rng.gen_range(1..=MAX_DEG);
        let mut cs = gen::poly_of_degree(&mut cx.rng, deg, false).into_coeffs();
        cs[0] = Q::zero();
        inputs.push(Poly::new(cs));
    }
    for p in inputs {
        if p.is_constant() {
            continue;
        }
        let broke = flip_breakage(&p);
        cx.check(
            broke.is_none(),
            || p.to_string(),
            || "cipher and root reciprocity preserved".into(),
            || broke.clone().unwrap_or_default(),
        );
        if p.reverse() != Err(Error::ZeroConstantTerm) {
            cx.corrected_fails(p.to_string(), "reverse accepted a_0 = 0".into());
        }
    }
}

fn p2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let anti = cx.rng.gen_bool(0.5);
        let f = gen::sym_factored(&mut cx.rng, 12, anti, gen::nonzero_rat);
        let p = f.expand();
        let r = (|| {
            let rp = f.root_pairing()?;
            let want = if anti {
                Symmetry::Antipalindromic
            } else {
                Symmetry::Palindromic
            };
            ensure(rp.symmetry == want, || {
                format!("classified as {}", rp.symmetry)
            })?;
            for (a, b) in &rp.pairs {
                ensure((a.clone() * b.clone()).is_one(), || {
                    format!("{a} * {b} != 1")
                })?;
            }
            let n = p.degree().unwrap_or(0);
            ensure(2 * rp.pairs.len() + rp.unpaired.len() == n, || {
                "root count mismatch".into()
            })
        })();
        cx.check_result(|| format!("P = {p}"), r);
    }
}

fn err_p2_anti_odd(cx: &mut Cx) {
    let one = Q::one();
    let witness = FactoredLinear::new(
        one.clone(),
        vec![(one.clone(), one.clone()), (one.clone(), -one)],
    )
    .expect("valid");
    let mut instances = vec![witness];
    while instances.len() < cx.cases {
        let f = gen::sym_factored(&mut cx.rng, 12, true, gen::nonzero_rat);
        if f.expand().cipher().is_ok_and(|c| c % 2 == 1) {
            instances.push(f);
        }
    }
    for f in instances {
        let p = f.expand();
        let roots = f.roots().expect("β ≠ 0");
        let printed = reciprocal_matching(&roots);
        cx.check(
            printed.is_some(),
            || format!("P = {p}"),
            || "all roots pair as {r, 1/r}".into(),
            || "+1 and -1 are roots and cannot be paired".into(),
        );
        if let Err(e) = f.root_pairing() {
            cx.corrected_fails(p.to_string(), e.to_string());
        }
    }
}

fn sym_pair_same_cipher(cx: &mut Cx, sign: i64) -> (QX, QX) {
    let cipher = cx
        .rng
        .gen_range(if sign == 1 { 1 } else { 2 }..=MAX_DEG + 1);
    let p = gen::sym_poly(&mut cx.rng, cipher, sign);
    loop {
        let q = gen::sym_poly(&mut cx.rng, cipher, sign);
        if (&p + &q).degree() == p.degree() {
            return (p, q);
        }
    }
}

fn closure(cx: &mut Cx, p: QX, q: QX, sum: bool, expect: Symmetry) {
    let out = if sum { &p + &q } else { &p * &q };
    let r = (|| {
        let (sp, sq) = (p.classify()?, q.classify()?);
        ensure(sp != Symmetry::Neither && sq != Symmetry::Neither, || {
            "input not certified".into()
        })?;
        let got = out.classify()?;
        ensure(got == expect, || format!("result classified as {got}"))
    })();
    let op = if sum { '+' } else { '*' };
    cx.check_result(|| format!("P = {p}, Q = {q}, P {op} Q = {out}"), r);
}

fn p3_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = sym_pair_same_cipher(cx, 1);
        closure(cx, p, q, true, Symmetry::Palindromic);
    }
}

fn sym(cx: &mut Cx, sign: i64) -> QX {
    let lo = if sign == 1 { 1 } else { 2 };
    let cipher = cx.rng.gen_range(lo..=MAX_DEG + 1);
    gen::sym_poly(&mut cx.rng, cipher, sign)
}

fn p3_2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = (sym(cx, 1), sym(cx, 1));
        closure(cx, p, q, false, Symmetry::Palindromic);
    }
}

fn p3_3(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = sym_pair_same_cipher(cx, -1);
        closure(cx, p, q, true, Symmetry::Antipalindromic);
    }
}

fn p3_4(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = (sym(cx, -1), sym(cx, -1));
        closure(cx, p, q, false, Symmetry::Palindromic);
    }
}

fn p3_5(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = (sym(cx, 1), sym(cx, -1));
        closure(cx, p, q, false, Symmetry::Antipalindromic);
    }
}

fn p4_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q) = (unit_poly(cx), unit_poly(cx));
        let lhs = p.reverse().and_then(|a| a.paste(&q.reverse()?));
        let rhs = q.paste(&p).and_then(|s| s.reverse());
        cx.check(
            lhs == rhs,
            || format!("P = {p}, Q = {q}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn p4_2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (p, q, r) = (
            gen::poly(&mut cx.rng, MAX_DEG, false),
            gen::poly(&mut cx.rng, MAX_DEG, false),
            gen::poly(&mut cx.rng, MAX_DEG, false),
        );
        let lhs = p.paste(&q).and_then(|pq| pq.paste(&r));
        let rhs = q.paste(&r).and_then(|qr| p.paste(&qr));
        cx.check(
            lhs == rhs,
            || format!("P = {p}, Q = {q}, R = {r}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn p5(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = unit_poly(cx);
        let r = (|| {
            let s = p.paste(&p.reverse()?)?;
            ensure(s.classify()? == Symmetry::Palindromic, || {
                format!("{s} is not palindromic")
            })?;
            ensure(s.cipher()? % 2 == 0, || format!("{s} has odd cipher"))?;
            ensure(s.divides_at(&-Q::one()), || {
                format!("x + 1 does not divide {s}")
            })
        })();
        cx.check_result(|| format!("P = {p}"), r);
    }
}

fn recip(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let mut p = gen::gauss_poly(&mut cx.rng, MAX_DEG);
        if p.constant_term().is_zero() {
            let mut cs = p.coeffs().to_vec();
            cs[0] = gen::nonzero_gauss(&mut cx.rng);
            p = Poly::new(cs);
        }
        let star = p.reciprocal_conj().expect("a_0 != 0");
        let n = p.degree().unwrap_or(0);
        let t = gen::nonzero_gauss(&mut cx.rng);
        let tn = (0..n).fold(QI::one(), |acc, _| acc * t.clone());
        let want = tn * p.eval(&t.conj().inv().expect("nonzero")).conj();
        let got = star.eval(&t);
        cx.check(
            got == want,
            || format!("P = {p}, x = {t}"),
            || want.to_string(),
            || got.to_string(),
        );
    }
}

fn rat_power(z: &Q, n: usize) -> Q {
    (0..n).fold(Q::one(), |acc, _| acc * z)
}

fn cheb_l1(cx: &mut Cx) {
    for n in 0..=32 {
        let t = cheb_t(n);
        for _ in 0..cx.cases {
            let z = gen::nonzero_rat(&mut cx.rng);
            let w = joukowski(&z).expect("z != 0");
            let zn = rat_power(&z, n);
            let want = (zn.clone() + zn.recip()) / Q::from_i64(2);
            let got = t.eval(&w);
            cx.check(
                got == want,
                || format!("n = {n}, z = {z}"),
                || want.to_string(),
                || got.to_string(),
            );
        }
    }
}

/// Palindromic polynomial of odd cipher up to 33 (even degree up to 32).
fn even_degree_palindrome(cx: &mut Cx) -> QX {
    let half = cx.rng.gen_range(0..=16);
    gen::sym_poly(&mut cx.rng, 2 * half + 1, 1)
}

fn cheb_soko(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = even_degree_palindrome(cx);
        let z = gen::nonzero_rat(&mut cx.rng);
        let got = palindromic_to_cheb(&p).and_then(|c| c.eval_at_z(&z));
        let want = p.eval(&z);
        cx.check(
            got.as_ref() == Ok(&want),
            || format!("P = {p}, z = {z}"),
            || want.to_string(),
            || format!("{got:?}"),
        );
    }
}

fn cheb_rt(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let p = even_degree_palindrome(cx);
        let back = palindromic_to_cheb(&p).map(|c| cheb_to_palindromic(&c));
        cx.check(
            back.as_ref() == Ok(&p),
            || p.to_string(),
            || p.to_string(),
            || format!("{back:?}"),
        );
    }
}

fn err_printed_reduction(cx: &mut Cx) {
    let mut cases = vec![(
        Poly::new(vec![Q::one(), Q::from_i64(3), Q::one()]),
        Q::from_i64(2),
    )];
    while cases.len() < cx.cases {
        let p = even_degree_palindrome(cx);
        let z = gen::nonzero_rat(&mut cx.rng);
        cases.push((p, z));
    }
    for (p, z) in cases {
        let want = p.eval(&z);
        let printed = printed_reduction(&p).and_then(|c| c.eval_at_z(&z));
        cx.check(
            printed.as_ref() == Ok(&want),
            || format!("P = {p}, z = {z}"),
            || want.to_string(),
            || {
                printed
                    .as_ref()
                    .map_or_else(|e| e.to_string(), ToString::to_string)
            },
        );
        match palindromic_to_cheb(&p).and_then(|c| c.eval_at_z(&z)) {
            Ok(v) if v == want => {}
            other => cx.corrected_fails(format!("P = {p}, z = {z}"), format!("{other:?}")),
        }
    }
}
