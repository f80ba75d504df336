//! Differential-operator properties.

use num_traits::{One, Zero};
use rand::Rng;

use super::gen::{self, Q, QI, QX};
use super::{ensure, Cx, Kind, Mode, PropertySpec, STANDARD_CASES};
use crate::diffop::{kernel_exponents, DiffOp, DiffRing, ExpPoly};
use crate::error::Result;
use crate::field::{Field, Ring};
use crate::poly::{FactoredLinear, Poly, Symmetry};

const T: Kind = Kind::Theorem;
const E: Kind = Kind::Erratum;
const R: Mode = Mode::Randomized;
const S: usize = STANDARD_CASES;

pub(super) static SPECS: &[PropertySpec] = &[
    PropertySpec::new("PDO1.1", "reverse(reverse(L)) = L", T, R, S, pdo1_1),
    PropertySpec::new("PDO1.2", "cipher(L) = cipher(reverse(L))", T, R, S, pdo1_2),
    PropertySpec::new("PDO1.3", "reverse(L + R) = reverse(L) + reverse(R) for equal ciphers", T, R, S, pdo1_3),
    PropertySpec::new("PDO-ORD1", "for cipher 2, (D ln y)(D ln u) = 1 with y in ker L, u in ker reverse(L)", T, R, 100, pdo_ord1),
    PropertySpec::new("PDO2", "palindromic L of even cipher is S(D + 1); antipalindromic R is T(D - 1)", T, R, 200, pdo2),
    PropertySpec::new("PDO-DIV", "L = S(D + c) + r and L e^(-cx) = r e^(-cx)", T, R, S, pdo_div),
    PropertySpec::new("PDO3.1", "palindromic + palindromic of equal order is palindromic", T, R, S, pdo3_1),
    PropertySpec::new("PDO3.2", "antipalindromic + antipalindromic of equal order is antipalindromic", T, R, S, pdo3_2),
    PropertySpec::new("PDO4.1", "reverse(L) <> reverse(R) = reverse(R <> L)", T, R, S, pdo4_1),
    PropertySpec::new("PDO4.2", "(L <> R) <> S = L <> (R <> S)", T, R, S, pdo4_2),
    PropertySpec::new("PDO5", "D + 1 is a right divisor of L <> reverse(L)", T, R, S, pdo5),
    PropertySpec::new("PDOC1.1", "for constant coefficients the characteristic polynomial transfers sum, product, reverse, paste and class", T, R, S, pdoc1_1),
    PropertySpec::new("PDOC1.2R", "x^j e^(lx) in ker L iff x^j e^(x/l) in ker reverse(L), constant coefficients", T, R, 100, pdoc1_2r),
    PropertySpec::new("ERR-PDOC1-2", "printed kernel reciprocity with e^(-lx) fails", E, R, 100, err_pdoc1_2),
    PropertySpec::new("PDOC1.3", "reverse of unit*prod(bD - a) is (-1)^n unit*prod(aD - b)", T, R, S, pdoc1_3),
    PropertySpec::new("PDOC1.4", "reverse(LR) = reverse(L) reverse(R), constant coefficients", T, R, S, pdoc1_4),
    PropertySpec::new("PDOC1.5R", "kernel exponents of an (anti)palindromic constant operator pair as {l, 1/l}", T, R, 100, pdoc1_5r),
    PropertySpec::new("PDOC1.6", "palindromic * palindromic is palindromic, constant coefficients", T, R, S, pdoc1_6),
    PropertySpec::new("PDOC1.7", "antipalindromic * antipalindromic is palindromic, constant coefficients", T, R, S, pdoc1_7),
    PropertySpec::new("PDOC1.8", "palindromic * antipalindromic is antipalindromic, constant coefficients", T, R, S, pdoc1_8),
    PropertySpec::new("WEYL", "D p - p D = p' in Q[x][D]; in particular Dx - xD = 1", T, R, S, weyl),
    PropertySpec::new("REMARK-KER", "e^(-x^2/2) lies in ker(D^2 + 1 - x^2) but not in ker of its reverse", T, R, 1, gaussian_kernel),
    PropertySpec::new("PDO-MUL-APPLY", "(L R) f = L (R f) on exp-polynomials", T, R, S, pdo_mul_apply),
];

type Op = DiffOp<QX>;
type COp = DiffOp<QI>;
type CPoly = Poly<QI>;

const MAX_ORDER: usize = 6;
const COEFF_DEG: usize = 3;

fn random_op(cx: &mut Cx) -> Op {
    gen::op(&mut cx.rng, MAX_ORDER, COEFF_DEG)
}

fn pdo1_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let l = random_op(cx);
        let back = l.reverse().and_then(|r| r.reverse());
        cx.check(
            back.as_ref() == Ok(&l),
            || l.to_string(),
            || l.to_string(),
            || format!("{back:?}"),
        );
    }
}

fn pdo1_2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let l = random_op(cx);
        let c = l.cipher().ok();
        let rc = l.reverse().ok().and_then(|r| r.cipher().ok());
        cx.check(
            c == rc,
            || l.to_string(),
            || format!("{c:?}"),
            || format!("{rc:?}"),
        );
    }
}

fn pdo1_3(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let order = cx.rng.gen_range(0..=MAX_ORDER);
        let l = gen::op_of_order(&mut cx.rng, order, COEFF_DEG);
        let r = loop {
            let r = gen::op_of_order(&mut cx.rng, order, COEFF_DEG);
            let s = &l + &r;
            if s.order() == Some(order) && !s.coeff(0).is_zero() {
                break r;
            }
        };
        let lhs = (&l + &r).reverse();
        let rhs = l.reverse().and_then(|a| Ok(&a + &r.reverse()?));
        cx.check(
            lhs == rhs,
            || format!("L = {l}, R = {r}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn pdo_ord1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let l = gen::op_of_order(&mut cx.rng, 1, COEFF_DEG);
        let r = (|| {
            let ld = l.log_derivative_product()?;
            ensure(ld.product.is_one(), || format!("product = {}", ld.product))?;
            let a0 = l.coeff(0).to_rational_func().expect("real");
            let a1 = l.coeff(1).to_rational_func().expect("real");
            // y' = u1 y solves a1 y' + a0 y = 0 iff a1 u1 + a0 = 0
            ensure((a1.clone() * ld.u1.clone() + a0.clone()).is_zero(), || {
                format!("u1 = {}", ld.u1)
            })?;
            ensure((a0 * ld.u2.clone() + a1).is_zero(), || {
                format!("u2 = {}", ld.u2)
            })
        })();
        cx.check_result(|| format!("L = {l}"), r);
    }
}

/// Divides by `D + c` and checks both division identities; returns the
/// remainder.
fn checked_division(l: &Op, c: &Q) -> Result<QX> {
    let cq = QX::constant(c.clone());
    let (s, r) = l.right_divide_monic_linear(&cq)?;
    let rebuilt = &s.compose(&DiffOp::monic_linear(cq)) + &DiffOp::constant(r.clone());
    ensure(&rebuilt == l, || {
        format!("S(D + {c}) + r = {rebuilt} with S = {s}, r = {r}")
    })?;
    let e = ExpPoly::exp(CPoly::monomial(QI::from(-c.clone()), 1));
    let applied = l.apply(&e);
    let scaled = e.mul_poly(&r.to_exp_coeff());
    ensure(applied == scaled, || {
        format!("L e^(-cx) = {applied}, r e^(-cx) = {scaled}")
    })?;
    Ok(r)
}

fn pdo2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let cipher = 2 * cx.rng.gen_range(1..=3);
        let pal = gen::sym_op(&mut cx.rng, cipher, 1, COEFF_DEG);
        let anti = gen::sym_op(&mut cx.rng, cipher, -1, COEFF_DEG);
        let r = (|| {
            ensure(pal.classify()? == Symmetry::Palindromic, || {
                "generator".into()
            })?;
            ensure(anti.classify()? == Symmetry::Antipalindromic, || {
                "generator".into()
            })?;
            let r1 = checked_division(&pal, &Q::one())?;
            ensure(r1.is_zero(), || format!("remainder of L by D + 1 is {r1}"))?;
            let r2 = checked_division(&anti, &-Q::one())?;
            ensure(r2.is_zero(), || format!("remainder of R by D - 1 is {r2}"))
        })();
        cx.check_result(|| format!("L = {pal}, R = {anti}"), r);
    }
}

fn pdo_div(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let order = cx.rng.gen_range(1..=MAX_ORDER);
        let l = gen::op_of_order(&mut cx.rng, order, COEFF_DEG);
        let c = gen::rat(&mut cx.rng);
        let r = checked_division(&l, &c).map(drop);
        cx.check_result(|| format!("L = {l}, c = {c}"), r);
    }
}

fn sym_op_pair(cx: &mut Cx, sign: i64) -> (Op, Op) {
    let cipher = cx
        .rng
        .gen_range(if sign == 1 { 1 } else { 2 }..=MAX_ORDER + 1);
    let l = gen::sym_op(&mut cx.rng, cipher, sign, COEFF_DEG);
    loop {
        let r = gen::sym_op(&mut cx.rng, cipher, sign, COEFF_DEG);
        if (&l + &r).order() == l.order() {
            return (l, r);
        }
    }
}

fn op_sum_closure(cx: &mut Cx, sign: i64, expect: Symmetry) {
    for _ in 0..cx.cases {
        let (l, r) = sym_op_pair(cx, sign);
        let sum = &l + &r;
        let got = sum.classify();
        cx.check(
            got == Ok(expect),
            || format!("L = {l}, R = {r}"),
            || expect.to_string(),
            || format!("{got:?} for {sum}"),
        );
    }
}

fn pdo3_1(cx: &mut Cx) {
    op_sum_closure(cx, 1, Symmetry::Palindromic);
}

fn pdo3_2(cx: &mut Cx) {
    op_sum_closure(cx, -1, Symmetry::Antipalindromic);
}

fn pdo4_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (l, r) = (random_op(cx), random_op(cx));
        let lhs = l.reverse().and_then(|a| a.paste(&r.reverse()?));
        let rhs = r.paste(&l).and_then(|s| s.reverse());
        cx.check(
            lhs == rhs,
            || format!("L = {l}, R = {r}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn pdo4_2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (l, r, s) = (random_op(cx), random_op(cx), random_op(cx));
        let lhs = l.paste(&r).and_then(|lr| lr.paste(&s));
        let rhs = r.paste(&s).and_then(|rs| l.paste(&rs));
        cx.check(
            lhs == rhs,
            || format!("L = {l}, R = {r}, S = {s}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn pdo5(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let l = gen::op(&mut cx.rng, 3, COEFF_DEG);
        let r = (|| {
            let m = l.paste(&l.reverse()?)?;
            ensure(m.classify()? == Symmetry::Palindromic, || {
                format!("{m} is not palindromic")
            })?;
            ensure(m.cipher()? % 2 == 0, || format!("{m} has odd cipher"))?;
            let rem = checked_division(&m, &Q::one())?;
            ensure(rem.is_zero(), || format!("remainder {rem}"))
        })();
        cx.check_result(|| format!("L = {l}"), r);
    }
}

fn const_op(cx: &mut Cx) -> COp {
    gen::const_op(&mut cx.rng, MAX_ORDER)
}

fn pdoc1_1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (l, r) = (const_op(cx), const_op(cx));
        let (pl, pr) = (l.char_poly(), r.char_poly());
        let res = (|| {
            ensure(l.compose(&r).char_poly() == &pl * &pr, || "product".into())?;
            ensure((&l + &r).char_poly() == &pl + &pr, || "sum".into())?;
            ensure(l.reverse()?.char_poly() == pl.reverse()?, || {
                "reverse".into()
            })?;
            ensure(l.paste(&r)?.char_poly() == pl.paste(&pr)?, || {
                "paste".into()
            })?;
            ensure(l.classify()? == pl.classify()?, || "class".into())?;
            ensure(COp::from_char_poly(&pl) == l, || "round trip".into())
        })();
        cx.check_result(|| format!("L = {l}, R = {r}"), res);
    }
}

/// Factored constant operator with nonzero exponents drawn from a small
/// pool, so that multiplicities above one occur.
fn factored_kernel_instance(cx: &mut Cx) -> FactoredLinear<QI> {
    let pool: Vec<QI> = (0..3).map(|_| gen::nonzero_gauss(&mut cx.rng)).collect();
    let n = cx.rng.gen_range(1..=4);
    let factors = (0..n)
        .map(|_| {
            let beta = gen::nonzero_gauss(&mut cx.rng);
            let lambda = pool[cx.rng.gen_range(0..pool.len())].clone();
            (beta.clone(), beta * lambda)
        })
        .collect();
    FactoredLinear::new(gen::nonzero_gauss(&mut cx.rng), factors).expect("nonzero data")
}

fn kernel_pairs(f: &FactoredLinear<QI>) -> Vec<(usize, QI)> {
    kernel_exponents(f)
        .expect("β ≠ 0")
        .into_iter()
        .flat_map(|(l, m)| (0..m).map(move |j| (j, l.clone())))
        .collect()
}

fn pdoc1_2r(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let f = factored_kernel_instance(cx);
        let l = COp::from_factored(&f);
        let r = (|| {
            let rev = l.reverse()?;
            for (j, lambda) in kernel_pairs(&f) {
                let inv = lambda.inv().expect("λ ≠ 0");
                ensure(
                    l.apply(&ExpPoly::monomial_exp(j, lambda.clone())).is_zero(),
                    || format!("x^{j} e^({lambda}x) not in ker L"),
                )?;
                ensure(
                    rev.apply(&ExpPoly::monomial_exp(j, inv.clone())).is_zero(),
                    || format!("x^{j} e^({inv}x) not in ker reverse(L)"),
                )?;
            }
            Ok(())
        })();
        cx.check_result(|| format!("L = {l}"), r);
    }
}

fn err_pdoc1_2(cx: &mut Cx) {
    let two = QI::from_i64(2);
    let witness = FactoredLinear::new(QI::one(), vec![(QI::one(), two)]).expect("valid");
    let mut instances = vec![witness];
    while instances.len() < cx.cases {
        instances.push(factored_kernel_instance(cx));
    }
    for f in instances {
        let l = COp::from_factored(&f);
        let rev = l.reverse().expect("λ ≠ 0");
        for (j, lambda) in kernel_pairs(&f) {
            let printed = rev.apply(&ExpPoly::monomial_exp(j, -lambda.clone()));
            cx.check(
                printed.is_zero(),
                || format!("L = {l}, j = {j}, lambda = {lambda}"),
                || "reverse(L) x^j e^(-lx) = 0".into(),
                || printed.to_string(),
            );
            let inv = lambda.inv().expect("λ ≠ 0");
            let corrected = rev.apply(&ExpPoly::monomial_exp(j, inv));
            if !corrected.is_zero() {
                cx.corrected_fails(
                    format!("L = {l}, j = {j}, lambda = {lambda}"),
                    corrected.to_string(),
                );
            }
        }
    }
}

fn pdoc1_3(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let n = cx.rng.gen_range(0..=MAX_ORDER);
        let factors = (0..n)
            .map(|_| (gen::gauss(&mut cx.rng), gen::nonzero_gauss(&mut cx.rng)))
            .filter(|(b, a)| !(b.is_zero() && a.is_zero()))
            .collect();
        let f =
            FactoredLinear::new(gen::nonzero_gauss(&mut cx.rng), factors).expect("nonzero data");
        let got = f.reverse_factored().map(|g| COp::from_factored(&g));
        let want = COp::from_factored(&f).reverse();
        cx.check(
            got == want,
            || COp::from_factored(&f).to_string(),
            || format!("{want:?}"),
            || format!("{got:?}"),
        );
    }
}

fn pdoc1_4(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let (l, r) = (const_op(cx), const_op(cx));
        let lhs = l.compose(&r).reverse();
        let rhs = l.reverse().and_then(|a| Ok(a.compose(&r.reverse()?)));
        cx.check(
            lhs == rhs,
            || format!("L = {l}, R = {r}"),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn pdoc1_5r(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let anti = cx.rng.gen_bool(0.5);
        let f = gen::sym_factored(&mut cx.rng, MAX_ORDER, anti, gen::nonzero_gauss);
        let l = COp::from_factored(&f);
        let r = (|| {
            let rp = f.root_pairing()?;
            ensure(l.classify()? == rp.symmetry, || {
                "class differs from char poly".into()
            })?;
            for (a, b) in &rp.pairs {
                ensure((a.clone() * b.clone()).is_one(), || {
                    format!("{a} * {b} != 1")
                })?;
                for lambda in [a, b] {
                    ensure(
                        l.apply(&ExpPoly::monomial_exp(0, lambda.clone())).is_zero(),
                        || format!("e^({lambda}x) not in ker L"),
                    )?;
                }
            }
            Ok(())
        })();
        cx.check_result(|| format!("L = {l}"), r);
    }
}

fn const_sym(cx: &mut Cx, sign: i64) -> COp {
    let cipher = cx
        .rng
        .gen_range(if sign == 1 { 1 } else { 2 }..=MAX_ORDER + 1);
    gen::const_sym_op(&mut cx.rng, cipher, sign)
}

fn const_product_closure(cx: &mut Cx, sl: i64, sr: i64, expect: Symmetry) {
    for _ in 0..cx.cases {
        let (l, r) = (const_sym(cx, sl), const_sym(cx, sr));
        let p = l.compose(&r);
        let got = p.classify();
        cx.check(
            got == Ok(expect),
            || format!("L = {l}, R = {r}"),
            || expect.to_string(),
            || format!("{got:?} for {p}"),
        );
    }
}

fn pdoc1_6(cx: &mut Cx) {
    const_product_closure(cx, 1, 1, Symmetry::Palindromic);
}

fn pdoc1_7(cx: &mut Cx) {
    const_product_closure(cx, -1, -1, Symmetry::Palindromic);
}

fn pdoc1_8(cx: &mut Cx) {
    const_product_closure(cx, 1, -1, Symmetry::Antipalindromic);
}

fn weyl(cx: &mut Cx) {
    let x = Op::constant(QX::x());
    let comm = &Op::d().compose(&x) - &x.compose(&Op::d());
    cx.check(
        comm.is_one(),
        || "D x - x D".into(),
        || "1".into(),
        || comm.to_string(),
    );
    for _ in 1..cx.cases {
        let p = gen::poly(&mut cx.rng, 8, false);
        let pop = Op::constant(p.clone());
        let comm = &Op::d().compose(&pop) - &pop.compose(&Op::d());
        let want = Op::constant(p.derivative());
        cx.check(
            comm == want,
            || format!("p = {p}"),
            || want.to_string(),
            || comm.to_string(),
        );
    }
}

fn gaussian_kernel(cx: &mut Cx) {
    let x2 = QX::monomial(Q::one(), 2);
    let l = Op::new(vec![&QX::one() - &x2, QX::zero(), QX::one()]);
    let g = ExpPoly::exp(CPoly::monomial(
        QI::from_rational(&Q::new((-1).into(), 2.into())),
        2,
    ));
    let image = l.apply(&g);
    let rev_image = l.reverse().map(|r| r.apply(&g));
    cx.check(
        image.is_zero() && rev_image.as_ref().is_ok_and(|v| !v.is_zero()),
        || format!("L = {l}, f = {g}"),
        || "L f = 0 and reverse(L) f != 0".into(),
        || format!("L f = {image}, reverse(L) f = {rev_image:?}"),
    );
}

fn random_exp_poly(cx: &mut Cx) -> ExpPoly {
    let terms = cx.rng.gen_range(1..=2);
    ExpPoly::new((0..terms).map(|_| {
        let q = gen::gauss_poly(&mut cx.rng, 2);
        let s = CPoly::new(vec![
            QI::zero(),
            gen::gauss(&mut cx.rng),
            if cx.rng.gen_bool(0.3) {
                gen::gauss(&mut cx.rng)
            } else {
                QI::zero()
            },
        ]);
        (q, s)
    }))
}

fn pdo_mul_apply(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let l = gen::op(&mut cx.rng, 3, 2);
        let r = gen::op(&mut cx.rng, 3, 2);
        let f = random_exp_poly(cx);
        let lhs = l.compose(&r).apply(&f);
        let rhs = l.apply(&r.apply(&f));
        cx.check(
            lhs == rhs,
            || format!("L = {l}, R = {r}, f = {f}"),
            || rhs.to_string(),
            || lhs.to_string(),
        );
    }
}
