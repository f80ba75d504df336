use num_traits::Zero;
use proptest::prelude::*;

use pastrev_core::diffop::DiffOp;
use pastrev_core::field::{rational, GaussianRational};
use pastrev_core::natnum::{paste_nat, reverse_nat, Numeral};
use pastrev_core::poly::Poly;
use pastrev_core::propcheck::{run_all, RunConfig, Status};
use pastrev_core::text::{parse_gaussian, parse_op, parse_poly, ParsedOp};

type GQ = GaussianRational;

fn gq() -> impl Strategy<Value = GQ> {
    (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5)
        .prop_map(|(a, b, c, d)| GQ::new(rational(a, b), rational(c, d)))
}

fn poly() -> impl Strategy<Value = Poly<GQ>> {
    prop::collection::vec(gq(), 0..7).prop_map(Poly::new)
}

fn nonzero_const_poly() -> impl Strategy<Value = Poly<GQ>> {
    poly().prop_filter("nonzero constant term", |p| !p.constant_term().is_zero())
}

fn const_op() -> impl Strategy<Value = DiffOp<GQ>> {
    prop::collection::vec(gq(), 0..6).prop_map(DiffOp::new)
}

fn qx_op() -> impl Strategy<Value = DiffOp<Poly<GQ>>> {
    prop::collection::vec(poly(), 0..5).prop_map(DiffOp::new)
}

proptest! {
    #[test]
    fn scalar_text_round_trip(z in gq()) {
        prop_assert_eq!(parse_gaussian(&z.to_string()).unwrap(), z);
    }

    #[test]
    fn poly_text_round_trip(p in poly()) {
        prop_assert_eq!(parse_poly(&p.render('x')).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&p.render('z')).unwrap(), p);
    }

    #[test]
    fn const_op_text_round_trip(l in const_op()) {
        match parse_op(&l.render()).unwrap() {
            ParsedOp::Constants(back) => prop_assert_eq!(back, l),
            ParsedOp::Polynomial(_) => prop_assert!(false, "constants operator parsed into the polynomial ring"),
        }
    }

    #[test]
    fn qx_op_text_round_trip(l in qx_op()) {
        prop_assert_eq!(parse_op(&l.render()).unwrap().into_polynomial(), l);
    }

    #[test]
    fn reverse_is_an_involution(p in nonzero_const_poly()) {
        prop_assert_eq!(p.reverse().unwrap().reverse().unwrap(), p);
    }

    #[test]
    fn paste_is_associative(p in poly(), q in poly(), r in poly()) {
        let lhs = p.paste(&q).and_then(|pq| pq.paste(&r));
        let rhs = q.paste(&r).and_then(|qr| p.paste(&qr));
        prop_assert_eq!(lhs.ok(), rhs.ok());
    }

    #[test]
    fn paste_reverse_is_palindromic(p in nonzero_const_poly()) {
        let s = p.paste(&p.reverse().unwrap()).unwrap();
        prop_assert_eq!(s.reverse().unwrap(), s.clone());
        prop_assert!(s.divides_at(&parse_gaussian("-1").unwrap()));
    }

    #[test]
    fn op_reverse_is_an_involution(l in qx_op()) {
        prop_assume!(l.reverse().is_ok());
        prop_assert_eq!(l.reverse().unwrap().reverse().unwrap(), l);
    }

    #[test]
    fn numeral_text_round_trip(v in 0u64..u64::MAX, base in 2u32..=36) {
        let n = Numeral::from_u64(base, v).unwrap();
        prop_assert_eq!(Numeral::parse(&n.to_string(), base).unwrap(), n);
    }

    #[test]
    fn numeral_paste_matches_digit_concatenation(a in 1u64..1_000_000, b in 0u64..1_000_000) {
        let (n, m) = (Numeral::from_u64(10, a).unwrap(), Numeral::from_u64(10, b).unwrap());
        prop_assert_eq!(paste_nat(&n, &m).unwrap().to_string(), format!("{a}{b}"));
        let r = reverse_nat(&n).to_string();
        let flipped: String = a.to_string().chars().rev().skip_while(|c| *c == '0').collect();
        prop_assert_eq!(r, flipped);
    }
}

#[test]
fn report_json_schema() {
    let cfg = RunConfig {
        seed: 1,
        cases: Some(3),
        timings: false,
    };
    let reports = run_all(&cfg, Some(&["P1.4".to_string(), "ERR-SOKOEQ".to_string()])).unwrap();
    assert_eq!(reports[0].status, Status::Pass);
    assert_eq!(reports[1].status, Status::Reproduced);
    let v = serde_json::to_value(&reports).unwrap();
    for key in [
        "id", "anchor", "kind", "status", "seed", "cases", "failed", "failures", "millis",
    ] {
        assert!(v[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(v[1]["kind"], "erratum");
    assert_eq!(v[1]["status"], "reproduced");
    let f = &v[1]["failures"][0];
    assert!(f["inputs"].is_string() && f["expected"].is_string() && f["got"].is_string());
}

#[test]
fn seed_is_recorded() {
    let ids = ["P1.1".to_string()];
    let a = run_all(
        &RunConfig {
            seed: 1,
            cases: Some(5),
            timings: false,
        },
        Some(&ids),
    )
    .unwrap();
    let b = run_all(
        &RunConfig {
            seed: 2,
            cases: Some(5),
            timings: false,
        },
        Some(&ids),
    )
    .unwrap();
    assert_eq!(a[0].status, Status::Pass);
    assert_eq!(b[0].status, Status::Pass);
    assert_ne!(a[0].seed, b[0].seed);
}
