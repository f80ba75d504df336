//! Numeral properties and the two digit-game tables.

use rand::Rng;

use super::{ensure, Cx, Kind, Mode, PropertySpec, STANDARD_CASES};
use crate::error::Result;
use crate::natnum::{
    check_eleven, game_nines, game_repunits, is_palindrome, paste_nat, reverse_nat, GameRow,
    Numeral,
};

const T: Kind = Kind::Theorem;
const O: Kind = Kind::Observation;
const R: Mode = Mode::Randomized;
const X: Mode = Mode::Exhaustive;
const S: usize = STANDARD_CASES;

pub(super) static SPECS: &[PropertySpec] = &[
    PropertySpec::new(
        "N1",
        "reverse(reverse(n)) = n when the last digit is nonzero",
        T,
        R,
        S,
        n1,
    ),
    PropertySpec::new(
        "N2",
        "reverse(n) <> reverse(m) = reverse(m <> n) when last digits are nonzero",
        T,
        R,
        S,
        n2,
    ),
    PropertySpec::new(
        "N3",
        "(m <> n) <> p = m <> (n <> p) for nonzero n",
        T,
        R,
        S,
        n3,
    ),
    PropertySpec::new(
        "N3-ZERO",
        "pasting associativity with a zero middle numeral",
        O,
        X,
        1,
        n3_zero,
    ),
    PropertySpec::new(
        "N4",
        "base-10 palindromes of cipher 2, 4, 6 are divisible by 11",
        T,
        X,
        999,
        n4,
    ),
    PropertySpec::new(
        "N5",
        "11 divides n <> reverse(n) for 1 <= n <= 99999 with last digit nonzero",
        T,
        X,
        90000,
        n5,
    ),
    PropertySpec::new(
        "N5-TRAILING",
        "n <> reverse(n) modulo 11 for n <= 99999 with last digit zero",
        O,
        X,
        10000,
        n5_trailing,
    ),
    PropertySpec::new(
        "GAME1",
        "nines table: (9 <> 8 <> ... <> (9-n)) * 9 + (7 - n) = 88...8",
        T,
        X,
        10,
        game1,
    ),
    PropertySpec::new(
        "GAME2",
        "repunit table: (1 <> ... <> 1)^2 = (1 <> ... <> (n+1)) <> reverse(1 <> ... <> n)",
        T,
        X,
        9,
        game2,
    ),
];

fn random_numeral(cx: &mut Cx, base: u32, nonzero_last: bool) -> Numeral {
    let len = cx.rng.gen_range(1..=12);
    let mut digits: Vec<u32> = (0..len).map(|_| cx.rng.gen_range(0..base)).collect();
    digits[0] = cx.rng.gen_range(1..base);
    if nonzero_last {
        digits[len - 1] = cx.rng.gen_range(1..base);
    }
    Numeral::from_digits(base, &digits).expect("digits in range")
}

fn random_base(cx: &mut Cx) -> u32 {
    if cx.rng.gen_bool(0.5) {
        10
    } else {
        cx.rng.gen_range(2..=16)
    }
}

fn show(n: &Numeral) -> String {
    format!("{n} (base {})", n.base())
}

fn n1(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let base = random_base(cx);
        let n = random_numeral(cx, base, true);
        let back = reverse_nat(&reverse_nat(&n));
        cx.check(
            back == n,
            || show(&n),
            || n.to_string(),
            || back.to_string(),
        );
    }
}

fn n2(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let base = random_base(cx);
        let (n, m) = (
            random_numeral(cx, base, true),
            random_numeral(cx, base, true),
        );
        let lhs = paste_nat(&reverse_nat(&n), &reverse_nat(&m));
        let rhs = paste_nat(&m, &n).map(|s| reverse_nat(&s));
        cx.check(
            lhs == rhs,
            || format!("n = {}, m = {}", show(&n), show(&m)),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn maybe_zero(cx: &mut Cx, base: u32) -> Numeral {
    if cx.rng.gen_ratio(1, 10) {
        Numeral::from_u64(base, 0).expect("valid base")
    } else {
        random_numeral(cx, base, false)
    }
}

fn n3(cx: &mut Cx) {
    for _ in 0..cx.cases {
        let base = random_base(cx);
        let (m, n, p) = (
            maybe_zero(cx, base),
            random_numeral(cx, base, false),
            maybe_zero(cx, base),
        );
        let lhs = paste_nat(&m, &n).and_then(|mn| paste_nat(&mn, &p));
        let rhs = paste_nat(&n, &p).and_then(|np| paste_nat(&m, &np));
        cx.check(
            lhs == rhs,
            || format!("m = {}, n = {}, p = {}", show(&m), show(&n), show(&p)),
            || format!("{rhs:?}"),
            || format!("{lhs:?}"),
        );
    }
}

fn dec(v: u64) -> Numeral {
    Numeral::from_u64(10, v).expect("base 10")
}

fn n3_zero(cx: &mut Cx) {
    let zero = dec(0);
    for m in 0..=20u64 {
        for p in 0..=20u64 {
            let (m, p) = (dec(m), dec(p));
            let lhs = paste_nat(&paste_nat(&m, &zero).expect("same base"), &p).expect("same base");
            let rhs = paste_nat(&m, &paste_nat(&zero, &p).expect("same base")).expect("same base");
            cx.check(
                lhs == rhs,
                || format!("m = {m}, n = 0, p = {p}"),
                || rhs.to_string(),
                || lhs.to_string(),
            );
        }
    }
}

fn n4(cx: &mut Cx) {
    for half_len in 1..=3u32 {
        let lo = 10u32.pow(half_len - 1);
        for h in lo..10 * lo {
            let half: Vec<u32> = h.to_string().bytes().map(|b| u32::from(b - b'0')).collect();
            let digits: Vec<u32> = half.iter().chain(half.iter().rev()).copied().collect();
            let n = Numeral::from_digits(10, &digits).expect("digits in range");
            let r = (|| -> Result<()> {
                ensure(is_palindrome(&n), || "not a palindrome".into())?;
                ensure(check_eleven(&n), || "not divisible by 11".into())
            })();
            cx.check_result(|| n.to_string(), r);
        }
    }
}

fn n5_case(cx: &mut Cx, v: u64) {
    let n = dec(v);
    let s = paste_nat(&n, &reverse_nat(&n)).expect("same base");
    cx.check(
        check_eleven(&s),
        || format!("n = {n}"),
        || "11 | n <> reverse(n)".into(),
        || s.to_string(),
    );
}

fn n5(cx: &mut Cx) {
    for v in (1..=99_999u64).filter(|v| v % 10 != 0) {
        n5_case(cx, v);
    }
}

fn n5_trailing(cx: &mut Cx) {
    for v in (0..=99_999u64).filter(|v| v % 10 == 0) {
        n5_case(cx, v);
    }
}

const NINES: [&str; 9] = [
    "9 x 9 + 7 = 88",
    "98 x 9 + 6 = 888",
    "987 x 9 + 5 = 8888",
    "9876 x 9 + 4 = 88888",
    "98765 x 9 + 3 = 888888",
    "987654 x 9 + 2 = 8888888",
    "9876543 x 9 + 1 = 88888888",
    "98765432 x 9 + 0 = 888888888",
    "987654321 x 9 - 1 = 8888888888",
];

const REPUNITS: [&str; 9] = [
    "1 x 1 = 1",
    "11 x 11 = 121",
    "111 x 111 = 12321",
    "1111 x 1111 = 1234321",
    "11111 x 11111 = 123454321",
    "111111 x 111111 = 12345654321",
    "1111111 x 1111111 = 1234567654321",
    "11111111 x 11111111 = 123456787654321",
    "111111111 x 111111111 = 12345678987654321",
];

fn compare_rows(cx: &mut Cx, rows: Result<Vec<GameRow>>, printed: &[&str]) {
    let rows = match rows {
        Ok(rows) => rows,
        Err(e) => return cx.check_result(|| "table".into(), Err(e)),
    };
    for row in rows {
        let text = row.text();
        let want = printed.get(row.n).copied();
        let ok = row.equal && want.is_none_or(|w| w == text);
        cx.check(
            ok,
            || format!("row {}", row.n),
            || want.unwrap_or("both sides equal").to_string(),
            || format!("{text} (equal: {})", row.equal),
        );
    }
}

fn game1(cx: &mut Cx) {
    compare_rows(cx, game_nines(10), &NINES);
}

fn game2(cx: &mut Cx) {
    compare_rows(cx, game_repunits(9), &REPUNITS);
}
