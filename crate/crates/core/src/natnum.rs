//! Base-B numerals with digit Pasting and Reversing, and the two digit games.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_BASE: u32 = 36;

/// A nonnegative integer together with its digits in a fixed base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Numeral {
    base: u32,
    digits: Vec<u32>,
    value: BigUint,
}

fn check_base(base: u32) -> Result<()> {
    if (2..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "base must lie in 2..={MAX_BASE}, got {base}"
        )))
    }
}

impl Numeral {
    /// Builds a numeral from most-significant-first digits. Leading zeros
    /// are dropped; an empty sequence is zero.
    pub fn from_digits(base: u32, digits: &[u32]) -> Result<Self> {
        check_base(base)?;
        if let Some(d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::domain(format!(
                "digit {d} out of range for base {base}"
            )));
        }
        let start = digits.iter().position(|&d| d != 0).unwrap_or(digits.len());
        let digits = if start == digits.len() {
            vec![0]
        } else {
            digits[start..].to_vec()
        };
        let value = digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * base + d);
        Ok(Numeral {
            base,
            digits,
            value,
        })
    }

    pub fn from_value(base: u32, value: BigUint) -> Result<Self> {
        check_base(base)?;
        let digits = if value.is_zero() {
            vec![0]
        } else {
            value.to_radix_be(base).into_iter().map(u32::from).collect()
        };
        Ok(Numeral {
            base,
            digits,
            value,
        })
    }

    pub fn from_u64(base: u32, value: u64) -> Result<Self> {
        Self::from_value(base, BigUint::from(value))
    }

    /// Parses a digit string (`0-9`, then `a-z` for digits ten and up).
    pub fn parse(text: &str, base: u32) -> Result<Self> {
        check_base(base)?;
        let offset = text.len() - text.trim_start().len();
        let body = text.trim();
        if body.is_empty() {
            return Err(Error::parse(offset, "expected a numeral"));
        }
        let mut digits = Vec::with_capacity(body.len());
        for (i, ch) in body.char_indices() {
            match ch.to_digit(base) {
                Some(d) => digits.push(d),
                None => {
                    return Err(Error::parse(
                        offset + i,
                        format!("'{ch}' is not a base-{base} digit"),
                    ))
                }
            }
        }
        Self::from_digits(base, &digits)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn last_digit(&self) -> u32 {
        *self
            .digits
            .last()
            .expect("numerals have at least one digit")
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .digits
            .iter()
            .map(|&d| char::from_digit(d, self.base).expect("digit below base"))
            .collect();
        f.write_str(&s)
    }
}

/// Digit count; `Ç(0) = 1`.
pub fn cipher_nat(n: &Numeral) -> usize {
    n.digits.len()
}

/// Digits reversed, leading zeros of the result dropped (`120 → 21`).
pub fn reverse_nat(n: &Numeral) -> Numeral {
    let rev: Vec<u32> = n.digits.iter().rev().copied().collect();
    Numeral::from_digits(n.base, &rev).expect("digits already valid")
}

/// `n ⋄ m = B^{Ç(m)} n + m`.
pub fn paste_nat(n: &Numeral, m: &Numeral) -> Result<Numeral> {
    if n.base != m.base {
        return Err(Error::BaseMismatch(n.base, m.base));
    }
    let value = n.value.clone() * BigUint::from(n.base).pow(cipher_nat(m) as u32) + &m.value;
    Numeral::from_value(n.base, value)
}

pub fn paste_fold_nat(xs: &[Numeral]) -> Result<Numeral> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptySequence)?;
    rest.iter()
        .try_fold(first.clone(), |acc, x| paste_nat(&acc, x))
}

pub fn is_palindrome(n: &Numeral) -> bool {
    n.digits.iter().eq(n.digits.iter().rev())
}

/// `(B + 1) | n`.
pub fn check_eleven(n: &Numeral) -> bool {
    n.value.is_multiple_of(&BigUint::from(n.base + 1))
}

/// One row of a digit game: `lhs = rhs` with both sides evaluated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GameRow {
    pub n: usize,
    /// Expression text, e.g. `98 x 9 + 6`.
    pub lhs: String,
    pub lhs_value: String,
    pub rhs: String,
    pub equal: bool,
}

impl GameRow {
    pub fn text(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }
}

fn dec(v: u64) -> Numeral {
    Numeral::from_u64(10, v).expect("base 10")
}

fn check_rows(rows: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&rows) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "rows must lie in 1..={max}, got {rows}"
        )))
    }
}

/// `(9 ⋄ 8 ⋄ … ⋄ (9−n)) · 9 + (9 − (n+2)) = 8 ⋄ … ⋄ 8` (`n + 2` eights) for
/// `n = 0..rows`.
pub fn game_nines(rows: usize) -> Result<Vec<GameRow>> {
    check_rows(rows, 10)?;
    (0..rows)
        .map(|n| {
            let left = paste_fold_nat(&(0..=n as u64).map(|k| dec(9 - k)).collect::<Vec<_>>())?;
            let rhs = paste_fold_nat(&vec![dec(8); n + 2])?;
            let adj = 7 - n as i64;
            let lhs_value: BigInt = BigInt::from(left.value.clone()) * 9 + adj;
            let sign = if adj < 0 { '-' } else { '+' };
            Ok(GameRow {
                n,
                lhs: format!("{left} x 9 {sign} {}", adj.abs()),
                equal: lhs_value == BigInt::from(rhs.value.clone()),
                lhs_value: lhs_value.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect()
}

/// `(1 ⋄ … ⋄ 1)^2 = (1 ⋄ 2 ⋄ … ⋄ (n+1)) ⋄ reverse(1 ⋄ … ⋄ n)` for
/// `n = 0..rows`; row 0 is `1 x 1 = 1`.
pub fn game_repunits(rows: usize) -> Result<Vec<GameRow>> {
    check_rows(rows, 9)?;
    (0..rows)
        .map(|n| {
            let unit = paste_fold_nat(&vec![dec(1); n + 1])?;
            let rhs = if n == 0 {
                dec(1)
            } else {
                let up = paste_fold_nat(&(1..=n as u64 + 1).map(dec).collect::<Vec<_>>())?;
                let down = paste_fold_nat(&(1..=n as u64).map(dec).collect::<Vec<_>>())?;
                paste_nat(&up, &reverse_nat(&down))?
            };
            let lhs_value = &unit.value * &unit.value;
            Ok(GameRow {
                n,
                lhs: format!("{unit} x {unit}"),
                equal: lhs_value == rhs.value,
                lhs_value: lhs_value.to_string(),
                rhs: rhs.to_string(),
            })
        })
        .collect()
}

/// Rows centred on the widest one; no trailing spaces.
pub fn render_game_table(rows: &[GameRow]) -> String {
    let lines: Vec<String> = rows.iter().map(GameRow::text).collect();
    let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        let pad = (width - l.chars().count()) / 2;
        out.push_str(&" ".repeat(pad));
        out.push_str(&l);
        out.push('\n');
    }
    out
}

/// Value as `u64` when it fits; handy for exhaustive scans.
pub fn small_value(n: &Numeral) -> Option<u64> {
    n.value.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Numeral {
        Numeral::parse(s, 10).unwrap()
    }

    #[test]
    fn cipher_and_reverse() {
        assert_eq!(cipher_nat(&d("987")), 3);
        assert_eq!(cipher_nat(&d("0")), 1);
        assert_eq!(cipher_nat(&d("1000000000")), 10);
        assert_eq!(reverse_nat(&d("123")), d("321"));
        assert_eq!(reverse_nat(&d("120")), d("21"));
        assert_eq!(reverse_nat(&d("7")), d("7"));
    }

    #[test]
    fn paste_examples() {
        assert_eq!(paste_nat(&d("12"), &d("34")).unwrap(), d("1234"));
        assert_eq!(
            paste_nat(&d("987654321"), &d("0")).unwrap(),
            d("9876543210")
        );
        let left = paste_nat(&paste_nat(&d("1"), &d("2")).unwrap(), &d("3")).unwrap();
        let right = paste_nat(&d("1"), &paste_nat(&d("2"), &d("3")).unwrap()).unwrap();
        assert_eq!(left, d("123"));
        assert_eq!(right, d("123"));
        assert_eq!(paste_fold_nat(&[d("9"), d("8"), d("7")]).unwrap(), d("987"));
        assert_eq!(paste_fold_nat(&vec![d("1"); 5]).unwrap(), d("11111"));
        assert_eq!(paste_nat(&d("9"), &d("10")).unwrap(), d("910"));
        assert_eq!(paste_fold_nat(&[]), Err(Error::EmptySequence));
        let b2 = Numeral::parse("101", 2).unwrap();
        assert_eq!(paste_nat(&d("1"), &b2), Err(Error::BaseMismatch(10, 2)));
    }

    #[test]
    fn predicates() {
        assert!(is_palindrome(&d("12321")));
        assert!(!is_palindrome(&d("123")));
        assert!(is_palindrome(&d("7")));
        assert!(check_eleven(&d("123321")));
        assert!(check_eleven(&d("1221")));
        assert!(check_eleven(&d("121")));
        assert!(!check_eleven(&d("123")));
        assert!(check_eleven(&Numeral::parse("1001", 2).unwrap()));
    }

    #[test]
    fn parsing() {
        assert_eq!(d("  0042 ").to_string(), "42");
        assert_eq!(
            Numeral::parse("ff", 16).unwrap().value(),
            &BigUint::from(255u32)
        );
        assert_eq!(Numeral::parse("FF", 16).unwrap().to_string(), "ff");
        assert!(matches!(
            Numeral::parse("12a", 10),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(Numeral::parse("", 10), Err(Error::Parse { .. })));
        assert!(matches!(Numeral::parse("1", 1), Err(Error::Domain(_))));
    }

    #[test]
    fn nines_rows() {
        let rows = game_nines(10).unwrap();
        assert!(rows.iter().all(|r| r.equal));
        assert_eq!(rows[0].text(), "9 x 9 + 7 = 88");
        assert_eq!(rows[1].text(), "98 x 9 + 6 = 888");
        assert_eq!(rows[7].text(), "98765432 x 9 + 0 = 888888888");
        assert_eq!(rows[8].text(), "987654321 x 9 - 1 = 8888888888");
        assert_eq!(rows[9].text(), "9876543210 x 9 - 2 = 88888888888");
        assert!(game_nines(0).is_err());
        assert!(game_nines(11).is_err());
    }

    #[test]
    fn repunit_rows() {
        let rows = game_repunits(9).unwrap();
        assert!(rows.iter().all(|r| r.equal));
        assert_eq!(rows[0].text(), "1 x 1 = 1");
        assert_eq!(rows[2].text(), "111 x 111 = 12321");
        assert_eq!(rows[4].text(), "11111 x 11111 = 123454321");
        assert_eq!(rows[8].text(), "111111111 x 111111111 = 12345678987654321");
        assert!(game_repunits(10).is_err());
    }

    #[test]
    fn table_is_centred() {
        let table = render_game_table(&game_nines(2).unwrap());
        assert_eq!(table, " 9 x 9 + 7 = 88\n98 x 9 + 6 = 888\n");
    }
}
