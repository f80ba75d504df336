//! Text forms for polynomials, operators, exp-polynomials and numerals.
//!
//! Canonical rendering lists terms by descending power, never emits `+-`,
//! and elides unit coefficients. Integer coefficients are juxtaposed with a
//! polynomial variable (`2x^2`); every other coefficient, and every
//! coefficient of `D`, is joined with `*`.

mod parse;

use crate::field::{TermKind, TermText};

pub use parse::{
    parse_exp_poly, parse_gaussian, parse_op, parse_poly, parse_rational_func, ParsedOp,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Joiner {
    /// Integer coefficients sit directly against the variable.
    Implicit,
    /// Always `*`.
    Star,
}

/// Joins `(coefficient, variable part)` terms into a signed sum.
pub(crate) fn render_sum(terms: Vec<(TermText, Option<String>)>, joiner: Joiner) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (tt, var)) in terms.into_iter().enumerate() {
        let piece = match var {
            None => tt.body,
            Some(v) => match tt.kind {
                TermKind::Unit => v,
                TermKind::Integer if joiner == Joiner::Implicit => format!("{}{v}", tt.body),
                TermKind::Integer | TermKind::Other => format!("{}*{v}", tt.body),
                TermKind::Compound => format!("({})*{v}", tt.body),
            },
        };
        if tt.negative {
            out.push('-');
        } else if i > 0 && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    out
}
