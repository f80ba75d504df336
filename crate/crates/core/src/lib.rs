//! Exact Pasting (`⋄`) and Reversing (`~`) over polynomials, base-B numerals
//! and linear differential operators, together with a seeded property
//! harness that checks their algebraic laws.

pub mod cheb;
pub mod diffop;
pub mod error;
pub mod field;
pub mod natnum;
pub mod poly;
pub mod propcheck;
pub mod text;

pub use error::{Error, Result};
