//! Recursive-descent parser shared by the polynomial, operator,
//! exp-polynomial and rational-function grammars.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power (('*' | '/' | <juxtaposition>) power)*
//! power  := atom ['^' integer]
//! atom   := integer | 'i' | variable | 'D' | 'exp' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Juxtaposition means multiplication (`2x`, `1/2 x`, `(2+i)x`), except next
//! to `D`, which always needs an explicit `*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diffop::{DiffOp, ExpPoly};
use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational, RationalFunc};
use crate::poly::Poly;

type GQ = GaussianRational;
type CPoly = Poly<GQ>;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Letter(char),
    Exp,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(at, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut end = at;
            while let Some(&(i, c)) = it.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + c.len_utf8();
                it.next();
            }
            let n: BigInt = text[at..end].parse().expect("ascii digits");
            toks.push((Tok::Num(n), at));
            continue;
        }
        if text[at..].starts_with("exp") {
            toks.push((Tok::Exp, at));
            for _ in 0..3 {
                it.next();
            }
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '∂' => Tok::Letter('D'),
            c if c.is_ascii_alphabetic() => Tok::Letter(c),
            c => return Err(Error::parse(at, format!("unexpected character `{c}`"))),
        };
        toks.push((tok, at));
        it.next();
    }
    toks.push((Tok::Eof, text.len()));
    Ok(toks)
}

#[derive(Debug, Clone)]
enum Node {
    Num(BigInt),
    Letter(char),
    Exp(Box<Ast>),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

#[derive(Debug, Clone)]
struct Ast {
    node: Node,
    at: usize,
}

impl Ast {
    fn is_d(&self) -> bool {
        match &self.node {
            Node::Letter('D') => true,
            Node::Pow(base, _) => base.is_d(),
            _ => false,
        }
    }

    fn mentions(&self, letter: char) -> bool {
        match &self.node {
            Node::Num(_) => false,
            Node::Letter(c) => *c == letter,
            Node::Exp(a) | Node::Neg(a) | Node::Pow(a, _) => a.mentions(letter),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.mentions(letter) || b.mentions(letter)
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(Error::parse(self.at(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let at = self.at();
        let mut lhs = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                let t = self.term()?;
                Ast {
                    node: Node::Neg(Box::new(t)),
                    at,
                }
            }
            _ => self.term()?,
        };
        loop {
            let at = self.at();
            let node = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    Node::Add(Box::new(lhs), Box::new(self.term()?))
                }
                Tok::Minus => {
                    self.bump();
                    Node::Sub(Box::new(lhs), Box::new(self.term()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Ast { node, at };
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.power()?;
        loop {
            let at = self.at();
            let node = match self.peek() {
                Tok::Star => {
                    self.bump();
                    Node::Mul(Box::new(lhs), Box::new(self.power()?))
                }
                Tok::Slash => {
                    self.bump();
                    Node::Div(Box::new(lhs), Box::new(self.power()?))
                }
                Tok::Letter(_) | Tok::Exp | Tok::LParen | Tok::Num(_) => {
                    if matches!(self.peek(), Tok::Num(_)) {
                        return Err(Error::parse(at, "missing operator before number"));
                    }
                    if matches!(self.peek(), Tok::Letter('D')) || lhs.is_d() {
                        return Err(Error::parse(at, "`D` needs an explicit `*`"));
                    }
                    Node::Mul(Box::new(lhs), Box::new(self.power()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Ast { node, at };
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let at = self.at();
        self.bump();
        match self.bump() {
            (Tok::Num(n), nat) => {
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::parse(nat, "exponent too large"))?;
                Ok(Ast {
                    node: Node::Pow(Box::new(base), e),
                    at,
                })
            }
            (_, nat) => Err(Error::parse(nat, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let (tok, at) = self.bump();
        let node = match tok {
            Tok::Num(n) => Node::Num(n),
            Tok::Letter(c) => Node::Letter(c),
            Tok::Exp => {
                self.expect(Tok::LParen, "`(` after exp")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Node::Exp(Box::new(inner))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(inner);
            }
            Tok::Eof => return Err(Error::parse(at, "unexpected end of input")),
            _ => return Err(Error::parse(at, "expected a number, variable or `(`")),
        };
        Ok(Ast { node, at })
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(Error::parse(p.at(), "unexpected trailing input"));
    }
    Ok(ast)
}

/// Which variable letters are legal, and which one has been seen.
struct Vars {
    allowed: &'static [char],
    seen: Option<char>,
}

impl Vars {
    fn check(&mut self, c: char, at: usize) -> Result<()> {
        if !self.allowed.contains(&c) {
            return Err(Error::parse(at, format!("unknown variable `{c}`")));
        }
        match self.seen {
            Some(v) if v != c => Err(Error::parse(at, format!("mixed variables `{v}` and `{c}`"))),
            _ => {
                self.seen = Some(c);
                Ok(())
            }
        }
    }
}

/// An algebra the parser can evaluate into.
trait Algebra: Sized + Clone + One {
    fn number(n: BigInt) -> Self;
    fn imag(at: usize) -> Result<Self>;
    fn var(at: usize) -> Result<Self>;
    fn d(at: usize) -> Result<Self>;
    fn exp(arg: CPoly, at: usize) -> Result<Self>;
    fn plus(self, rhs: Self) -> Self;
    fn minus(self, rhs: Self) -> Self;
    fn times(self, rhs: Self) -> Self;
    fn negate(self) -> Self;
    fn divide(self, rhs: Self, at: usize) -> Result<Self>;
}

fn eval<A: Algebra>(ast: &Ast, vars: &mut Vars) -> Result<A> {
    Ok(match &ast.node {
        Node::Num(n) => A::number(n.clone()),
        Node::Letter('i') => A::imag(ast.at)?,
        Node::Letter('D') => A::d(ast.at)?,
        Node::Letter(c) => {
            vars.check(*c, ast.at)?;
            A::var(ast.at)?
        }
        Node::Exp(arg) => {
            let s: CPoly = eval(arg, vars)?;
            A::exp(s, ast.at)?
        }
        Node::Neg(a) => eval::<A>(a, vars)?.negate(),
        Node::Add(a, b) => eval::<A>(a, vars)?.plus(eval(b, vars)?),
        Node::Sub(a, b) => eval::<A>(a, vars)?.minus(eval(b, vars)?),
        Node::Mul(a, b) => eval::<A>(a, vars)?.times(eval(b, vars)?),
        Node::Div(a, b) => eval::<A>(a, vars)?.divide(eval(b, vars)?, b.at)?,
        Node::Pow(a, e) => {
            let base: A = eval(a, vars)?;
            (0..*e).fold(A::one(), |acc, _| acc.times(base.clone()))
        }
    })
}

fn constant_divisor(c: Option<GQ>, at: usize) -> Result<GQ> {
    let c = c.ok_or_else(|| Error::parse(at, "can only divide by a constant"))?;
    c.inv().ok_or_else(|| Error::parse(at, "division by zero"))
}

fn poly_constant(p: &CPoly) -> Option<GQ> {
    p.is_constant().then(|| p.constant_term())
}

impl Algebra for CPoly {
    fn number(n: BigInt) -> Self {
        Poly::constant(GQ::real(Rational::from_integer(n)))
    }
    fn imag(_: usize) -> Result<Self> {
        Ok(Poly::constant(GQ::i()))
    }
    fn var(_: usize) -> Result<Self> {
        Ok(Poly::x())
    }
    fn d(at: usize) -> Result<Self> {
        Err(Error::parse(at, "`D` is not allowed in a polynomial"))
    }
    fn exp(_: CPoly, at: usize) -> Result<Self> {
        Err(Error::parse(at, "`exp` is not allowed in a polynomial"))
    }
    fn plus(self, rhs: Self) -> Self {
        &self + &rhs
    }
    fn minus(self, rhs: Self) -> Self {
        &self - &rhs
    }
    fn times(self, rhs: Self) -> Self {
        &self * &rhs
    }
    fn negate(self) -> Self {
        -self
    }
    fn divide(self, rhs: Self, at: usize) -> Result<Self> {
        Ok(self.scale(&constant_divisor(poly_constant(&rhs), at)?))
    }
}

type POp = DiffOp<CPoly>;

impl Algebra for POp {
    fn number(n: BigInt) -> Self {
        DiffOp::constant(CPoly::number(n))
    }
    fn imag(_: usize) -> Result<Self> {
        Ok(DiffOp::constant(Poly::constant(GQ::i())))
    }
    fn var(_: usize) -> Result<Self> {
        Ok(DiffOp::constant(Poly::x()))
    }
    fn d(_: usize) -> Result<Self> {
        Ok(DiffOp::d())
    }
    fn exp(_: CPoly, at: usize) -> Result<Self> {
        Err(Error::parse(at, "`exp` is not allowed in an operator"))
    }
    fn plus(self, rhs: Self) -> Self {
        &self + &rhs
    }
    fn minus(self, rhs: Self) -> Self {
        &self - &rhs
    }
    fn times(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
    fn negate(self) -> Self {
        -self
    }
    fn divide(self, rhs: Self, at: usize) -> Result<Self> {
        let c = match rhs.coeffs() {
            [] => Some(GQ::zero()),
            [c0] => poly_constant(c0),
            _ => None,
        };
        let inv = Poly::constant(constant_divisor(c, at)?);
        Ok(DiffOp::new(
            self.coeffs().iter().map(|a| a * &inv).collect(),
        ))
    }
}

impl Algebra for ExpPoly {
    fn number(n: BigInt) -> Self {
        ExpPoly::poly(CPoly::number(n))
    }
    fn imag(_: usize) -> Result<Self> {
        Ok(ExpPoly::poly(Poly::constant(GQ::i())))
    }
    fn var(_: usize) -> Result<Self> {
        Ok(ExpPoly::poly(Poly::x()))
    }
    fn d(at: usize) -> Result<Self> {
        Err(Error::parse(at, "`D` is not allowed in a function"))
    }
    fn exp(arg: CPoly, _: usize) -> Result<Self> {
        Ok(ExpPoly::exp(arg))
    }
    fn plus(self, rhs: Self) -> Self {
        self + rhs
    }
    fn minus(self, rhs: Self) -> Self {
        self - rhs
    }
    fn times(self, rhs: Self) -> Self {
        self * rhs
    }
    fn negate(self) -> Self {
        -self
    }
    fn divide(self, rhs: Self, at: usize) -> Result<Self> {
        let c = match rhs.terms() {
            [] => Some(GQ::zero()),
            [(q, s)] if s.is_zero() => poly_constant(q),
            _ => None,
        };
        Ok(self.mul_poly(&Poly::constant(constant_divisor(c, at)?)))
    }
}

impl Algebra for RationalFunc {
    fn number(n: BigInt) -> Self {
        RationalFunc::from_rational(&Rational::from_integer(n))
    }
    fn imag(at: usize) -> Result<Self> {
        Err(Error::parse(
            at,
            "`i` is not allowed in a rational function over ℚ",
        ))
    }
    fn var(_: usize) -> Result<Self> {
        Ok(RationalFunc::from_poly(Poly::x()))
    }
    fn d(at: usize) -> Result<Self> {
        Err(Error::parse(
            at,
            "`D` is not allowed in a rational function",
        ))
    }
    fn exp(_: CPoly, at: usize) -> Result<Self> {
        Err(Error::parse(
            at,
            "`exp` is not allowed in a rational function",
        ))
    }
    fn plus(self, rhs: Self) -> Self {
        self + rhs
    }
    fn minus(self, rhs: Self) -> Self {
        self - rhs
    }
    fn times(self, rhs: Self) -> Self {
        self * rhs
    }
    fn negate(self) -> Self {
        -self
    }
    fn divide(self, rhs: Self, at: usize) -> Result<Self> {
        self.checked_div(&rhs)
            .map_err(|_| Error::parse(at, "division by zero"))
    }
}

/// Parses a polynomial in `x` or `z` with coefficients in ℚ(i).
pub fn parse_poly(text: &str) -> Result<CPoly> {
    let ast = parse_ast(text)?;
    eval(
        &ast,
        &mut Vars {
            allowed: &['x', 'z'],
            seen: None,
        },
    )
}

/// Parses a Gaussian rational such as `3-2i` or `1/2`.
pub fn parse_gaussian(text: &str) -> Result<GQ> {
    let ast = parse_ast(text)?;
    let p: CPoly = eval(
        &ast,
        &mut Vars {
            allowed: &[],
            seen: None,
        },
    )?;
    Ok(p.constant_term())
}

/// Parses an exp-polynomial such as `x*exp(2x) - exp(-x^2/2)`.
pub fn parse_exp_poly(text: &str) -> Result<ExpPoly> {
    let ast = parse_ast(text)?;
    eval(
        &ast,
        &mut Vars {
            allowed: &['x'],
            seen: None,
        },
    )
}

/// Parses a rational function over ℚ, e.g. `(x)/(x+1)`.
pub fn parse_rational_func(text: &str) -> Result<RationalFunc> {
    let ast = parse_ast(text)?;
    eval(
        &ast,
        &mut Vars {
            allowed: &['x'],
            seen: None,
        },
    )
}

/// A parsed operator, in the constants ring when the text never mentions
/// `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedOp {
    Constants(DiffOp<GQ>),
    Polynomial(DiffOp<CPoly>),
}

impl ParsedOp {
    pub fn into_polynomial(self) -> DiffOp<CPoly> {
        match self {
            ParsedOp::Constants(op) => op.map(|c| Poly::constant(c.clone())),
            ParsedOp::Polynomial(op) => op,
        }
    }

    pub fn is_constants(&self) -> bool {
        matches!(self, ParsedOp::Constants(_))
    }
}

/// Parses an operator in `D` with polynomial coefficients, e.g.
/// `x*D^3 + 2*D^2 + 2*D + x`.
pub fn parse_op(text: &str) -> Result<ParsedOp> {
    let ast = parse_ast(text)?;
    let op: POp = eval(
        &ast,
        &mut Vars {
            allowed: &['x'],
            seen: None,
        },
    )?;
    if ast.mentions('x') {
        Ok(ParsedOp::Polynomial(op))
    } else {
        Ok(ParsedOp::Constants(op.to_constants()?))
    }
}
