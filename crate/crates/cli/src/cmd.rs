use clap::{Args, Subcommand, ValueEnum};
use serde_json::{json, Value};

use num_traits::Zero;
use pastrev_core::cheb::{
    cheb_t, cheb_to_palindromic, palindromic_to_cheb, printed_reduction, ChebExpansion,
};
use pastrev_core::diffop::{kernel_exponents, DiffOp, DiffRing, ExpPoly};
use pastrev_core::field::{field_arith, ArithOp, Field, GaussianRational};
use pastrev_core::natnum::{
    check_eleven, cipher_nat, game_nines, game_repunits, is_palindrome, paste_fold_nat, paste_nat,
    render_game_table, reverse_nat, Numeral,
};
use pastrev_core::poly::{FactoredLinear, Poly};
use pastrev_core::propcheck::{registry, run_all, suite_passed, RunConfig, Status};
use pastrev_core::text::{parse_exp_poly, parse_gaussian, parse_op, parse_poly, ParsedOp};
use pastrev_core::{Error, Result};

use crate::Noun;

type GQ = GaussianRational;
type CPoly = Poly<GQ>;

/// Rendered result of one command.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: u8,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            status: 0,
        }
    }

    pub fn text_with_newline(&self) -> String {
        if self.text.ends_with('\n') {
            self.text.clone()
        } else {
            format!("{}\n", self.text)
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum FieldVerb {
    /// `a OP b` with OP one of + - * /.
    Arith {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Complex conjugate.
    Conj {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Multiplicative inverse.
    Inv {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    /// Linear factor `b x - a`; repeat for each factor.
    #[arg(long = "factor", allow_hyphen_values = true)]
    factors: Vec<String>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    unit: String,
}

#[derive(Subcommand, Debug)]
pub enum PolyVerb {
    /// Reversing; requires a nonzero constant term.
    Reverse {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Plain coefficient flip, without the constant-term check.
    Flip {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Pasting `P1 <> P2 <> ...`, folded from the left.
    Paste {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        ps: Vec<String>,
    },
    Classify {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Number of coefficients, degree + 1.
    Cipher {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    Eval {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        at: String,
    },
    Add {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    Sub {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Quotient and remainder.
    Divrem {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    Gcd {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Conjugate reciprocal `P*`.
    Reciprocal {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    Derivative {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Whether `x - c` divides P.
    DividesAt {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Multiply out a factored form.
    Expand(FactorArgs),
    /// Reversing of a factored form, factor by factor.
    ReverseFactored(FactorArgs),
    /// Reciprocal root pairing of a factored (anti)palindromic polynomial.
    Pair(FactorArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Game {
    Nines,
    Repunits,
}

#[derive(Subcommand, Debug)]
pub enum NatVerb {
    Reverse {
        n: String,
    },
    Cipher {
        n: String,
    },
    /// Pasting `n1 <> n2 <> ...`, folded from the left.
    Paste {
        #[arg(required = true, num_args = 2..)]
        ns: Vec<String>,
    },
    Palindrome {
        n: String,
    },
    /// Divisibility by base + 1.
    Eleven {
        n: String,
    },
    /// Digit-game identity tables (base 10).
    Games {
        #[arg(value_enum)]
        game: Game,
        #[arg(long, default_value_t = 9)]
        rows: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum OpVerb {
    Reverse {
        #[arg(allow_hyphen_values = true)]
        l: String,
    },
    /// Pasting `L1 <> L2 <> ...`, folded from the left.
    Paste {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        ls: Vec<String>,
    },
    Classify {
        #[arg(allow_hyphen_values = true)]
        l: String,
    },
    Cipher {
        #[arg(allow_hyphen_values = true)]
        l: String,
    },
    Add {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    Sub {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Composition `L R`.
    Mul {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Apply to an exp-polynomial such as `x*exp(2x)`.
    Apply {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Right division by `D + c`.
    Divide {
        #[arg(allow_hyphen_values = true)]
        l: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
    },
    /// Characteristic polynomial of a constant-coefficient operator.
    Charpoly {
        #[arg(allow_hyphen_values = true)]
        l: String,
    },
    /// Kernel exponents of a factored constant-coefficient operator.
    Kernel(FactorArgs),
    /// Log-derivative product for an operator of cipher 2.
    Logderiv {
        #[arg(allow_hyphen_values = true)]
        l: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ChebVerb {
    /// Chebyshev polynomial `T_n(w)`.
    T { n: usize },
    /// Expansion of a palindromic polynomial of even degree.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        p: String,
        /// Use `c_0 = a_n` instead of `a_n/2` (known to be wrong).
        #[arg(long)]
        printed: bool,
    },
    /// Palindromic polynomial from coefficients `c_0 c_1 ... c_n`.
    Expand {
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Compare `P(z)` with both reductions evaluated at `z`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Case count for the standard randomized properties.
    #[arg(long)]
    cases: Option<usize>,
    /// Comma-separated property ids.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Record wall-clock milliseconds per property.
    #[arg(long)]
    timings: bool,
    /// List registered properties and exit.
    #[arg(long)]
    list: bool,
}

pub fn dispatch(noun: Noun) -> Result<Output> {
    match noun {
        Noun::Field { verb } => field(verb),
        Noun::Poly { verb } => poly(verb),
        Noun::Nat { base, verb } => nat(verb, base),
        Noun::Op { verb } => op(verb),
        Noun::Cheb { verb } => cheb(verb),
        Noun::Verify(args) => verify(args),
    }
}

fn scalar_out(z: &GQ) -> Output {
    Output::new(z.to_string(), json!({ "value": z.to_string() }))
}

fn field(verb: FieldVerb) -> Result<Output> {
    match verb {
        FieldVerb::Arith { a, op, b } => {
            let op = match op.as_str() {
                "+" | "add" => ArithOp::Add,
                "-" | "sub" => ArithOp::Sub,
                "*" | "x" | "mul" => ArithOp::Mul,
                "/" | "div" => ArithOp::Div,
                other => {
                    return Err(Error::Parse {
                        offset: 0,
                        message: format!("unknown operator `{other}`"),
                    })
                }
            };
            Ok(scalar_out(&field_arith(
                &parse_gaussian(&a)?,
                &parse_gaussian(&b)?,
                op,
            )?))
        }
        FieldVerb::Conj { z } => Ok(scalar_out(&parse_gaussian(&z)?.conj())),
        FieldVerb::Inv { z } => Ok(scalar_out(
            &parse_gaussian(&z)?.inv().ok_or(Error::DivisionByZero)?,
        )),
    }
}

/// `z` when the text uses `z` and not `x`.
fn var_of(text: &str) -> char {
    if text.contains('z') && !text.contains('x') {
        'z'
    } else {
        'x'
    }
}

fn poly_json(p: &CPoly, var: char) -> Value {
    json!({
        "text": p.render(var),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn poly_out(p: &CPoly, var: char) -> Output {
    Output::new(p.render(var), poly_json(p, var))
}

fn factored(args: &FactorArgs) -> Result<FactoredLinear<GQ>> {
    let unit = parse_gaussian(&args.unit)?;
    let factors = args
        .factors
        .iter()
        .map(|f| {
            let p = parse_poly(f)?;
            if p.degree().unwrap_or(0) > 1 || p.is_zero() {
                return Err(Error::Domain(format!(
                    "`{f}` is not a linear factor b x - a"
                )));
            }
            Ok((p.coeff(1), -p.coeff(0)))
        })
        .collect::<Result<Vec<_>>>()?;
    FactoredLinear::new(unit, factors)
}

fn poly(verb: PolyVerb) -> Result<Output> {
    let binary = |p: &str, q: &str, f: fn(&CPoly, &CPoly) -> CPoly| -> Result<Output> {
        Ok(poly_out(&f(&parse_poly(p)?, &parse_poly(q)?), var_of(p)))
    };
    match verb {
        PolyVerb::Reverse { p } => Ok(poly_out(&parse_poly(&p)?.reverse()?, var_of(&p))),
        PolyVerb::Flip { p } => Ok(poly_out(
            &parse_poly(&p)?.raw_coefficient_flip()?,
            var_of(&p),
        )),
        PolyVerb::Paste { ps } => {
            let polys = ps
                .iter()
                .map(|p| parse_poly(p))
                .collect::<Result<Vec<_>>>()?;
            Ok(poly_out(&Poly::paste_fold(&polys)?, var_of(&ps[0])))
        }
        PolyVerb::Classify { p } => {
            let s = parse_poly(&p)?.classify()?;
            Ok(Output::new(
                s.to_string(),
                json!({ "symmetry": s.to_string() }),
            ))
        }
        PolyVerb::Cipher { p } => {
            let c = parse_poly(&p)?.cipher()?;
            Ok(Output::new(c.to_string(), json!({ "cipher": c })))
        }
        PolyVerb::Eval { p, at } => Ok(scalar_out(&parse_poly(&p)?.eval(&parse_gaussian(&at)?))),
        PolyVerb::Add { p, q } => binary(&p, &q, |a, b| a + b),
        PolyVerb::Sub { p, q } => binary(&p, &q, |a, b| a - b),
        PolyVerb::Mul { p, q } => binary(&p, &q, |a, b| a * b),
        PolyVerb::Divrem { p, q } => {
            let var = var_of(&p);
            let (quot, rem) = parse_poly(&p)?.div_rem(&parse_poly(&q)?)?;
            Ok(Output::new(
                format!(
                    "quotient: {}\nremainder: {}",
                    quot.render(var),
                    rem.render(var)
                ),
                json!({ "quotient": poly_json(&quot, var), "remainder": poly_json(&rem, var) }),
            ))
        }
        PolyVerb::Gcd { p, q } => binary(&p, &q, |a, b| a.gcd(b)),
        PolyVerb::Reciprocal { p } => Ok(poly_out(&parse_poly(&p)?.reciprocal_conj()?, var_of(&p))),
        PolyVerb::Derivative { p } => Ok(poly_out(&parse_poly(&p)?.derivative(), var_of(&p))),
        PolyVerb::DividesAt { p, c } => Ok(bool_out(
            "divides",
            parse_poly(&p)?.divides_at(&parse_gaussian(&c)?),
        )),
        PolyVerb::Expand(args) => Ok(poly_out(&factored(&args)?.expand(), 'x')),
        PolyVerb::ReverseFactored(args) => {
            let rf = factored(&args)?.reverse_factored()?;
            let factors: Vec<String> = rf
                .factors()
                .iter()
                .map(|(b, a)| Poly::linear(b.clone(), a.clone()).render('x'))
                .collect();
            let text = format!(
                "unit: {}\nfactors: {}\nexpanded: {}",
                rf.unit(),
                factors.join(", "),
                rf.expand()
            );
            Ok(Output::new(
                text,
                json!({ "unit": rf.unit().to_string(), "factors": factors, "expanded": poly_json(&rf.expand(), 'x') }),
            ))
        }
        PolyVerb::Pair(args) => {
            let rp = factored(&args)?.root_pairing()?;
            let pairs: Vec<[String; 2]> = rp
                .pairs
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect();
            let unpaired: Vec<String> = rp.unpaired.iter().map(ToString::to_string).collect();
            let shown: Vec<String> = pairs.iter().map(|[a, b]| format!("({a}, {b})")).collect();
            let text = [
                format!("symmetry: {}", rp.symmetry),
                format!("pairs: {}", shown.join(" ")),
                format!("unpaired: {}", unpaired.join(" ")),
            ]
            .map(|l| l.trim_end().to_string())
            .join("\n");
            Ok(Output::new(
                text,
                json!({ "symmetry": rp.symmetry.to_string(), "pairs": pairs, "unpaired": unpaired }),
            ))
        }
    }
}

fn numeral_out(n: &Numeral) -> Output {
    Output::new(
        n.to_string(),
        json!({ "digits": n.to_string(), "base": n.base(), "value": n.value().to_string() }),
    )
}

fn bool_out(key: &str, b: bool) -> Output {
    Output::new(b.to_string(), json!({ key: b }))
}

fn nat(verb: NatVerb, base: u32) -> Result<Output> {
    let parse = |s: &str| Numeral::parse(s, base);
    match verb {
        NatVerb::Reverse { n } => Ok(numeral_out(&reverse_nat(&parse(&n)?))),
        NatVerb::Cipher { n } => {
            let c = cipher_nat(&parse(&n)?);
            Ok(Output::new(c.to_string(), json!({ "cipher": c })))
        }
        NatVerb::Paste { ns } => {
            let nums = ns.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
            let first = paste_nat(&nums[0], &nums[1])?;
            let mut rest = vec![first];
            rest.extend(nums[2..].iter().cloned());
            Ok(numeral_out(&paste_fold_nat(&rest)?))
        }
        NatVerb::Palindrome { n } => Ok(bool_out("palindrome", is_palindrome(&parse(&n)?))),
        NatVerb::Eleven { n } => Ok(bool_out("divisible", check_eleven(&parse(&n)?))),
        NatVerb::Games { game, rows } => {
            let table = match game {
                Game::Nines => game_nines(rows)?,
                Game::Repunits => game_repunits(rows)?,
            };
            let mut out = Output::new(
                render_game_table(&table),
                serde_json::to_value(&table).expect("serializable"),
            );
            if table.iter().any(|r| !r.equal) {
                out.status = 1;
            }
            Ok(out)
        }
    }
}

enum AnyOp {
    Constants(DiffOp<GQ>),
    Polynomial(DiffOp<CPoly>),
}

fn any_op(text: &str) -> Result<AnyOp> {
    Ok(match parse_op(text)? {
        ParsedOp::Constants(op) => AnyOp::Constants(op),
        ParsedOp::Polynomial(op) => AnyOp::Polynomial(op),
    })
}

fn promote(p: ParsedOp) -> DiffOp<CPoly> {
    p.into_polynomial()
}

fn op_json<R: DiffRing>(op: &DiffOp<R>, ring: &str) -> Value {
    json!({
        "text": op.render(),
        "ring": ring,
        "coeffs": op.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn op_out<R: DiffRing>(op: &DiffOp<R>, ring: &str) -> Output {
    Output::new(op.render(), op_json(op, ring))
}

const CONST: &str = "constants";
const POLY: &str = "polynomial";

/// Applies `f` in the constants ring when both operands live there, and
/// in the polynomial ring otherwise.
fn op_binary(
    l: &str,
    r: &str,
    fc: fn(&DiffOp<GQ>, &DiffOp<GQ>) -> Result<DiffOp<GQ>>,
    fp: fn(&DiffOp<CPoly>, &DiffOp<CPoly>) -> Result<DiffOp<CPoly>>,
) -> Result<Output> {
    match (parse_op(l)?, parse_op(r)?) {
        (ParsedOp::Constants(a), ParsedOp::Constants(b)) => Ok(op_out(&fc(&a, &b)?, CONST)),
        (a, b) => Ok(op_out(&fp(&promote(a), &promote(b))?, POLY)),
    }
}

fn op_fold(ls: &[String]) -> Result<Output> {
    let parsed = ls.iter().map(|l| parse_op(l)).collect::<Result<Vec<_>>>()?;
    if parsed.iter().all(ParsedOp::is_constants) {
        let ops: Vec<DiffOp<GQ>> = parsed
            .into_iter()
            .map(|p| match p {
                ParsedOp::Constants(op) => op,
                ParsedOp::Polynomial(_) => unreachable!("all constants"),
            })
            .collect();
        let out = ops[1..]
            .iter()
            .try_fold(ops[0].clone(), |acc, o| acc.paste(o))?;
        Ok(op_out(&out, CONST))
    } else {
        let ops: Vec<DiffOp<CPoly>> = parsed.into_iter().map(promote).collect();
        let out = ops[1..]
            .iter()
            .try_fold(ops[0].clone(), |acc, o| acc.paste(o))?;
        Ok(op_out(&out, POLY))
    }
}

fn divide<R: DiffRing>(l: &DiffOp<R>, c: R, ring: &str) -> Result<Output> {
    let (s, r) = l.right_divide_monic_linear(&c)?;
    Ok(Output::new(
        format!("quotient: {}\nremainder: {}", s.render(), r),
        json!({ "quotient": op_json(&s, ring), "remainder": r.to_string() }),
    ))
}

fn op(verb: OpVerb) -> Result<Output> {
    macro_rules! unary {
        ($text:expr, |$o:ident, $ring:ident| $body:expr) => {
            match any_op(&$text)? {
                AnyOp::Constants($o) => {
                    let $ring = CONST;
                    $body
                }
                AnyOp::Polynomial($o) => {
                    let $ring = POLY;
                    $body
                }
            }
        };
    }
    match verb {
        OpVerb::Reverse { l } => unary!(l, |o, ring| Ok(op_out(&o.reverse()?, ring))),
        OpVerb::Paste { ls } => op_fold(&ls),
        OpVerb::Classify { l } => unary!(l, |o, _ring| {
            let s = o.classify()?;
            Ok(Output::new(
                s.to_string(),
                json!({ "symmetry": s.to_string() }),
            ))
        }),
        OpVerb::Cipher { l } => unary!(l, |o, _ring| {
            let c = o.cipher()?;
            Ok(Output::new(c.to_string(), json!({ "cipher": c })))
        }),
        OpVerb::Add { l, r } => op_binary(&l, &r, |a, b| Ok(a + b), |a, b| Ok(a + b)),
        OpVerb::Sub { l, r } => op_binary(&l, &r, |a, b| Ok(a - b), |a, b| Ok(a - b)),
        OpVerb::Mul { l, r } => op_binary(&l, &r, |a, b| Ok(a.compose(b)), |a, b| Ok(a.compose(b))),
        OpVerb::Apply { l, f } => {
            let f = parse_exp_poly(&f)?;
            let out = unary!(l, |o, _ring| o.apply(&f));
            Ok(Output::new(
                out.to_string(),
                json!({ "value": out.to_string() }),
            ))
        }
        OpVerb::Divide { l, c } => {
            let c = parse_gaussian(&c)?;
            unary!(l, |o, ring| divide(&o, R::from_gaussian(&c), ring))
        }
        OpVerb::Charpoly { l } => match any_op(&l)? {
            AnyOp::Constants(o) => Ok(poly_out(&o.char_poly(), 'λ')),
            AnyOp::Polynomial(_) => Err(Error::RingMismatch(
                "characteristic polynomial needs constant coefficients".into(),
            )),
        },
        OpVerb::Kernel(args) => kernel(&args),
        OpVerb::Logderiv { l } => {
            let ld = unary!(l, |o, _ring| o.log_derivative_product()?);
            Ok(Output::new(
                format!("u1: {}\nu2: {}\nproduct: {}", ld.u1, ld.u2, ld.product),
                json!({ "u1": ld.u1.to_string(), "u2": ld.u2.to_string(), "product": ld.product.to_string() }),
            ))
        }
    }
}

/// Ring elements built from a constant.
trait FromGaussian {
    fn from_gaussian(c: &GQ) -> Self;
}

impl FromGaussian for GQ {
    fn from_gaussian(c: &GQ) -> Self {
        c.clone()
    }
}

impl FromGaussian for CPoly {
    fn from_gaussian(c: &GQ) -> Self {
        Poly::constant(c.clone())
    }
}

use FromGaussian as R;

fn kernel(args: &FactorArgs) -> Result<Output> {
    let f = factored(args)?;
    let l = DiffOp::from_factored(&f);
    let exps = kernel_exponents(&f)?;
    let rev = l.reverse().ok();
    let mut rows = Vec::new();
    let mut lines = vec![format!("L = {}", l.render())];
    if let Some(r) = &rev {
        lines.push(format!("reverse(L) = {}", r.render()));
    }
    for (lambda, m) in &exps {
        for j in 0..*m {
            let w = ExpPoly::monomial_exp(j, lambda.clone());
            if !l.apply(&w).is_zero() {
                return Err(Error::Verification(format!(
                    "{w} is not in the kernel of {}",
                    l.render()
                )));
            }
        }
        let recip = lambda.inv();
        if let (Some(r), Some(inv)) = (&rev, &recip) {
            for j in 0..*m {
                let w = ExpPoly::monomial_exp(j, inv.clone());
                if !r.apply(&w).is_zero() {
                    return Err(Error::Verification(format!(
                        "{w} is not in the kernel of {}",
                        r.render()
                    )));
                }
            }
        }
        let recip_text = recip.as_ref().map(ToString::to_string);
        lines.push(format!(
            "exponent {lambda} (multiplicity {m}); reversed exponent {}",
            recip_text.clone().unwrap_or_else(|| "none".into())
        ));
        rows.push(
            json!({ "exponent": lambda.to_string(), "multiplicity": m, "reversed": recip_text }),
        );
    }
    Ok(Output::new(
        lines.join("\n"),
        json!({
            "operator": op_json(&l, CONST),
            "reversed": rev.as_ref().map(|r| op_json(r, CONST)),
            "exponents": rows,
        }),
    ))
}

fn cheb_out(c: &ChebExpansion<GQ>) -> Output {
    Output::new(
        c.to_string(),
        serde_json::to_value(c.to_json()).expect("serializable"),
    )
}

fn cheb(verb: ChebVerb) -> Result<Output> {
    match verb {
        ChebVerb::T { n } => {
            let t = cheb_t(n);
            let coeffs: Vec<String> = t.coeffs().iter().map(ToString::to_string).collect();
            Ok(Output::new(
                t.render('w'),
                json!({ "n": n, "text": t.render('w'), "coeffs": coeffs }),
            ))
        }
        ChebVerb::Reduce { p, printed } => {
            let p = parse_poly(&p)?;
            let c = if printed {
                printed_reduction(&p)?
            } else {
                palindromic_to_cheb(&p)?
            };
            Ok(cheb_out(&c))
        }
        ChebVerb::Expand { coeffs } => {
            let cs = coeffs
                .iter()
                .map(|c| parse_gaussian(c))
                .collect::<Result<Vec<_>>>()?;
            Ok(poly_out(&cheb_to_palindromic(&ChebExpansion::new(cs)), 'z'))
        }
        ChebVerb::Eval { p, z } => {
            let poly = parse_poly(&p)?;
            let z = parse_gaussian(&z)?;
            let direct = poly.eval(&z);
            let corrected = palindromic_to_cheb(&poly)?.eval_at_z(&z)?;
            let printed = printed_reduction(&poly)?.eval_at_z(&z)?;
            Ok(Output::new(
                format!("P(z) = {direct}\ncorrected = {corrected}\nprinted = {printed}"),
                json!({
                    "direct": direct.to_string(),
                    "corrected": corrected.to_string(),
                    "printed": printed.to_string(),
                    "corrected_matches": corrected == direct,
                    "printed_matches": printed == direct,
                }),
            ))
        }
    }
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Reproduced => "REPRODUCED",
        Status::NotReproduced => "NOT-REPRODUCED",
        Status::Recorded => "RECORDED",
    }
}

fn verify(args: VerifyArgs) -> Result<Output> {
    if args.list {
        let specs = registry();
        let text = specs
            .iter()
            .map(|s| {
                format!(
                    "{:<16} {:<12} {}",
                    s.id,
                    format!("{:?}", s.kind).to_lowercase(),
                    s.anchor
                )
            })
            .collect::<Vec<_>>()
            .join("\n");
        let json = specs
            .iter()
            .map(|s| json!({ "id": s.id, "kind": s.kind, "mode": s.mode, "anchor": s.anchor, "cases": s.default_cases }))
            .collect::<Vec<_>>();
        return Ok(Output::new(text, Value::Array(json)));
    }
    let cfg = RunConfig {
        seed: args.seed,
        cases: args.cases,
        timings: args.timings,
    };
    let filter = (!args.only.is_empty()).then_some(args.only.as_slice());
    let reports = run_all(&cfg, filter)?;
    let passed = suite_passed(&reports);
    let mut lines = Vec::new();
    for r in &reports {
        let millis = r.millis.map(|m| format!(" {m} ms")).unwrap_or_default();
        lines.push(format!(
            "{:<15} {:<16} {:>6} cases{millis}  {}",
            status_label(r.status),
            r.id,
            r.cases,
            r.anchor
        ));
        for f in r.failures.iter().take(3) {
            lines.push(format!(
                "    inputs: {}  expected: {}  got: {}",
                f.inputs, f.expected, f.got
            ));
        }
    }
    lines.push(format!(
        "suite {}",
        if passed { "passed" } else { "FAILED" }
    ));
    let mut out = Output::new(
        lines.join("\n"),
        json!({ "seed": args.seed, "cases": args.cases, "passed": passed, "reports": reports }),
    );
    out.status = if passed { 0 } else { 1 };
    Ok(out)
}
