//! `pastrev`: command-line front end.
//!
//! Exit status: 0 success, 1 verification failure, 2 parse error,
//! 3 domain error.

mod cmd;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pastrev_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "pastrev",
    version,
    about = "Exact Pasting and Reversing of polynomials, numerals and differential operators"
)]
pub struct Cli {
    /// Output format. `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub noun: Noun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Noun {
    /// Scalars in Q(i).
    Field {
        #[command(subcommand)]
        verb: cmd::FieldVerb,
    },
    /// Polynomials in x (or z) over Q(i).
    Poly {
        #[command(subcommand)]
        verb: cmd::PolyVerb,
    },
    /// Base-B numerals.
    Nat {
        /// Numeral base, 2 to 36.
        #[arg(long, global = true, default_value_t = 10)]
        base: u32,
        #[command(subcommand)]
        verb: cmd::NatVerb,
    },
    /// Linear differential operators in D.
    Op {
        #[command(subcommand)]
        verb: cmd::OpVerb,
    },
    /// Chebyshev polynomials and the palindromic reduction.
    Cheb {
        #[command(subcommand)]
        verb: cmd::ChebVerb,
    },
    /// Run the property suite.
    Verify(cmd::VerifyArgs),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 1,
        Error::Parse { .. } => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default = if matches!(cli.noun, Noun::Verify(_)) {
        Format::Json
    } else {
        Format::Text
    };
    let format = cli.format.unwrap_or(default);
    match cmd::dispatch(cli.noun) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text_with_newline()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                ),
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
