//! `minrem`: minimal-remainder continued fractions, Stern–Brocot level
//! sets and the limit distribution `F` from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::OutputMode;

#[derive(Debug, Parser)]
#[command(name = "minrem", version, about, max_term_width = 100)]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write tabular output as CSV to this file.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "json")]
    csv: Option<PathBuf>,

    /// Bits of precision for decimal renderings and series truncation.
    #[arg(long, global = true, value_name = "BITS", default_value_t = 64,
          value_parser = clap::value_parser!(u32).range(8..))]
    prec: u32,

    /// Largest level index accepted without --force.
    #[arg(long, global = true, value_name = "N", default_value_t = 18,
          value_parser = clap::value_parser!(u32).range(1..))]
    max_level: u32,

    /// Allow level indices above --max-level.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// ordinary: a0 + 1/(a1 + 1/(a2 + ...))
    Ocf,
    /// regular reduced: a0 - 1/(a1 - 1/(a2 - ...))
    Rrcf,
    /// minimal remainders: a0 + e1/(a1 + e2/(a2 + ...))
    Mrcf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    X,
    Z,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Function {
    F,
    Qmark,
    Glambda,
    Kappa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Recurrence,
    Functional,
    Ratios,
    Oracle,
    Monotone,
    Conversion,
    Qmark,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand NUM/DEN as a continued fraction.
    Expand {
        #[arg(allow_hyphen_values = true)]
        num: String,
        #[arg(allow_hyphen_values = true)]
        den: String,
        #[arg(value_enum)]
        form: Form,
    },
    /// Convert an ordinary CF ("a0; a1, a2, ...") to minimal remainders.
    Convert { cf: String },
    /// Convergents of a minimal-remainder CF ("a0; +1/a1, -1/a2, ...").
    Convergents { cf: String },
    /// Sorted level set as CSV: level,p,q,S,x_float.
    Levels {
        #[arg(value_enum, ignore_case = true)]
        set: SetKind,
        n: u32,
    },
    /// Counts table n,X,Y,Z for n = 1..=N.
    Counts { n: u32 },
    /// Evaluate F, ?, g_lambda or kappa at NUM/DEN.
    Eval {
        #[arg(value_enum, ignore_case = true)]
        function: Function,
        #[arg(allow_hyphen_values = true)]
        num: String,
        #[arg(allow_hyphen_values = true)]
        den: String,
        /// Parameter of g_lambda, in (0, 1).
        #[arg(long, value_name = "L")]
        lambda_real: Option<f64>,
        /// Parameter of kappa, in (0, 1).
        #[arg(long, value_name = "A")]
        alpha: Option<f64>,
        /// Also print the exact value of F in the basis 1, λ, λ².
        #[arg(long)]
        exact: bool,
    },
    /// Empirical distribution #{ξ ∈ Z_N : ξ <= x}/Z_N next to F(x).
    Emp {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        num: String,
        #[arg(allow_hyphen_values = true)]
        den: String,
    },
    /// Run an identity suite up to MAX_N (a denominator bound for conversion).
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        max_n: u32,
    },
    /// Mediant-ray difference quotients of F at NUM/DEN as CSV: k,y_k,F,d_k.
    Deriv {
        num: String,
        den: String,
        #[arg(value_enum)]
        side: SideArg,
        kmax: u32,
    },
    /// Ratio trace G_n along the Stern–Brocot bracketing of a minimal CF.
    Gseq { cf: String, depth: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = match (&cli.csv, cli.json) {
        (Some(path), _) => OutputMode::CsvFile(path.clone()),
        (None, true) => OutputMode::Json,
        (None, false) => OutputMode::Text,
    };
    let cfg = commands::Config {
        mode,
        prec: cli.prec,
        max_level: cli.max_level,
        force: cli.force,
    };
    match commands::run(cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.is_verify_failure() {
                eprintln!("minrem: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
