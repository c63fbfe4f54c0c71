//! Argument parsing and dispatch for the `cliffdeg` binary.
//!
//! Every invocation produces exactly one JSON document on stdout:
//! `{"subcommand": ..., "verdict": "pass"|"fail"|"error", "payload": ...}`.
//! Exit codes: 0 pass, 2 fail, 1 usage or input error.

mod commands;
mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use commands::Report;

#[derive(Parser, Debug)]
#[command(name = "cliffdeg", version, about = "Exact Clifford-algebra verifications with JSON output")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quadratic forms and even Clifford algebras.
    Form {
        #[command(subcommand)]
        action: FormCommand,
    },
    /// Spinor modules of split forms.
    Spinor {
        #[command(subcommand)]
        action: SpinorCommand,
    },
    /// Clifford-Lipschitz classification.
    Lipschitz {
        #[command(subcommand)]
        action: LipschitzCommand,
    },
    /// Degenerations of even Clifford algebras.
    Degenerate {
        #[command(subcommand)]
        action: DegenerateCommand,
    },
    /// Half-spin restrictions for G2, F4 and C3.
    Plethysm {
        #[command(subcommand)]
        action: PlethysmCommand,
    },
    /// Tuples of matrices up to simultaneous conjugation.
    Localmodel {
        #[command(subcommand)]
        action: LocalModelCommand,
    },
    /// Runs the acceptance suite.
    Selftest(SelftestArgs),
}

/// Where the JSON input comes from.
#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, value_name = "FILE|-")]
    pub input: Option<String>,
    /// Inline JSON input.
    #[arg(long, value_name = "JSON", conflicts_with = "input")]
    pub json: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum FormCommand {
    /// Recovers Q from the bracket table (or from a multiplication tensor).
    Reconstruct {
        #[command(flatten)]
        input: InputArgs,
        /// Dimension for random forms.
        #[arg(long)]
        m: Option<usize>,
        /// Use seeded random forms instead of input.
        #[arg(long, requires = "m")]
        random: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random forms.
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Prints the multiplication tensor of the even Clifford algebra.
    Tensor {
        #[command(flatten)]
        input: InputArgs,
        /// Specialize a family at t = c first.
        #[arg(long, value_name = "c", allow_hyphen_values = true)]
        at: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormType {
    /// Odd dimension 2l+1.
    B,
    /// Even dimension 2l.
    D,
}

#[derive(Subcommand, Debug)]
pub enum SpinorCommand {
    /// Checks that the even Clifford algebra acts as a full matrix algebra.
    Check {
        #[arg(long = "l")]
        l: usize,
        #[arg(long = "type", value_enum, default_value = "b")]
        ty: FormType,
    },
    /// Weights of the spin or half-spin representation.
    Weights {
        #[arg(long = "l")]
        l: usize,
        #[arg(long = "type", value_enum, default_value = "d")]
        ty: FormType,
        #[arg(long, value_parser = ["+", "-"], allow_hyphen_values = true)]
        halfspin: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LipschitzCommand {
    /// Classifies x in Cl_q: {"m", "Q", "x": {"[1,2]": "1", ...}}.
    Test {
        #[command(flatten)]
        input: InputArgs,
        /// Also solve for the infinitesimal Lipschitz elements of the form.
        #[arg(long)]
        infinitesimal: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum DegenerateCommand {
    /// Certifies the fibre at t = c (default 0) as a degeneration of a matrix algebra.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "c", allow_hyphen_values = true)]
        at: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PlethysmCommand {
    /// Decomposes both half-spin restrictions.
    Verify {
        #[arg(value_parser = ["g2", "f4", "c3"])]
        case: String,
        #[arg(long, value_parser = ["+", "-"], allow_hyphen_values = true, default_value = "+")]
        halfspin: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LocalModelCommand {
    /// Whether the tuple generates M_n; {"g", "n", "X", "v"?}.
    Simple {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Trace-of-words comparison; {"T1": tuple, "T2": tuple}.
    Sequiv {
        #[command(flatten)]
        input: InputArgs,
        /// Maximal word length (default n²).
        #[arg(long = "L")]
        max_len: Option<usize>,
        /// Include both fingerprints in the payload.
        #[arg(long)]
        fingerprints: bool,
    },
    /// Centralizer of the tuple inside span(h); {"g", "n", "X", "h": [...] | "sl2"}.
    Centralizer {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    /// Run only these criteria (repeatable).
    #[arg(long = "criterion")]
    pub criteria: Vec<u8>,
}

/// Process-level result: the exit code and the single stdout document.
#[derive(Debug)]
pub struct Output {
    pub code: i32,
    pub document: Value,
}

impl Output {
    fn usage(subcommand: Option<&str>, message: String) -> Self {
        Output {
            code: 1,
            document: json!({ "subcommand": subcommand, "verdict": "error", "payload": { "error": message } }),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output { code: 0, document: Value::String(e.to_string()) };
            }
            return Output::usage(None, e.to_string());
        }
    };
    let name = commands::name(&cli.command);
    match commands::dispatch(cli.command) {
        Ok(report) => Output { code: report.exit_code(), document: report.to_json(name) },
        Err(e) => Output::usage(Some(name), e),
    }
}
