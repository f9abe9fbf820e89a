//! Command-line front end for the shifted plactic toolkit.

pub mod appendix;
mod commands;
pub mod suites;

use std::ffi::OsString;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use shpl_core::{Partition, StrictPartition};

pub use appendix::{emit_appendix_table, render_table, AppendixRow};

pub const DEFAULT_MAX_SIZE: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "shpl",
    version,
    about = "Shifted tableaux, shifted plactic classes and Schur P/Q expansions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest shape or word size any enumeration may reach.
    #[arg(long, env = "SHPL_MAX_SIZE", default_value_t = DEFAULT_MAX_SIZE, global = true)]
    pub max_size: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    Shifted,
    Plactic,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LrMethodArg {
    All,
    Plactic,
    Rectify,
    Boxadd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GMethodArg {
    All,
    Plactic,
    Rectify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "s")]
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StanKind {
    Word,
    Tableau,
    Ssdt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cauchy,
    Niltlb,
    Relations,
    Pieri,
    LrAgreement,
}

fn parsed<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mixed insertion: prints P_mix and Q_mix.
    InsertMixed {
        #[arg(value_parser = parsed::<shpl_core::Word>)]
        word: shpl_core::Word,
    },
    /// SK insertion: prints the decomposition tableau and Q_sk.
    InsertSk {
        #[arg(value_parser = parsed::<shpl_core::Word>)]
        word: shpl_core::Word,
    },
    /// RSK insertion: prints P_rsk and Q_rsk.
    Rsk {
        #[arg(value_parser = parsed::<shpl_core::Word>)]
        word: shpl_core::Word,
    },
    /// Mixed reading word of a shifted tableau.
    Mread {
        #[arg(value_parser = parsed::<shpl_core::ShiftedTableau>)]
        tableau: shpl_core::ShiftedTableau,
    },
    /// Shifted tableau with the same reading word as a decomposition tableau.
    Phi {
        #[arg(value_parser = parsed::<shpl_core::DecompositionTableau>)]
        ssdt: shpl_core::DecompositionTableau,
    },
    /// Decomposition tableau with the same reading word as a shifted tableau.
    Psi {
        #[arg(value_parser = parsed::<shpl_core::ShiftedTableau>)]
        tableau: shpl_core::ShiftedTableau,
    },
    /// Shifted and plactic classes of all words of a content.
    Classes {
        #[arg(long, value_delimiter = ',', required = true)]
        content: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ClassKind::Both)]
        kind: ClassKind,
    },
    /// Shifted Littlewood-Richardson coefficient b^λ_{μν}.
    Lrcoef {
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        lambda: StrictPartition,
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        mu: StrictPartition,
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        nu: StrictPartition,
        #[arg(long, value_enum, default_value_t = LrMethodArg::All)]
        method: LrMethodArg,
    },
    /// Coefficient g^λ_μ of s_μ in P_λ, or the whole expansion without --mu.
    Gcoef {
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        lambda: StrictPartition,
        #[arg(long, value_parser = parsed::<Partition>)]
        mu: Option<Partition>,
        #[arg(long, value_enum, default_value_t = GMethodArg::All)]
        method: GMethodArg,
    },
    /// Schur P, Q or s polynomial in finitely many variables.
    Schur {
        #[arg(long, value_enum)]
        basis: Basis,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Rectifies a skew shifted tableau (standard or semistandard) by jeu de taquin.
    Rectify { tableau: String },
    /// Removes the entry 1 of a standard shifted tableau and slides.
    Delta {
        #[arg(value_parser = parsed::<shpl_core::StandardShiftedTableau>)]
        tableau: shpl_core::StandardShiftedTableau,
    },
    /// Standardizes a word, shifted tableau or decomposition tableau.
    Stan {
        input: String,
        #[arg(long, value_enum, default_value_t = StanKind::Word)]
        kind: StanKind,
    },
    /// Runs an exhaustive verification sweep bounded by --max-size.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Number of box-adding operators for the Cauchy suite.
        #[arg(long, default_value_t = 3)]
        ops: usize,
        /// Number of x variables for the Cauchy suite.
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Degree bound for the Cauchy suite.
        #[arg(long, default_value_t = 4)]
        degree: u32,
    },
    /// Shifted plactic classes of 4-letter words with P_mix and P_rsk.
    Appendix,
    /// EXPERIMENTAL: tallies the rectifications of skew shifted tableaux.
    SkewExpand {
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        lambda: StrictPartition,
        #[arg(long, value_parser = parsed::<StrictPartition>)]
        mu: StrictPartition,
        #[arg(long, default_value_t = 3)]
        max_letter: u32,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] shpl_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

/// A rendered result. `ok` is false for a completed sweep that found
/// failures.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

/// Exit status and the text written to each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    execute(&cli)
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    match commands::dispatch(cli) {
        Ok(report) => {
            let mut stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json value"),
                Format::Text => report.text,
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: if report.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
