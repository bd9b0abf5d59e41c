//! Command-line front end for `borderstat`.
//!
//! The binary is a thin wrapper around [`run`]; everything it prints is built
//! from an [`OutputRecord`](record::OutputRecord), so the JSON form of every
//! command can be parsed back by the same types.

pub mod args;
pub mod commands;
pub mod config;
pub mod record;
pub mod svg;

use std::fmt;
use std::io::Write;

pub use args::Cli;
pub use commands::run;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const PRECISION: i32 = 4;
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Self {
            code: exit::BUDGET,
            message: message.into(),
        }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        Self {
            code: exit::FAILURE,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<borderstat::Error> for CliError {
    fn from(e: borderstat::Error) -> Self {
        use borderstat::Error::*;
        let code = match e {
            LetterOutOfRange { .. } | AlphabetTooSmall { .. } | EmptyWord | InvalidPeriods(_) => {
                exit::USAGE
            }
            BudgetExceeded { .. } => exit::BUDGET,
            InfeasiblePrecision { .. } | InsufficientPrecision { .. } => exit::PRECISION,
            Series(_) => exit::FAILURE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::failure(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::failure(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::failure(e.to_string())
    }
}

/// Parses `args`, runs the command and returns the exit code. Diagnostics go
/// to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}
