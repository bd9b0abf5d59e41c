use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "borderstat",
    version,
    about = "Exact counts and limiting constants for borders and periods of words"
)]
pub struct Cli {
    /// TOML file with `max_length` and `max_enumeration` budgets
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads; with 1 everything runs sequentially
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,

    /// Decimal digits for constants and probabilities
    #[arg(long, global = true, value_name = "D")]
    pub digits: Option<u32>,

    /// Largest word length evaluated exactly
    #[arg(long = "budget-n", global = true, value_name = "N")]
    pub budget_n: Option<u32>,

    /// Largest number of words enumerated by the oracle
    #[arg(long = "budget-enum", global = true, value_name = "COUNT")]
    pub budget_enum: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class count and extremal word for a set of forced periods
    Fw(FwArgs),
    /// Distribution of the longest border over all words of one length
    Dist(DistArgs),
    /// Limiting constants alpha and lambda(r)
    Const(ConstArgs),
    /// Words with a given least period or longest border
    Count(CountArgs),
    /// Compare the class-count recursion with union-find on random inputs
    Selfcheck(SelfcheckArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Alpha,
    Lambda,
}

#[derive(Args, Debug)]
pub struct FwArgs {
    /// Comma-separated periods
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub periods: Vec<u32>,

    #[arg(long)]
    pub length: u32,

    /// Also report the number of words over this alphabet with all the periods
    #[arg(long)]
    pub alphabet: Option<u32>,

    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct DistArgs {
    #[arg(long)]
    pub alphabet: u32,

    #[arg(long)]
    pub length: u32,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,

    /// Also enumerate every word and check the counts agree
    #[arg(long)]
    pub oracle: bool,

    /// Index rows by least period `n - r` instead of border length `r`
    #[arg(long = "by-period")]
    pub by_period: bool,

    /// Write a bar chart of the distribution
    #[arg(long, value_name = "FILE")]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ConstArgs {
    #[arg(long)]
    pub alphabet: u32,

    #[arg(long, value_enum)]
    pub which: Which,

    /// Border length, for `--which lambda`
    #[arg(long, required_if_eq("which", "lambda"))]
    pub r: Option<u32>,

    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    pub alphabet: u32,

    /// Comma-separated periods; their minimum is the least period
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "max_border", required_unless_present = "max_border")]
    pub periods: Option<Vec<u32>>,

    /// Longest border length
    #[arg(long = "max-border")]
    pub max_border: Option<u32>,

    #[arg(long)]
    pub length: u32,

    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct SelfcheckArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of random inputs
    #[arg(long, default_value_t = 1000)]
    pub count: u32,

    /// Largest sampled word length
    #[arg(long = "max-length", default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_length: u32,

    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    pub format: TextFormat,
}
