use std::path::Path;

use borderstat::{EnumBudget, EvalConfig};
use serde::Deserialize;

use crate::args::Cli;
use crate::CliError;

/// Budgets read from `--config`. Missing keys keep their defaults.
#[derive(Debug, Default, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_length: Option<u32>,
    pub max_enumeration: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    }
}

/// Effective settings; flags override the config file.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub eval: EvalConfig,
    pub enumeration: EnumBudget,
    pub digits: u32,
    pub jobs: u16,
}

impl Settings {
    pub fn resolve(cli: &Cli) -> Result<Self, CliError> {
        let file = match &cli.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let defaults = EvalConfig::default();
        let eval = EvalConfig {
            max_length: cli
                .budget_n
                .or(file.max_length)
                .unwrap_or(defaults.max_length),
            parallel: cli.jobs > 1,
        };
        let enumeration = cli
            .budget_enum
            .or(file.max_enumeration)
            .map(EnumBudget)
            .unwrap_or_default();
        Ok(Self {
            eval,
            enumeration,
            digits: cli
                .digits
                .unwrap_or(borderstat::asymptotics::DEFAULT_DIGITS),
            jobs: cli.jobs,
        })
    }
}
