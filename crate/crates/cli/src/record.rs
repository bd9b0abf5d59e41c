//! The JSON shape shared by every command.

use borderstat::ErrDecimal;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub query: Query,
    pub result: Payload,
    /// `oracle`, `recurrence`, `moebius`, `series` or `bound`.
    pub method: String,
    pub version: String,
}

impl OutputRecord {
    pub fn new(command: &str, query: Query, result: Payload, method: &str) -> Self {
        Self {
            command: command.to_string(),
            query,
            result,
            method: method.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Echo of the arguments that determine the result.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Query {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periods: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_border: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_period: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u32>,
}

/// A decimal string and a bound on its distance from the true value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decimal {
    pub value: String,
    pub err: String,
}

impl From<&ErrDecimal> for Decimal {
    fn from(d: &ErrDecimal) -> Self {
        Self {
            value: d.fixed(),
            err: d.err_upper_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// Longest border length.
    pub r: u32,
    /// Least period, `n - r`.
    pub period: u32,
    pub count: String,
    pub probability_num: String,
    pub probability_den: String,
    pub probability_dec: Decimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Fw {
        c: u32,
        word: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        g_count: Option<String>,
    },
    Distribution {
        total: String,
        rows: Vec<Row>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        oracle_agrees: Option<bool>,
    },
    Constant {
        value: Decimal,
        /// The enclosure before rounding to the requested digits.
        enclosure: Decimal,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        length: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        terms: Option<u32>,
    },
    Count {
        f: String,
        g: String,
        c: u32,
        least_period: u32,
    },
    Selfcheck {
        checked: u32,
        mismatches: Vec<String>,
    },
}
