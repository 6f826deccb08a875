//! Command implementations behind the `relideal` binary.
//!
//! Every command returns an [`Output`] holding both renderings; the binary
//! prints one of them. Timings go to the log, never to stdout, so that two
//! runs on the same job print the same bytes.

pub mod commands;
pub mod job;

use std::fmt;

pub use commands::{bm, compute, express, inv, reduce, verify, Computed};
pub use job::JobSpec;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(relideal::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// `InvalidInput`, `Parse`, … for the core variants; `Input` otherwise.
    pub fn kind(&self) -> &'static str {
        use relideal::Error::*;
        match self {
            CliError::Input(_) => "Input",
            CliError::Core(e) => match e {
                NotAUnit { .. } => "NotAUnit",
                GroupTooLarge { .. } => "GroupTooLarge",
                NoSplitPrimeFound { .. } => "NoSplitPrimeFound",
                BadPrime { .. } => "BadPrime",
                InsufficientPrecision { .. } => "InsufficientPrecision",
                InconsistentLabeling { .. } => "InconsistentLabeling",
                ActionMismatch => "ActionMismatch",
                DivisionByZero => "DivisionByZero",
                InvalidBasis(_) => "InvalidBasis",
                ArityMismatch { .. } => "ArityMismatch",
                Parse(_) => "Parse",
                InvalidInput(_) => "InvalidInput",
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<relideal::Error> for CliError {
    fn from(e: relideal::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// The result of one command in both renderings.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// False when a check failed; the binary then exits with status 1.
    pub ok: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

/// Exit status: 0 success, 1 a check failed, 2 an error.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
