//! Command-line front end for `mds-selfdual`.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a code fails
//! verification or a construction's criterion fails, 2 on usage or input
//! errors.

pub mod census_json;
pub mod codefile;
mod commands;

pub use commands::{run, Cli, Command};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, invalid parameters.
    #[error("{0}")]
    Input(String),
    /// The mathematics did not work out.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<mds_selfdual::Error> for CliError {
    fn from(e: mds_selfdual::Error) -> Self {
        match e {
            mds_selfdual::Error::CriterionFailed { .. } => CliError::Failure(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
