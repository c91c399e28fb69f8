//! Command-line front end: instance and solution files, the `mcc`
//! subcommands, and SVG output.

pub mod commands;
pub mod io;
pub mod svg;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or invalid input. Exit status 2.
    #[error("{0}")]
    Input(String),
    /// A solution failed its checks. Exit status 3.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}
