//! Command-line front end for `qhall-core`: argument parsing, plain, JSON
//! and CSV rendering, TOML suite configuration and a parallel suite runner.

pub mod cli;
pub mod config;
pub mod output;
pub mod runner;

use std::io;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qhall_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("config: {0}")]
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) | CliError::Core(qhall_core::Error::Parse(_)) => exit::USAGE,
            CliError::Io { .. } => exit::USAGE,
            CliError::Core(_) => exit::DOMAIN,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub use cli::run;
