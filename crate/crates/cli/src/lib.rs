//! Command-line front end: presentation files, subcommands and canonical
//! JSON reports.

pub mod commands;
pub mod parse;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse {
        path: String,
        #[source]
        source: parse::ParseError,
    },
    #[error(transparent)]
    Algebra(#[from] leibniz_gsb::Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    /// Attaches a file name to parse errors raised without one.
    pub fn in_file(self, path: &str) -> Self {
        match self {
            CliError::Parse { path: p, source } if p.is_empty() => CliError::Parse { path: path.to_string(), source },
            other => other,
        }
    }
}
