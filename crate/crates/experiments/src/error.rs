use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExpError {
    #[error(transparent)]
    Core(#[from] monoscope_core::Error),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("partner pool needs {needed} nonmonogamous states, found only {found} in {draws} draws")]
    PoolExhausted {
        needed: usize,
        found: usize,
        draws: u64,
    },
}

pub type Result<T> = std::result::Result<T, ExpError>;
