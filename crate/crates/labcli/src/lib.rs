//! Experiment harness around `complex2`: configuration, seeded Monte Carlo
//! runs over random 2-complexes, CSV output and the asymptotic bound
//! constants reported next to the measured frequencies.

pub mod bounds;
pub mod config;
pub mod experiment;

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Complex(#[from] complex2::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("unknown pattern {0}")]
    UnknownPattern(String),
    #[error("c = 3 is the critical case; no exponential bound applies")]
    CriticalCase,
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;

/// Resolves a pattern spec such as `torus7` or `lxy 5 4` from the catalog.
pub fn pattern_by_spec(spec: &str) -> Result<complex2::Complex2> {
    let mut tokens = spec.split_whitespace();
    let name = tokens.next().ok_or_else(|| LabError::UnknownPattern(spec.into()))?;
    let params = tokens
        .map(|t| t.parse::<u32>().map_err(|_| LabError::UnknownPattern(spec.into())))
        .collect::<Result<Vec<_>>>()?;
    complex2::catalog::by_name(name, &params).map_err(|e| LabError::UnknownPattern(format!("{spec} ({e})")))
}
