//! Command-line front end for the queer q-Schur superalgebra engine.
//!
//! `product` multiplies two basis elements and compares any applicable closed formula with
//! the oracle, `verify` runs groups of exhaustive checks and reports them as JSON, and
//! `export` writes the generator multiplication table and the monomial transition matrix.

#![forbid(unsafe_code)]

pub mod criteria;
pub mod export;
pub mod product;
pub mod suites;

use hecke_clifford::MAX_RANK;
use qschur::SchurError;
use qsupergroup::GroupError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    /// Bounds beyond what the engine supports.
    #[error("resource limit: {0}")]
    Limit(String),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// `n >= 1` and `1 <= r <= MAX_RANK`.
pub fn check_bounds(n: usize, r: i32) -> Result<(), CliError> {
    if n < 1 || r < 1 {
        return Err(CliError::Parse(format!(
            "need n >= 1 and r >= 1, got n={n}, r={r}"
        )));
    }
    if r as usize > MAX_RANK {
        return Err(CliError::Limit(format!(
            "r={r} exceeds the largest supported degree {MAX_RANK}"
        )));
    }
    Ok(())
}
