//! Exact coefficient arithmetic for computations over `Z[v, v^-1]` and `Q(v)`.
//!
//! `q` is always represented as `v^2`.

#![forbid(unsafe_code)]

mod coeff;
mod laurent;
pub mod linalg;
mod quantum;
mod ratfun;

pub use coeff::Coeff;
pub use laurent::{Laurent, LaurentPoly, ZLaurent};
pub use quantum::{quantum_binom, quantum_binom_in, quantum_factorial, quantum_int, step_poly};
pub use ratfun::{ratfun_div, RatFun};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse coefficient `{0}`")]
    Parse(String),
}
