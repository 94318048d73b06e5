//! The quantum queer supergroup acting on `Q^s_v(n, r)` through long elements.
//!
//! Generators act on long elements `A*(j, r)` by closed formulas whose coefficients do not
//! depend on `r`. The defining relations are checked degree by degree, and a monomial basis
//! is compared with the standard basis through a triangular transition matrix.

#![forbid(unsafe_code)]

mod action;
mod gens;
mod long;
mod monomial;
mod words;

pub use action::{
    act, closed_form_applies, gen_action, gen_action_long, head_e_odd, head_f_odd, head_k_odd,
};
pub use gens::GenSymbol;
pub use long::{expand_long, long_decompose, LongCombination, PlusMinusMatrix};
pub use monomial::{
    application_order, factor_lc, leading_coefficient, leading_coefficient_aggregate, monomial,
    monomial_factors, triangular_check, TransitionMatrix, TriangularReport,
};
pub use words::{
    check_relation, eval_word, mul_with, relation_suite, relation_suite_with, relations,
    BasisProduct, Evaluator, Expr, Relation, RelationResult, Status, Word,
};

use qschur::SchurError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("closed form needs the corner condition; fall back to the schur-level product ({0})")]
    SdpFallback(String),
    #[error("long-element decomposition failed: {0}")]
    Decomposition(String),
    #[error(transparent)]
    Schur(#[from] SchurError),
}
