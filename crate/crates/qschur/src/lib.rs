//! The standardized queer q-Schur superalgebra `Q^s_v(n, r)`.
//!
//! Products are computed two ways: by the oracle, which works inside the Hecke–Clifford
//! superalgebra `H^c_r`, and by closed-form multiplication formulas for the generator shapes.

#![forbid(unsafe_code)]

mod element;
mod formulas;
mod heads;
mod oracle;
mod shapes;

pub use element::SchurElement;
pub use formulas::{
    divided_power_product, formula_product, odd_e_exact, odd_e_head, odd_f_head,
    odd_f_tail_correction, odd_k_head, relation_sides, special_product, SpecialCase,
};
pub use heads::{head_terms, support_below_any, support_check, HeadKind};
pub use oracle::{
    block_solver, natural_product, oracle_mul, oracle_product, oracle_product_all, product_terms,
    t_element, BlockSolver,
};
pub use shapes::GeneratorShape;

use hecke_clifford::HcError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("head-only: use oracle for tail ({0})")]
    HeadOnly(String),
    #[error(transparent)]
    Hc(#[from] HcError),
}
