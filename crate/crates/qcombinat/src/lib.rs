//! Matrix and permutation combinatorics for queer q-Schur superalgebras.
//!
//! Matrix positions are 1-based throughout: `at(i, j)` reads row `i`, column `j`.

#![forbid(unsafe_code)]

mod enumerate;
mod matrix;
mod order;
mod perm;
mod stats;

pub use enumerate::{
    compositions, matrices, super_matrices, super_matrices_ro_co, super_matrices_with_base,
};
pub use matrix::{Composition, IMat, SuperMatrix};
pub use order::{
    lower_left_zero, order_cmp, order_cmp_star, preceq, sdp_corner, sdp_row, strictly_below,
    OrderVerdict,
};
pub use perm::Permutation;
pub use stats::{
    after, before, col_tilde, dist_rep, exps, hat_length, hat_length_increment,
    longest_young_length, nu_and_tilde, one_move, partial_flag, row_tilde, NuTilde,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error("not a super-matrix (odd entries must be 0 or 1, even entries nonnegative): {0}")]
    NotSuper(String),
}

/// `(ro(A), co(A))` of the base matrix.
pub fn row_col(a: &SuperMatrix) -> (Composition, Composition) {
    let b = a.base();
    (b.ro(), b.co())
}
