//! The Hecke–Clifford superalgebra `H^c_r` over `Z[v, v^-1]` (with `q = v^2`).
//!
//! Generators: even `T_1..T_{r-1}`, odd `c_1..c_r`, with
//! `(T_i - q)(T_i + 1) = 0`, braid relations, `c_i^2 = -1`, `c_i c_j = -c_j c_i`,
//! `T_i c_j = c_j T_i` (`j != i, i+1`), `T_i c_i = c_{i+1} T_i` and
//! `T_i c_{i+1} = c_i T_i - (q-1)(c_i - c_{i+1})`.
//! Elements are kept in the normal form `sum coef * c^eps T_w`.

#![forbid(unsafe_code)]

mod element;
mod space;
mod special;

pub use element::{hc_mul, HcBasisWord, HcElement};
pub use space::MAX_RANK;
pub use special::{
    c_alpha, c_alpha_general, c_q_element, h_prime, in_young_subgroup, min_right_coset_reps,
    o_element, sdp_definitional, std_exponent, t_astar, t_astar_std, x_lambda, young_subgroup,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HcError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
}

/// Number of normal-form words, `2^r r!`.
pub fn dimension(r: usize) -> usize {
    (1..=r).product::<usize>() << r
}
