//! Head terms of the odd formulas and support checks for the lower-order remainders.

use qcombinat::{order_cmp_star, strictly_below, IMat, OrderVerdict, SuperMatrix};
use serde::{Deserialize, Serialize};

use crate::element::SchurElement;
use crate::formulas::{odd_e_head, odd_f_head, odd_f_tail_correction, odd_k_head};
use crate::SchurError;

/// Which explicit part of an odd product to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeadKind {
    /// Head of `[D*_{h-bar}][A*]`.
    K,
    /// Head of `[E*_{h-bar}][A*]`.
    E,
    /// Head of `[F*_{h-bar}][A*]`.
    F,
    /// The explicit correction of `[F*_{h-bar}][A*]`, without its `(v - v^{-1})` factor.
    FCorrection,
}

/// The designated head (or correction) for row `h` of `A*`.
pub fn head_terms(kind: HeadKind, h: usize, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    match kind {
        HeadKind::K => odd_k_head(h, a),
        HeadKind::E => odd_e_head(h, a),
        HeadKind::F => odd_f_head(h, a),
        HeadKind::FCorrection => odd_f_tail_correction(h, a),
    }
}

/// True iff every term of `x` lies strictly below `bound`: base `≺ base(bound)`,
/// or `≺*` when `strict_star`.
pub fn support_check(x: &SchurElement, bound: &SuperMatrix, strict_star: bool) -> bool {
    let base = bound.base();
    x.terms().keys().all(|m| {
        if strict_star {
            order_cmp_star(m, bound) == OrderVerdict::StrictlyLess
        } else {
            strictly_below(&m.base(), &base)
        }
    })
}

/// True iff every term of `x` has base strictly below at least one of `bases`.
pub fn support_below_any(x: &SchurElement, bases: &[IMat]) -> bool {
    x.terms().keys().all(|m| {
        let b = m.base();
        bases.iter().any(|a| strictly_below(&b, a))
    })
}
