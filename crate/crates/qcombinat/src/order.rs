//! The corner-sum preorder on matrices and its super refinement.

use std::collections::BTreeSet;

use crate::matrix::{IMat, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderVerdict {
    StrictlyLess,
    Equivalent,
    StrictlyGreater,
    Incomparable,
}

/// `B ⪯ A`: every upper-right corner sum (`i <= s < t <= j`) and every
/// lower-left corner sum (`i >= s > t >= j`) of `B` is bounded by that of `A`.
pub fn preceq(b: &IMat, a: &IMat) -> bool {
    let n = a.n();
    for s in 1..=n {
        for t in 1..=n {
            if s < t {
                let sum = |m: &IMat| -> i32 {
                    (1..=s)
                        .flat_map(|i| (t..=n).map(move |j| (i, j)))
                        .map(|(i, j)| m.at(i, j))
                        .sum()
                };
                if sum(b) > sum(a) {
                    return false;
                }
            } else if s > t {
                let sum = |m: &IMat| -> i32 {
                    (s..=n)
                        .flat_map(|i| (1..=t).map(move |j| (i, j)))
                        .map(|(i, j)| m.at(i, j))
                        .sum()
                };
                if sum(b) > sum(a) {
                    return false;
                }
            }
        }
    }
    true
}

/// `B ≺ A`: `B ⪯ A` with different off-diagonal parts.
pub fn strictly_below(b: &IMat, a: &IMat) -> bool {
    b.off_diagonal() != a.off_diagonal() && preceq(b, a)
}

/// Compares base matrices under `⪯`; `Equivalent` iff the off-diagonal parts agree.
pub fn order_cmp(a: &IMat, b: &IMat) -> OrderVerdict {
    if a.off_diagonal() == b.off_diagonal() {
        OrderVerdict::Equivalent
    } else if preceq(a, b) {
        OrderVerdict::StrictlyLess
    } else if preceq(b, a) {
        OrderVerdict::StrictlyGreater
    } else {
        OrderVerdict::Incomparable
    }
}

/// Refinement of [`order_cmp`] on super-matrices: ties are broken by strict inclusion
/// of the diagonal supports of the odd parts.
pub fn order_cmp_star(a: &SuperMatrix, b: &SuperMatrix) -> OrderVerdict {
    match order_cmp(&a.base(), &b.base()) {
        OrderVerdict::Equivalent => {
            let sa: BTreeSet<usize> = a.diag_support().into_iter().collect();
            let sb: BTreeSet<usize> = b.diag_support().into_iter().collect();
            if sa == sb {
                OrderVerdict::Equivalent
            } else if sa.is_subset(&sb) {
                OrderVerdict::StrictlyLess
            } else if sb.is_subset(&sa) {
                OrderVerdict::StrictlyGreater
            } else {
                OrderVerdict::Incomparable
            }
        }
        v => v,
    }
}

/// Corner test: `a_{h,k} > 0` and every entry strictly below row `h` and strictly left
/// of column `k` vanishes.
pub fn sdp_corner(a: &IMat, h: usize, k: usize) -> bool {
    a.at(h, k) > 0 && lower_left_zero(a, h, k)
}

/// Every entry strictly below row `h` and strictly left of column `k` vanishes.
pub fn lower_left_zero(a: &IMat, h: usize, k: usize) -> bool {
    (h + 1..=a.n()).all(|i| (1..k).all(|j| a.at(i, j) == 0))
}

/// The corner test at every nonzero entry of row `h`.
pub fn sdp_row(a: &IMat, h: usize) -> bool {
    (1..=a.n())
        .filter(|&k| a.at(h, k) > 0)
        .all(|k| sdp_corner(a, h, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Composition;

    fn m(rows: &[Vec<i32>]) -> IMat {
        IMat::from_rows(rows).unwrap()
    }

    #[test]
    fn diagonal_below_antidiagonal() {
        let a = m(&[vec![0, 1], vec![1, 0]]);
        let b = m(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(order_cmp(&b, &a), OrderVerdict::StrictlyLess);
        assert_eq!(order_cmp(&a, &b), OrderVerdict::StrictlyGreater);
        assert_eq!(order_cmp(&a, &a), OrderVerdict::Equivalent);
    }

    #[test]
    fn incomparable_exists() {
        let a = m(&[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let b = m(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        assert_eq!(order_cmp(&a, &b), OrderVerdict::Incomparable);
    }

    #[test]
    fn star_refinement() {
        let a = SuperMatrix::new(IMat::diag(&[1, 0]), IMat::unit(2, 1, 1)).unwrap();
        let b = SuperMatrix::diag(&Composition(vec![2, 0]));
        assert_eq!(order_cmp_star(&b, &a), OrderVerdict::StrictlyLess);
        assert_eq!(order_cmp_star(&a, &a), OrderVerdict::Equivalent);
    }

    #[test]
    fn sdp_examples() {
        let a = m(&[vec![0, 1], vec![1, 0]]);
        assert!(!sdp_corner(&a, 1, 2));
        assert!(sdp_row(&a, 2));
        let d = IMat::diag(&[1, 2, 0]);
        assert!(sdp_corner(&d, 1, 1) && sdp_corner(&d, 2, 2));
    }
}
