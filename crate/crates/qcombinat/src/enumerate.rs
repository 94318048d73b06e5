//! Lexicographic enumerators.

use crate::matrix::{Composition, IMat, SuperMatrix};

fn weak_compositions(parts: usize, total: i32) -> Vec<Vec<i32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Lambda(n, r)` in lexicographic order.
pub fn compositions(n: usize, r: i32) -> Vec<Composition> {
    if r < 0 {
        return Vec::new();
    }
    weak_compositions(n, r)
        .into_iter()
        .map(Composition)
        .collect()
}

/// `M_n(N)_r`, the `n x n` natural matrices with entry sum `r`, in lexicographic order.
pub fn matrices(n: usize, r: i32) -> Vec<IMat> {
    if r < 0 {
        return Vec::new();
    }
    weak_compositions(n * n, r)
        .into_iter()
        .map(|e| IMat::from_rows(&e.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap())
        .collect()
}

/// All super-matrices with a given base: each nonzero entry may carry one odd unit.
pub fn super_matrices_with_base(base: &IMat) -> Vec<SuperMatrix> {
    let n = base.n();
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| base.at(i, j) > 0)
        .collect();
    let mut out = Vec::with_capacity(1 << cells.len());
    for mask in 0u32..(1 << cells.len()) {
        let mut a1 = IMat::zero(n);
        for (b, &(i, j)) in cells.iter().enumerate() {
            if mask >> b & 1 == 1 {
                a1.set(i, j, 1);
            }
        }
        out.push(SuperMatrix::new(base.sub(&a1), a1).unwrap());
    }
    out.sort();
    out
}

/// `M_n(N|N_2)_r` in lexicographic order of `(A0, A1)`.
pub fn super_matrices(n: usize, r: i32) -> Vec<SuperMatrix> {
    let mut out: Vec<SuperMatrix> = matrices(n, r)
        .iter()
        .flat_map(super_matrices_with_base)
        .collect();
    out.sort();
    out
}

/// Super-matrices with prescribed row and column sums of the base.
pub fn super_matrices_ro_co(lambda: &Composition, mu: &Composition) -> Vec<SuperMatrix> {
    let n = lambda.len();
    let mut out = Vec::new();
    let mut cur = IMat::zero(n);
    fill(lambda, mu, 0, &mut cur, &mut out);
    let mut all: Vec<SuperMatrix> = out.iter().flat_map(super_matrices_with_base).collect();
    all.sort();
    all
}

fn fill(lambda: &Composition, mu: &Composition, cell: usize, cur: &mut IMat, out: &mut Vec<IMat>) {
    let n = lambda.len();
    if cell == n * n {
        if cur.ro() == *lambda && cur.co() == *mu {
            out.push(cur.clone());
        }
        return;
    }
    let (i, j) = (cell / n + 1, cell % n + 1);
    let row_used: i32 = (1..j).map(|l| cur.at(i, l)).sum();
    let col_used: i32 = (1..i).map(|l| cur.at(l, j)).sum();
    let cap = (lambda.part(i) - row_used).min(mu.part(j) - col_used);
    for x in 0..=cap.max(-1) {
        cur.set(i, j, x);
        fill(lambda, mu, cell + 1, cur, out);
    }
    cur.set(i, j, 0);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(2, 2)[0], Composition(vec![0, 2]));
        assert_eq!(super_matrices(2, 1).len(), 8);
        let lam = Composition(vec![1, 1]);
        assert_eq!(super_matrices_ro_co(&lam, &lam).len(), 8);
    }
}
