//! Partial sums, double-coset representatives and length statistics.

use crate::matrix::{Composition, IMat, SuperMatrix};
use crate::perm::Permutation;

/// Column-major partial sum `tilde a_{i,j}`: all entries in columns `< j`,
/// plus rows `1..=i` of column `j`. `i` may be 0.
pub fn col_tilde(m: &IMat, i: usize, j: usize) -> i32 {
    let n = m.n();
    let mut s = 0;
    for k in 1..j {
        for p in 1..=n {
            s += m.at(p, k);
        }
    }
    for p in 1..=i {
        s += m.at(p, j);
    }
    s
}

/// Row-major partial sum `tilde a^r_{i,j}`: all entries in rows `< i`,
/// plus columns `1..=j` of row `i`. `j` may be 0.
pub fn row_tilde(m: &IMat, i: usize, j: usize) -> i32 {
    let n = m.n();
    let mut s = 0;
    for k in 1..i {
        for l in 1..=n {
            s += m.at(k, l);
        }
    }
    for l in 1..=j {
        s += m.at(i, l);
    }
    s
}

/// The column-concatenation composition of a super-matrix and its partial sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuTilde {
    /// Base entries read column by column.
    pub nu: Composition,
    /// Partial sums of `nu`.
    pub nu_tilde: Vec<i32>,
    /// `nu` of the odd part alone.
    pub nu_odd: Composition,
    /// Column-major partial sums of the odd part, `tilde a1_{i,j}`.
    pub odd_tilde: IMat,
    /// Row-major partial sums of the base, `tilde a^r_{i,j}`.
    pub row_tilde: IMat,
}

fn column_concat(m: &IMat) -> Vec<i32> {
    let n = m.n();
    let mut v = Vec::with_capacity(n * n);
    for j in 1..=n {
        for i in 1..=n {
            v.push(m.at(i, j));
        }
    }
    v
}

pub fn nu_and_tilde(a: &SuperMatrix) -> NuTilde {
    let base = a.base();
    let n = a.n();
    let nu = column_concat(&base);
    let mut acc = 0;
    let nu_tilde = nu
        .iter()
        .map(|x| {
            acc += x;
            acc
        })
        .collect();
    let mut odd_tilde = IMat::zero(n);
    let mut rt = IMat::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            odd_tilde.set(i, j, col_tilde(a.a1(), i, j));
            rt.set(i, j, row_tilde(&base, i, j));
        }
    }
    NuTilde {
        nu: Composition(nu),
        nu_tilde,
        nu_odd: Composition(column_concat(a.a1())),
        odd_tilde,
        row_tilde: rt,
    }
}

/// The shortest representative `d_A` of the double coset encoded by a base matrix:
/// `d_A(tilde a_{h-1,k} + p) = tilde a^r_{h,k-1} + p` for `1 <= p <= a_{h,k}`.
pub fn dist_rep(a: &IMat) -> Permutation {
    let n = a.n();
    let r = a.total() as usize;
    let mut w = vec![0usize; r];
    for h in 1..=n {
        for k in 1..=n {
            let src = col_tilde(a, h - 1, k) as usize;
            let dst = row_tilde(a, h, k - 1) as usize;
            for p in 1..=a.at(h, k) as usize {
                w[src + p - 1] = dst + p;
            }
        }
    }
    Permutation::from_one_line(&w).expect("d_A is a bijection")
}

/// `hat l(A) = sum_{i >= k, j < l} a_{i,j} a_{k,l}`.
pub fn hat_length(a: &IMat) -> i64 {
    let n = a.n();
    let mut s = 0i64;
    for i in 1..=n {
        for j in 1..=n {
            let x = a.at(i, j) as i64;
            if x == 0 {
                continue;
            }
            for k in 1..=i {
                for l in j + 1..=n {
                    s += x * a.at(k, l) as i64;
                }
            }
        }
    }
    s
}

/// Length of the longest element of the Young subgroup `S_mu`.
pub fn longest_young_length(mu: &Composition) -> i64 {
    mu.parts()
        .iter()
        .map(|&m| (m as i64) * (m as i64 - 1) / 2)
        .sum()
}

/// `d(A*) = hat l(A) + A0 * A1`.
pub fn partial_flag(a: &SuperMatrix) -> i64 {
    hat_length(&a.base()) + a.a0().dot(a.a1())
}

/// `sum_{j > k} a_{h,j}` ("after" column `k` in row `h`); 0 for rows outside `[1, n]`.
pub fn after(a: &IMat, h: usize, k: usize) -> i32 {
    if h == 0 || h > a.n() {
        return 0;
    }
    (k + 1..=a.n()).map(|j| a.at(h, j)).sum()
}

/// `sum_{j < k} a_{h,j}` ("before" column `k` in row `h`).
pub fn before(a: &IMat, h: usize, k: usize) -> i32 {
    if h == 0 || h > a.n() {
        return 0;
    }
    (1..k).map(|j| a.at(h, j)).sum()
}

/// Exponent statistics attached to a base matrix and a position `(h, k)`.
pub mod exps {
    use super::{after, before};
    use crate::matrix::IMat;

    /// `f_h(A,k) = after(h,k) - after(h+1,k)`.
    pub fn f(a: &IMat, h: usize, k: usize) -> i32 {
        after(a, h, k) - after(a, h + 1, k)
    }

    /// `g_h(A,k) = -before(h,k) + before(h+1,k)`.
    pub fn g(a: &IMat, h: usize, k: usize) -> i32 {
        -before(a, h, k) + before(a, h + 1, k)
    }

    /// `g^-_h(A,k) = -before(h,k) - before(h+1,k)`.
    pub fn g_minus(a: &IMat, h: usize, k: usize) -> i32 {
        -before(a, h, k) - before(a, h + 1, k)
    }

    /// `d_h(A,k) = after(h,k) - before(h,k)`.
    pub fn d(a: &IMat, h: usize, k: usize) -> i32 {
        after(a, h, k) - before(a, h, k)
    }
}

/// `A + E_{h,k} - E_{h+1,k}` (sign +1) or `A - E_{h,k} + E_{h+1,k}` (sign -1).
pub fn one_move(a: &IMat, h: usize, k: usize, sign: i32) -> IMat {
    a.plus(h, k, sign).plus(h + 1, k, -sign)
}

/// Closed form for `hat l(A^{±}_{h,k}) - hat l(A)`: `±(before(h,k) - after(h+1,k))`.
pub fn hat_length_increment(a: &IMat, h: usize, k: usize, sign: i32) -> i64 {
    sign as i64 * (before(a, h, k) - after(a, h + 1, k)) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i32>]) -> IMat {
        IMat::from_rows(rows).unwrap()
    }

    #[test]
    fn nu_examples() {
        let a = SuperMatrix::even(m(&[vec![1, 0], vec![0, 0]])).unwrap();
        let t = nu_and_tilde(&a);
        assert_eq!(t.nu.parts(), &[1, 0, 0, 0]);
        assert_eq!(t.nu_tilde, vec![1, 1, 1, 1]);
        let a = SuperMatrix::even(m(&[vec![0, 1], vec![1, 0]])).unwrap();
        let t = nu_and_tilde(&a);
        assert_eq!(t.nu.parts(), &[0, 1, 1, 0]);
        assert_eq!(t.nu_tilde, vec![0, 1, 2, 2]);
        let a = SuperMatrix::even(m(&[vec![1, 2], vec![0, 1]])).unwrap();
        let t = nu_and_tilde(&a);
        assert_eq!(t.nu.parts(), &[1, 0, 2, 1]);
        assert_eq!(t.nu_tilde, vec![1, 1, 3, 4]);
    }

    #[test]
    fn dist_rep_examples() {
        assert_eq!(
            dist_rep(&m(&[vec![2, 0], vec![0, 1]])),
            Permutation::identity(3)
        );
        assert_eq!(
            dist_rep(&m(&[vec![0, 1], vec![1, 0]])).one_line(),
            vec![2, 1]
        );
        assert_eq!(
            dist_rep(&m(&[vec![1, 1], vec![1, 0]])).one_line(),
            vec![1, 3, 2]
        );
    }

    #[test]
    fn hat_length_examples() {
        assert_eq!(hat_length(&m(&[vec![0, 0], vec![1, 0]])), 0);
        assert_eq!(hat_length(&m(&[vec![0, 1], vec![1, 0]])), 1);
        assert_eq!(
            hat_length(&m(&[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 3]])),
            0
        );
    }

    #[test]
    fn partial_flag_examples() {
        let e11 = IMat::unit(2, 1, 1);
        assert_eq!(
            partial_flag(&SuperMatrix::new(e11.clone(), e11).unwrap()),
            1
        );
        assert_eq!(
            partial_flag(&SuperMatrix::new(IMat::zero(2), IMat::unit(2, 1, 2)).unwrap()),
            0
        );
        assert_eq!(
            partial_flag(&SuperMatrix::even(m(&[vec![0, 1], vec![1, 0]])).unwrap()),
            1
        );
    }

    #[test]
    fn increment_example() {
        let a = IMat::unit(2, 2, 1);
        assert_eq!(hat_length_increment(&a, 1, 1, 1), 0);
        assert_eq!(hat_length(&one_move(&a, 1, 1, 1)) - hat_length(&a), 0);
    }
}
