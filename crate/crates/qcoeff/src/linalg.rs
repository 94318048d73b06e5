//! Exact dense linear algebra over `Q(v)`.

use crate::ratfun::RatFun;

/// A dense row-major matrix over `Q(v)`.
pub type RatMatrix = Vec<Vec<RatFun>>;

/// Reduced row echelon form together with the pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: RatMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn ncols(m: &RatMatrix) -> usize {
    m.first().map_or(0, |r| r.len())
}

/// Gauss–Jordan elimination. Pivot choice prefers the entry with the fewest terms,
/// which keeps intermediate fractions small.
pub fn rref(mut m: RatMatrix) -> Rref {
    let cols = ncols(&m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= m.len() {
            break;
        }
        let weight = |x: &RatFun| x.num().terms().len() + x.den().terms().len();
        let Some(p) = (row..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| weight(&m[i][col]))
        else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[row].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let prow = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref { rows: m, pivots }
}

pub fn rank(m: &RatMatrix) -> usize {
    rref(m.clone()).rank()
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "inverse needs a square matrix"
    );
    let aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    RatFun::one()
                } else {
                    RatFun::zero()
                }
            }));
            row
        })
        .collect();
    let red = rref(aug);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant by fraction-field elimination.
pub fn determinant(m: &RatMatrix) -> RatFun {
    let n = m.len();
    let mut a = m.clone();
    let mut det = RatFun::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return RatFun::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = &det * &piv;
        let inv = piv.inv().unwrap();
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    det
}

/// Solves `m x = b`; returns one solution if consistent (free variables set to zero).
pub fn solve(m: &RatMatrix, b: &[RatFun]) -> Option<Vec<RatFun>> {
    let cols = ncols(m);
    let aug: RatMatrix = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let red = rref(aug);
    if red.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![RatFun::zero(); cols];
    for (i, &p) in red.pivots.iter().enumerate() {
        x[p] = red.rows[i][cols].clone();
    }
    Some(x)
}
