//! Integer matrices, super-matrices and compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::CombinatError;

/// A square integer matrix, row-major, addressed with 1-based `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IMat {
    n: usize,
    e: Vec<i32>,
}

impl IMat {
    pub fn zero(n: usize) -> Self {
        IMat {
            n,
            e: vec![0; n * n],
        }
    }

    /// The matrix unit `E_{i,j}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, 1);
        m
    }

    pub fn diag(parts: &[i32]) -> Self {
        let n = parts.len();
        let mut m = Self::zero(n);
        for (i, &p) in parts.iter().enumerate() {
            m.set(i + 1, i + 1, p);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self, CombinatError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(CombinatError::Shape(format!(
                "expected a square matrix, got {rows:?}"
            )));
        }
        Ok(IMat {
            n,
            e: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.e.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i32 {
        debug_assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.e[(i - 1) * self.n + (j - 1)]
    }

    /// Entry lookup that returns 0 outside `[1, n]^2`.
    pub fn get(&self, i: usize, j: usize) -> i32 {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else {
            self.at(i, j)
        }
    }

    pub fn set(&mut self, i: usize, j: usize, x: i32) {
        self.e[(i - 1) * self.n + (j - 1)] = x;
    }

    pub fn bump(&mut self, i: usize, j: usize, d: i32) {
        self.e[(i - 1) * self.n + (j - 1)] += d;
    }

    /// A copy with `d` added at `(i, j)`.
    pub fn plus(&self, i: usize, j: usize, d: i32) -> Self {
        let mut m = self.clone();
        m.bump(i, j, d);
        m
    }

    pub fn entries(&self) -> &[i32] {
        &self.e
    }

    pub fn is_nonneg(&self) -> bool {
        self.e.iter().all(|&x| x >= 0)
    }

    pub fn total(&self) -> i32 {
        self.e.iter().sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        IMat {
            n: self.n,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        IMat {
            n: self.n,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a - b).collect(),
        }
    }

    /// Entrywise (Frobenius) product `sum a_ij b_ij`.
    pub fn dot(&self, o: &Self) -> i64 {
        self.e
            .iter()
            .zip(&o.e)
            .map(|(a, b)| *a as i64 * *b as i64)
            .sum()
    }

    pub fn ro(&self) -> Composition {
        Composition(
            (1..=self.n)
                .map(|i| (1..=self.n).map(|j| self.at(i, j)).sum())
                .collect(),
        )
    }

    pub fn co(&self) -> Composition {
        Composition(
            (1..=self.n)
                .map(|j| (1..=self.n).map(|i| self.at(i, j)).sum())
                .collect(),
        )
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.at(i, j) == 0))
    }

    /// The matrix with its diagonal replaced by zeros.
    pub fn off_diagonal(&self) -> Self {
        let mut m = self.clone();
        for i in 1..=self.n {
            m.set(i, i, 0);
        }
        m
    }
}

impl fmt::Display for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A composition `lambda = (lambda_1, ..., lambda_n)` of `r` into `n` parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<i32>);

impl Composition {
    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    /// `lambda_i`, 1-based.
    pub fn part(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    /// `tilde lambda_i = lambda_1 + ... + lambda_i` (0 for `i = 0`).
    pub fn partial_sum(&self, i: usize) -> i32 {
        self.0[..i].iter().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// A copy with `d` added to part `i` (1-based).
    pub fn plus(&self, i: usize, d: i32) -> Self {
        let mut c = self.clone();
        c.0[i - 1] += d;
        c
    }

    pub fn add(&self, o: &Self) -> Self {
        Composition(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Composition(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, j: &[i32]) -> i64 {
        self.0
            .iter()
            .zip(j)
            .map(|(a, b)| *a as i64 * *b as i64)
            .sum()
    }

    pub fn as_diag(&self) -> IMat {
        IMat::diag(&self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A pair `(A0 | A1)` with `A0` over the naturals and `A1` over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SuperMatrix {
    a0: IMat,
    a1: IMat,
}

impl SuperMatrix {
    pub fn new(a0: IMat, a1: IMat) -> Result<Self, CombinatError> {
        Self::try_new(a0.clone(), a1.clone())
            .ok_or_else(|| CombinatError::NotSuper(format!("({a0} | {a1})")))
    }

    /// `None` when `a0` has a negative entry, `a1` has an entry outside `{0,1}`,
    /// or the sizes differ.
    pub fn try_new(a0: IMat, a1: IMat) -> Option<Self> {
        if a0.n != a1.n || !a0.is_nonneg() || a1.e.iter().any(|&x| !(0..=1).contains(&x)) {
            return None;
        }
        Some(SuperMatrix { a0, a1 })
    }

    pub fn even(a0: IMat) -> Result<Self, CombinatError> {
        let n = a0.n;
        Self::new(a0, IMat::zero(n))
    }

    pub fn diag(lambda: &Composition) -> Self {
        Self::even(lambda.as_diag()).expect("composition parts are nonnegative")
    }

    pub fn n(&self) -> usize {
        self.a0.n
    }

    pub fn a0(&self) -> &IMat {
        &self.a0
    }

    pub fn a1(&self) -> &IMat {
        &self.a1
    }

    pub fn into_parts(self) -> (IMat, IMat) {
        (self.a0, self.a1)
    }

    /// `A = A0 + A1`.
    pub fn base(&self) -> IMat {
        self.a0.add(&self.a1)
    }

    /// `|A|`.
    pub fn size(&self) -> i32 {
        self.a0.total() + self.a1.total()
    }

    /// `p(A) = |A1| mod 2`.
    pub fn parity(&self) -> u8 {
        (self.a1.total() % 2) as u8
    }

    pub fn ro(&self) -> Composition {
        self.base().ro()
    }

    pub fn co(&self) -> Composition {
        self.base().co()
    }

    /// Diagonal support `{ i : a1_ii = 1 }`.
    pub fn diag_support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.a1.at(i, i) == 1).collect()
    }

    /// Adds `d0 * E_ij` to `A0` and `d1 * E_ij` to `A1` for each `(i, j, d0, d1)`;
    /// `None` if the result leaves the super-matrix set.
    pub fn shifted(&self, moves: &[(usize, usize, i32, i32)]) -> Option<Self> {
        let mut a0 = self.a0.clone();
        let mut a1 = self.a1.clone();
        for &(i, j, d0, d1) in moves {
            a0.bump(i, j, d0);
            a1.bump(i, j, d1);
        }
        Self::try_new(a0, a1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.a0.is_diagonal() && self.a1.is_diagonal()
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &IMat| {
            if m.e.iter().all(|&x| x == 0) {
                "O".to_string()
            } else {
                m.to_string()
            }
        };
        write!(f, "[ {} | {} ]", show(&self.a0), show(&self.a1))
    }
}

#[derive(Serialize, Deserialize)]
struct SuperMatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(default)]
    a0: Option<Vec<Vec<i32>>>,
    #[serde(default)]
    a1: Option<Vec<Vec<i32>>>,
}

impl Serialize for SuperMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SuperMatrixJson {
            n: Some(self.n()),
            a0: Some(self.a0.rows()),
            a1: Some(self.a1.rows()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = SuperMatrixJson::deserialize(d)?;
        let n =
            j.n.or(j.a0.as_ref().map(|r| r.len()))
                .or(j.a1.as_ref().map(|r| r.len()))
                .ok_or_else(|| D::Error::custom("super-matrix needs at least one of n, a0, a1"))?;
        let part = |rows: Option<Vec<Vec<i32>>>| -> Result<IMat, D::Error> {
            match rows {
                None => Ok(IMat::zero(n)),
                Some(r) => {
                    let m = IMat::from_rows(&r).map_err(D::Error::custom)?;
                    if m.n != n {
                        return Err(D::Error::custom(format!(
                            "matrix size {} does not match n = {n}",
                            m.n
                        )));
                    }
                    Ok(m)
                }
            }
        };
        let a0 = part(j.a0)?;
        let a1 = part(j.a1)?;
        SuperMatrix::new(a0, a1).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_and_column_sums() {
        let a = IMat::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(a.ro(), Composition(vec![3, 1]));
        assert_eq!(a.co(), Composition(vec![1, 3]));
    }

    #[test]
    fn super_validation() {
        assert!(
            SuperMatrix::try_new(IMat::unit(2, 1, 1), IMat::unit(2, 1, 1).plus(1, 1, 1)).is_none()
        );
        assert!(SuperMatrix::try_new(IMat::unit(2, 1, 1).plus(1, 1, -2), IMat::zero(2)).is_none());
        let a = SuperMatrix::new(IMat::unit(2, 1, 2), IMat::unit(2, 2, 1)).unwrap();
        assert_eq!(a.parity(), 1);
        assert_eq!(a.size(), 2);
        assert_eq!(a.to_string(), "[ [[0,1],[0,0]] | [[0,0],[1,0]] ]");
    }
}
