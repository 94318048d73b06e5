//! Long elements `A*(j, r) = sum_{lambda in Lambda(n, r-|A|)} v^{lambda.j} [A0 + lambda | A1]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use qcoeff::{linalg, RatFun};
use qcombinat::{compositions, IMat, SuperMatrix};
use qschur::SchurElement;
use serde::{Deserialize, Serialize};

use crate::GroupError;

/// A super-matrix whose even part has zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "SuperMatrix", into = "SuperMatrix")]
pub struct PlusMinusMatrix(SuperMatrix);

impl PlusMinusMatrix {
    pub fn new(a: SuperMatrix) -> Result<Self, GroupError> {
        Self::try_new(a.a0().clone(), a.a1().clone())
            .ok_or_else(|| GroupError::Shape(format!("{a} has a nonzero even diagonal")))
    }

    /// `None` when the pair is not a super-matrix or the even diagonal is nonzero.
    pub fn try_new(a0: IMat, a1: IMat) -> Option<Self> {
        if (1..=a0.n()).any(|i| a0.at(i, i) != 0) {
            return None;
        }
        SuperMatrix::try_new(a0, a1).map(PlusMinusMatrix)
    }

    /// `(O | O)`.
    pub fn zero(n: usize) -> Self {
        PlusMinusMatrix(SuperMatrix::even(IMat::zero(n)).expect("zero matrix"))
    }

    /// Splits `A*` into its off-diagonal even part and the diagonal of `A0`.
    pub fn split(a: &SuperMatrix) -> (Self, Vec<i32>) {
        let n = a.n();
        let diag: Vec<i32> = (1..=n).map(|i| a.a0().at(i, i)).collect();
        (
            PlusMinusMatrix(
                SuperMatrix::new(a.a0().off_diagonal(), a.a1().clone()).expect("valid"),
            ),
            diag,
        )
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn size(&self) -> i32 {
        self.0.size()
    }
}

impl TryFrom<SuperMatrix> for PlusMinusMatrix {
    type Error = GroupError;
    fn try_from(a: SuperMatrix) -> Result<Self, GroupError> {
        Self::new(a)
    }
}

impl From<PlusMinusMatrix> for SuperMatrix {
    fn from(a: PlusMinusMatrix) -> Self {
        a.0
    }
}

impl fmt::Display for PlusMinusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `A*(j, r)` as a [`SchurElement`]; zero when `|A| > r`.
pub fn expand_long(a: &PlusMinusMatrix, j: &[i32], r: i32) -> SchurElement {
    let n = a.n();
    assert_eq!(j.len(), n, "shift vector has the wrong length");
    let mut out = SchurElement::zero(n, r);
    let free = r - a.size();
    if free < 0 {
        return out;
    }
    let (a0, a1) = (a.matrix().a0(), a.matrix().a1());
    for lam in compositions(n, free) {
        let m = SuperMatrix::new(a0.add(&lam.as_diag()), a1.clone())
            .expect("diagonal shift stays valid");
        out.add_term(m, &RatFun::v_pow(lam.dot(j)));
    }
    out
}

/// A finite combination `sum c [A*(j)]` of long elements, evaluated in degree `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LongCombination {
    n: usize,
    r: i32,
    terms: BTreeMap<(PlusMinusMatrix, Vec<i32>), RatFun>,
}

impl LongCombination {
    pub fn zero(n: usize, r: i32) -> Self {
        LongCombination {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The single long element `A*(j)`.
    pub fn single(a: &PlusMinusMatrix, j: &[i32], r: i32) -> Self {
        let mut x = Self::zero(a.n(), r);
        x.add_term(a.clone(), j.to_vec(), &RatFun::one());
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> i32 {
        self.r
    }

    /// The coefficient map; it does not depend on `r`.
    pub fn terms(&self) -> &BTreeMap<(PlusMinusMatrix, Vec<i32>), RatFun> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: PlusMinusMatrix, j: Vec<i32>, c: &RatFun) {
        assert!(
            a.n() == self.n && j.len() == self.n,
            "term {a} does not belong to n={}",
            self.n
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, j)) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// Adds `c (a0 | a1)(j)`, treating a pair outside `M_n(N|N2)^±` as zero.
    pub fn add_raw(&mut self, a0: IMat, a1: IMat, j: Vec<i32>, c: &RatFun) {
        if let Some(a) = PlusMinusMatrix::try_new(a0, a1) {
            self.add_term(a, j, c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for ((a, j), c) in &o.terms {
            x.add_term(a.clone(), j.clone(), c);
        }
        x
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        let mut x = Self::zero(self.n, self.r);
        for ((a, j), c) in &self.terms {
            x.add_term(a.clone(), j.clone(), &(c * s));
        }
        x
    }

    /// The same coefficient map read in degree `r`.
    pub fn in_degree(&self, r: i32) -> Self {
        LongCombination {
            n: self.n,
            r,
            terms: self.terms.clone(),
        }
    }

    /// The element of `Q^s_v(n, r)` this combination denotes.
    pub fn expand(&self) -> SchurElement {
        let mut out = SchurElement::zero(self.n, self.r);
        for ((a, j), c) in &self.terms {
            out = out.add(&expand_long(a, j, self.r).scale(c));
        }
        out
    }
}

impl fmt::Display for LongCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, j), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let js: Vec<String> = j.iter().map(i32::to_string).collect();
            write!(f, "({c})*{a}({})", js.join(","))?;
        }
        Ok(())
    }
}

/// Shift vectors `t * (1, s+1, (s+1)^2, ...)` for `t = 0..count`.
///
/// Dotting with `lambda in Lambda(n, s)` gives distinct exponents, so the
/// evaluation matrix `(v^{t * lambda.w})` is a Vandermonde matrix in distinct powers of `v`.
fn separating_shifts(n: usize, s: i32, count: usize) -> Vec<Vec<i32>> {
    let base: Vec<i32> = (0..n).map(|i| (s + 1).pow(i as u32)).collect();
    (0..count as i32)
        .map(|t| base.iter().map(|b| b * t).collect())
        .collect()
}

/// Rewrites `x` as a combination of long elements.
///
/// Terms are grouped by their off-diagonal part; each group of `m` standard basis elements is
/// matched against `m` long elements with separating shifts. The result is one representative:
/// long elements at fixed `r` are linearly dependent.
pub fn long_decompose(x: &SchurElement) -> Result<LongCombination, GroupError> {
    let (n, r) = (x.n(), x.r());
    let mut groups: BTreeMap<PlusMinusMatrix, Vec<(Vec<i32>, RatFun)>> = BTreeMap::new();
    for (m, c) in x.terms() {
        let (a, diag) = PlusMinusMatrix::split(m);
        groups.entry(a).or_default().push((diag, c.clone()));
    }
    let mut out = LongCombination::zero(n, r);
    for (a, entries) in groups {
        let free = r - a.size();
        let lams = compositions(n, free);
        let shifts = separating_shifts(n, free, lams.len());
        let matrix: linalg::RatMatrix = lams
            .iter()
            .map(|lam| shifts.iter().map(|j| RatFun::v_pow(lam.dot(j))).collect())
            .collect();
        let rhs: Vec<RatFun> = lams
            .iter()
            .map(|lam| {
                entries
                    .iter()
                    .find(|(d, _)| d == lam.parts())
                    .map_or_else(RatFun::zero, |(_, c)| c.clone())
            })
            .collect();
        let sol = linalg::solve(&matrix, &rhs)
            .ok_or_else(|| GroupError::Decomposition(format!("singular shift system for {a}")))?;
        for (j, c) in shifts.into_iter().zip(sol) {
            out.add_term(a.clone(), j, &c);
        }
    }
    if out.expand() != *x {
        return Err(GroupError::Decomposition(format!(
            "re-expansion mismatch for {x}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcombinat::Composition;

    #[test]
    fn zero_shift_of_the_zero_matrix_is_the_identity() {
        for r in 1..=3 {
            assert_eq!(
                expand_long(&PlusMinusMatrix::zero(2), &[0, 0], r),
                SchurElement::identity(2, r)
            );
        }
    }

    #[test]
    fn rank_one_shift() {
        let x = expand_long(&PlusMinusMatrix::zero(2), &[1, 0], 1);
        let mut y = SchurElement::zero(2, 1);
        y.add_term(
            SuperMatrix::diag(&Composition(vec![1, 0])),
            &RatFun::v_pow(1),
        );
        y.add_term(SuperMatrix::diag(&Composition(vec![0, 1])), &RatFun::one());
        assert_eq!(x, y);
    }

    #[test]
    fn full_size_is_a_single_basis_element_and_oversize_is_zero() {
        let a = PlusMinusMatrix::try_new(IMat::unit(2, 1, 2), IMat::unit(2, 2, 2)).unwrap();
        assert_eq!(
            expand_long(&a, &[5, -3], 2),
            SchurElement::basis(a.matrix())
        );
        assert!(expand_long(&a, &[0, 0], 1).is_zero());
    }

    #[test]
    fn even_diagonal_is_rejected() {
        assert!(PlusMinusMatrix::try_new(IMat::unit(2, 1, 1), IMat::zero(2)).is_none());
    }
}
