//! Monomials in the generator-shaped basis elements, their leading terms, and the
//! monomial-to-standard transition matrix.

use qcoeff::{linalg, RatFun};
use qcombinat::{
    col_tilde, order_cmp_star, super_matrices, Composition, OrderVerdict, SuperMatrix,
};
use qschur::{oracle_product, GeneratorShape, SchurElement};
use serde::{Deserialize, Serialize};

use crate::GroupError;

/// Positions `(i, j)` in application order: upper entries from `(1,2)` down the order, then
/// diagonals from `(n,n)` to `(1,1)`, then lower entries ending with `(2,1)`.
pub fn application_order(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            out.push((i, j));
        }
    }
    for i in (1..=n).rev() {
        out.push((i, i));
    }
    for j in (1..n).rev() {
        for i in (j + 1..=n).rev() {
            out.push((i, j));
        }
    }
    out
}

/// The shaped factors of the monomial of `a`, in application order (rightmost first).
/// Each factor's weight is the row weight of the partial product it multiplies.
pub fn monomial_factors(a: &SuperMatrix) -> Result<Vec<GeneratorShape>, GroupError> {
    let n = a.n();
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let mut gamma = b.co();
    let mut out = vec![GeneratorShape::D { mu: gamma.clone() }];
    let mut push = |shape: GeneratorShape, gamma: &mut Composition| -> Result<(), GroupError> {
        *gamma = shape.matrix()?.ro();
        out.push(shape);
        Ok(())
    };
    for (i, j) in application_order(n) {
        let total = b.at(i, j);
        if total == 0 {
            continue;
        }
        if i < j {
            for h in (i + 1..j).rev() {
                push(
                    GeneratorShape::EPow {
                        h,
                        lambda: gamma.clone(),
                        p: total,
                    },
                    &mut gamma,
                )?;
            }
            if a0.at(i, j) > 0 {
                push(
                    GeneratorShape::EPow {
                        h: i,
                        lambda: gamma.clone(),
                        p: a0.at(i, j),
                    },
                    &mut gamma,
                )?;
            }
            for _ in 0..a1.at(i, j) {
                push(
                    GeneratorShape::EOdd {
                        h: i,
                        lambda: gamma.clone(),
                    },
                    &mut gamma,
                )?;
            }
        } else if i == j {
            for _ in 0..a1.at(j, j) {
                push(
                    GeneratorShape::DOdd {
                        i: j,
                        lambda: gamma.clone(),
                    },
                    &mut gamma,
                )?;
            }
        } else {
            for h in j..i - 1 {
                push(
                    GeneratorShape::FPow {
                        h,
                        lambda: gamma.clone(),
                        p: total,
                    },
                    &mut gamma,
                )?;
            }
            if a0.at(i, j) > 0 {
                push(
                    GeneratorShape::FPow {
                        h: i - 1,
                        lambda: gamma.clone(),
                        p: a0.at(i, j),
                    },
                    &mut gamma,
                )?;
            }
            for _ in 0..a1.at(i, j) {
                push(
                    GeneratorShape::FOdd {
                        h: i - 1,
                        lambda: gamma.clone(),
                    },
                    &mut gamma,
                )?;
            }
        }
    }
    Ok(out)
}

/// The monomial of `a` evaluated in `Q^s_v(n, r)` with `r = |A|`.
pub fn monomial(a: &SuperMatrix) -> Result<SchurElement, GroupError> {
    let mut acc: Option<SchurElement> = None;
    for shape in monomial_factors(a)? {
        let m = shape.matrix()?;
        acc = Some(match acc {
            None => SchurElement::basis(&m),
            Some(x) => {
                let mut out = SchurElement::zero(a.n(), a.size());
                for (t, c) in x.terms() {
                    out = out.add(&oracle_product(&m, t)?.scale(c));
                }
                out
            }
        });
    }
    Ok(acc.expect("the first factor is always present"))
}

fn sign_pow(sign: i64, vexp: i64) -> RatFun {
    let s = if sign.rem_euclid(2) == 0 { 1 } else { -1 };
    RatFun::from_int(s) * RatFun::v_pow(vexp)
}

/// The leading-coefficient factor contributed by position `(i, j)`.
pub fn factor_lc(a: &SuperMatrix, i: usize, j: usize) -> RatFun {
    let n = a.n();
    let (a1, b) = (a.a1(), a.base());
    let p = a.parity() as i64;
    if i < j || i == n && j == n {
        RatFun::one()
    } else if i == j {
        let odd: i64 = (1..=n)
            .flat_map(|t| (1..=t).map(move |s| (s, t)))
            .filter(|&(_, t)| t > i)
            .map(|(s, t)| a1.at(s, t) as i64)
            .sum();
        let row: i64 = (i + 1..=n).map(|t| b.at(i, t) as i64).sum();
        let d = a1.at(i, i) as i64;
        sign_pow(d * odd, d * row)
    } else {
        let x = a1.at(i, j) as i64;
        sign_pow(
            x * (p - col_tilde(a1, i, j) as i64),
            -(b.at(i, j) as i64) * a1.at(j, j) as i64,
        )
    }
}

/// Product of [`factor_lc`] over all positions.
pub fn leading_coefficient(a: &SuperMatrix) -> RatFun {
    let n = a.n();
    let mut c = RatFun::one();
    for i in 1..=n {
        for j in 1..=n {
            c = c * factor_lc(a, i, j);
        }
    }
    c
}

/// The leading coefficient as one closed sign and power.
pub fn leading_coefficient_aggregate(a: &SuperMatrix) -> RatFun {
    let n = a.n();
    let (a1, b) = (a.a1(), a.base());
    let p = a.parity() as i64;
    let (mut sign, mut vexp) = (0i64, 0i64);
    for k in 1..=n {
        let d = a1.at(k, k) as i64;
        for l in k + 1..=n {
            sign += a1.at(l, k) as i64 * (p - col_tilde(a1, l, k) as i64);
            vexp += d * (b.at(k, l) - b.at(l, k)) as i64;
        }
        for jj in k + 1..=n {
            for ii in 1..=jj {
                sign += d * a1.at(ii, jj) as i64;
            }
        }
    }
    sign_pow(sign, vexp)
}

/// Outcome of comparing a monomial with its expected leading term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularReport {
    pub matrix: SuperMatrix,
    pub leading_coefficient: String,
    pub expected: String,
    pub leading_matches: bool,
    pub aggregate_matches: bool,
    pub lower_terms: usize,
    pub lower_support_ok: bool,
}

impl TriangularReport {
    pub fn passed(&self) -> bool {
        self.leading_matches && self.aggregate_matches && self.lower_support_ok
    }
}

/// Checks `monomial(a) = lc [a] + (terms strictly below a in the refined order)`.
pub fn triangular_check(a: &SuperMatrix) -> Result<TriangularReport, GroupError> {
    let m = monomial(a)?;
    let lead = m.coeff(a);
    let expected = leading_coefficient(a);
    let rest = m.restrict(|t| t != a);
    Ok(TriangularReport {
        matrix: a.clone(),
        leading_coefficient: lead.to_string(),
        expected: expected.to_string(),
        leading_matches: lead == expected,
        aggregate_matches: leading_coefficient_aggregate(a) == expected,
        lower_terms: rest.len(),
        lower_support_ok: rest
            .terms()
            .keys()
            .all(|t| order_cmp_star(t, a) == OrderVerdict::StrictlyLess),
    })
}

/// Monomial-to-standard transition matrix: row `k` holds the coordinates of the monomial of
/// `basis[k]` in the standard basis `basis`. Serialized with canonical coefficient strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TransitionJson", try_from = "TransitionJson")]
pub struct TransitionMatrix {
    pub n: usize,
    pub r: i32,
    pub basis: Vec<SuperMatrix>,
    pub entries: Vec<Vec<RatFun>>,
}

#[derive(Serialize, Deserialize)]
struct TransitionJson {
    n: usize,
    r: i32,
    basis: Vec<SuperMatrix>,
    entries: Vec<Vec<String>>,
}

impl From<TransitionMatrix> for TransitionJson {
    fn from(t: TransitionMatrix) -> Self {
        let entries = t
            .entries
            .iter()
            .map(|row| row.iter().map(RatFun::to_string).collect())
            .collect();
        TransitionJson {
            n: t.n,
            r: t.r,
            basis: t.basis,
            entries,
        }
    }
}

impl TryFrom<TransitionJson> for TransitionMatrix {
    type Error = String;

    fn try_from(j: TransitionJson) -> Result<Self, String> {
        let k = j.basis.len();
        if j.entries.len() != k || j.entries.iter().any(|row| row.len() != k) {
            return Err(format!("transition matrix is not {k} x {k}"));
        }
        let entries = j
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.parse::<RatFun>().map_err(|e| e.to_string()))
                    .collect()
            })
            .collect::<Result<_, String>>()?;
        Ok(TransitionMatrix {
            n: j.n,
            r: j.r,
            basis: j.basis,
            entries,
        })
    }
}

impl TransitionMatrix {
    pub fn build(n: usize, r: i32) -> Result<Self, GroupError> {
        let basis = super_matrices(n, r);
        let entries = basis
            .iter()
            .map(|a| {
                let m = monomial(a)?;
                Ok(basis.iter().map(|b| m.coeff(b)).collect())
            })
            .collect::<Result<_, GroupError>>()?;
        Ok(TransitionMatrix {
            n,
            r,
            basis,
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn determinant(&self) -> RatFun {
        linalg::determinant(&self.entries)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcombinat::IMat;

    #[test]
    fn application_order_for_four() {
        let order = application_order(4);
        assert_eq!(order.len(), 16);
        assert_eq!(order[..4], [(1, 2), (1, 3), (2, 3), (1, 4)]);
        assert_eq!(order[6..10], [(4, 4), (3, 3), (2, 2), (1, 1)]);
        assert_eq!(order[15], (2, 1));
        assert_eq!(order[10], (4, 3));
    }

    #[test]
    fn even_diagonal_monomial_is_the_idempotent() {
        let a = SuperMatrix::diag(&Composition(vec![2, 1]));
        assert_eq!(monomial(&a).unwrap(), SchurElement::basis(&a));
        assert!(leading_coefficient(&a).is_one());
    }

    #[test]
    fn single_odd_diagonal_entry() {
        let a = SuperMatrix::new(IMat::zero(2), IMat::unit(2, 1, 1)).unwrap();
        assert_eq!(monomial(&a).unwrap(), SchurElement::basis(&a));
        assert!(leading_coefficient(&a).is_one());
    }
}
