//! The generator-shaped basis elements used on the left of the multiplication formulas.

use qcombinat::{Composition, IMat, SuperMatrix};
use serde::{Deserialize, Serialize};

use crate::SchurError;

/// Left factors of the standard multiplication formulas.
///
/// Every shape has column weight `lambda` (`mu` for the diagonal shape), so `[shape][A*]`
/// vanishes unless that weight equals `ro(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorShape {
    /// `(mu | O)`.
    D { mu: Composition },
    /// `(lambda + E_{h,h+1} - E_{h+1,h+1} | O)`.
    E { h: usize, lambda: Composition },
    /// `(lambda - E_{h,h} + E_{h+1,h} | O)`.
    F { h: usize, lambda: Composition },
    /// `(lambda - E_{i,i} | E_{i,i})`.
    DOdd { i: usize, lambda: Composition },
    /// `(lambda - E_{h+1,h+1} | E_{h,h+1})`.
    EOdd { h: usize, lambda: Composition },
    /// `(lambda - E_{h,h} | E_{h+1,h})`.
    FOdd { h: usize, lambda: Composition },
    /// `(lambda + p E_{h,h+1} - p E_{h+1,h+1} | O)`.
    EPow {
        h: usize,
        lambda: Composition,
        p: i32,
    },
    /// `(lambda + p E_{h+1,h} - p E_{h,h} | O)`.
    FPow {
        h: usize,
        lambda: Composition,
        p: i32,
    },
}

impl GeneratorShape {
    /// The weight that must equal `ro(A)` for a nonzero product.
    pub fn weight(&self) -> &Composition {
        match self {
            GeneratorShape::D { mu } => mu,
            GeneratorShape::E { lambda, .. }
            | GeneratorShape::F { lambda, .. }
            | GeneratorShape::DOdd { lambda, .. }
            | GeneratorShape::EOdd { lambda, .. }
            | GeneratorShape::FOdd { lambda, .. }
            | GeneratorShape::EPow { lambda, .. }
            | GeneratorShape::FPow { lambda, .. } => lambda,
        }
    }

    /// Row index `h` (or `i`), if the shape has one.
    pub fn row(&self) -> Option<usize> {
        match *self {
            GeneratorShape::D { .. } => None,
            GeneratorShape::E { h, .. }
            | GeneratorShape::F { h, .. }
            | GeneratorShape::EOdd { h, .. }
            | GeneratorShape::FOdd { h, .. }
            | GeneratorShape::EPow { h, .. }
            | GeneratorShape::FPow { h, .. } => Some(h),
            GeneratorShape::DOdd { i, .. } => Some(i),
        }
    }

    /// The super-matrix of the shape, or an error if some entry leaves `M_n(N|N2)`.
    pub fn matrix(&self) -> Result<SuperMatrix, SchurError> {
        let n = self.weight().len();
        let lam = self.weight().as_diag();
        let check_h = |h: usize, top: usize| {
            if h == 0 || h > top {
                Err(SchurError::Shape(format!(
                    "row index {h} outside [1, {top}]"
                )))
            } else {
                Ok(())
            }
        };
        let zero = IMat::zero(n);
        let (a0, a1) = match *self {
            GeneratorShape::D { .. } => (lam, zero),
            GeneratorShape::E { h, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h, h + 1, 1).plus(h + 1, h + 1, -1), zero)
            }
            GeneratorShape::F { h, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h, h, -1).plus(h + 1, h, 1), zero)
            }
            GeneratorShape::DOdd { i, .. } => {
                check_h(i, n)?;
                (lam.plus(i, i, -1), IMat::unit(n, i, i))
            }
            GeneratorShape::EOdd { h, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h + 1, h + 1, -1), IMat::unit(n, h, h + 1))
            }
            GeneratorShape::FOdd { h, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h, h, -1), IMat::unit(n, h + 1, h))
            }
            GeneratorShape::EPow { h, p, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h, h + 1, p).plus(h + 1, h + 1, -p), zero)
            }
            GeneratorShape::FPow { h, p, .. } => {
                check_h(h, n - 1)?;
                (lam.plus(h + 1, h, p).plus(h, h, -p), zero)
            }
        };
        if matches!(self, GeneratorShape::EPow { p, .. } | GeneratorShape::FPow { p, .. } if *p < 0)
        {
            return Err(SchurError::Shape(format!(
                "negative divided power in {self:?}"
            )));
        }
        SuperMatrix::try_new(a0, a1)
            .ok_or_else(|| SchurError::Shape(format!("{self:?} has no valid matrix")))
    }

    /// All shapes of every kind (divided powers excluded) whose matrix lies in `M_n(N|N2)_r`
    /// and whose weight is `lambda`.
    pub fn all_for_weight(lambda: &Composition) -> Vec<GeneratorShape> {
        let n = lambda.len();
        let mut out = vec![GeneratorShape::D { mu: lambda.clone() }];
        for i in 1..=n {
            out.push(GeneratorShape::DOdd {
                i,
                lambda: lambda.clone(),
            });
        }
        for h in 1..n {
            out.push(GeneratorShape::E {
                h,
                lambda: lambda.clone(),
            });
            out.push(GeneratorShape::F {
                h,
                lambda: lambda.clone(),
            });
            out.push(GeneratorShape::EOdd {
                h,
                lambda: lambda.clone(),
            });
            out.push(GeneratorShape::FOdd {
                h,
                lambda: lambda.clone(),
            });
        }
        out.retain(|s| s.matrix().is_ok());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_have_column_weight_lambda() {
        let lam = Composition(vec![1, 2]);
        for s in GeneratorShape::all_for_weight(&lam) {
            assert_eq!(s.matrix().unwrap().co(), lam, "{s:?}");
        }
        let s = GeneratorShape::EPow {
            h: 1,
            lambda: lam.clone(),
            p: 2,
        };
        assert_eq!(s.matrix().unwrap().co(), lam);
        assert_eq!(s.matrix().unwrap().ro(), Composition(vec![3, 0]));
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        let lam = Composition(vec![1, 0]);
        assert!(GeneratorShape::E {
            h: 1,
            lambda: lam.clone()
        }
        .matrix()
        .is_err());
        assert!(GeneratorShape::DOdd {
            i: 2,
            lambda: lam.clone()
        }
        .matrix()
        .is_err());
        assert!(GeneratorShape::F { h: 2, lambda: lam }.matrix().is_err());
    }
}
