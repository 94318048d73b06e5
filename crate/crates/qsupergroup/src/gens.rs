//! The generators `G_i^{±1}, G_i-bar, X_h, X_h-bar, Y_h, Y_h-bar` as long elements.

use std::fmt;
use std::str::FromStr;

use qcombinat::IMat;
use qschur::SchurElement;
use serde::{Deserialize, Serialize};

use crate::long::{expand_long, PlusMinusMatrix};
use crate::GroupError;

/// A generator symbol; `i` ranges over `[1, n]` and `h` over `[1, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "gen", content = "index")]
pub enum GenSymbol {
    K(usize),
    KInv(usize),
    KOdd(usize),
    E(usize),
    EOdd(usize),
    F(usize),
    FOdd(usize),
}

impl GenSymbol {
    pub fn index(&self) -> usize {
        match *self {
            GenSymbol::K(i)
            | GenSymbol::KInv(i)
            | GenSymbol::KOdd(i)
            | GenSymbol::E(i)
            | GenSymbol::EOdd(i)
            | GenSymbol::F(i)
            | GenSymbol::FOdd(i) => i,
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(
            self,
            GenSymbol::KOdd(_) | GenSymbol::EOdd(_) | GenSymbol::FOdd(_)
        )
    }

    /// Every generator for `n`.
    pub fn all(n: usize) -> Vec<GenSymbol> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.extend([GenSymbol::K(i), GenSymbol::KInv(i), GenSymbol::KOdd(i)]);
        }
        for h in 1..n {
            out.extend([
                GenSymbol::E(h),
                GenSymbol::EOdd(h),
                GenSymbol::F(h),
                GenSymbol::FOdd(h),
            ]);
        }
        out
    }

    pub fn check(&self, n: usize) -> Result<(), GroupError> {
        let top = match self {
            GenSymbol::K(_) | GenSymbol::KInv(_) | GenSymbol::KOdd(_) => n,
            _ => n - 1,
        };
        let i = self.index();
        if i == 0 || i > top {
            return Err(GroupError::Shape(format!(
                "{self} needs an index in [1, {top}]"
            )));
        }
        Ok(())
    }

    /// The long element `(A0 | A1)(j)` representing this generator.
    pub fn long_form(&self, n: usize) -> Result<(PlusMinusMatrix, Vec<i32>), GroupError> {
        self.check(n)?;
        let zero = IMat::zero(n);
        let mut j = vec![0; n];
        let (a0, a1) = match *self {
            GenSymbol::K(i) => {
                j[i - 1] = 1;
                (zero.clone(), zero)
            }
            GenSymbol::KInv(i) => {
                j[i - 1] = -1;
                (zero.clone(), zero)
            }
            GenSymbol::KOdd(i) => (zero, IMat::unit(n, i, i)),
            GenSymbol::E(h) => (IMat::unit(n, h, h + 1), zero),
            GenSymbol::EOdd(h) => (zero, IMat::unit(n, h, h + 1)),
            GenSymbol::F(h) => (IMat::unit(n, h + 1, h), zero),
            GenSymbol::FOdd(h) => (zero, IMat::unit(n, h + 1, h)),
        };
        Ok((
            PlusMinusMatrix::try_new(a0, a1).expect("generator matrices are valid"),
            j,
        ))
    }

    /// The image of the generator in `Q^s_v(n, r)`.
    pub fn image(&self, n: usize, r: i32) -> Result<SchurElement, GroupError> {
        let (a, j) = self.long_form(n)?;
        Ok(expand_long(&a, &j, r))
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSymbol::K(i) => write!(f, "K{i}"),
            GenSymbol::KInv(i) => write!(f, "K{i}^-1"),
            GenSymbol::KOdd(i) => write!(f, "Kbar{i}"),
            GenSymbol::E(h) => write!(f, "E{h}"),
            GenSymbol::EOdd(h) => write!(f, "Ebar{h}"),
            GenSymbol::F(h) => write!(f, "F{h}"),
            GenSymbol::FOdd(h) => write!(f, "Fbar{h}"),
        }
    }
}

impl FromStr for GenSymbol {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::Shape(format!("unknown generator {s:?}"));
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let split = body.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let i: usize = body[split..].parse().map_err(|_| bad())?;
        Ok(match (&body[..split], inv) {
            ("K", false) => GenSymbol::K(i),
            ("K", true) => GenSymbol::KInv(i),
            ("Kbar", false) => GenSymbol::KOdd(i),
            ("E", false) => GenSymbol::E(i),
            ("Ebar", false) => GenSymbol::EOdd(i),
            ("F", false) => GenSymbol::F(i),
            ("Fbar", false) => GenSymbol::FOdd(i),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in GenSymbol::all(3) {
            assert_eq!(g.to_string().parse::<GenSymbol>().unwrap(), g);
        }
        assert!("Q1".parse::<GenSymbol>().is_err());
        assert!("E1^-1".parse::<GenSymbol>().is_err());
    }

    #[test]
    fn index_ranges() {
        assert!(GenSymbol::E(2).check(2).is_err());
        assert!(GenSymbol::KOdd(2).check(2).is_ok());
        assert!(GenSymbol::K(0).check(2).is_err());
        assert_eq!(GenSymbol::all(2).len(), 10);
    }
}
