//! Elements of `Q^s_v(n, r)` in the standard basis `[A*]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use qcoeff::RatFun;
use qcombinat::{compositions, IMat, SuperMatrix};
use serde::{Deserialize, Serialize};

/// A finite combination `sum c_A [A*]` over `A* in M_n(N|N2)_r`.
///
/// Terms indexed by out-of-range matrices (a negative entry, or an odd entry above 1)
/// are dropped on insertion; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurElement {
    n: usize,
    r: i32,
    terms: BTreeMap<SuperMatrix, RatFun>,
}

impl SchurElement {
    pub fn zero(n: usize, r: i32) -> Self {
        SchurElement {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `[A*]`.
    pub fn basis(a: &SuperMatrix) -> Self {
        let mut x = Self::zero(a.n(), a.size());
        x.terms.insert(a.clone(), RatFun::one());
        x
    }

    /// `sum_{lambda in Lambda(n, r)} [lambda | O]`.
    pub fn identity(n: usize, r: i32) -> Self {
        let mut x = Self::zero(n, r);
        for lam in compositions(n, r) {
            x.terms.insert(SuperMatrix::diag(&lam), RatFun::one());
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> i32 {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<SuperMatrix, RatFun> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &SuperMatrix) -> RatFun {
        self.terms.get(a).cloned().unwrap_or_else(RatFun::zero)
    }

    /// Adds `c [A*]`; panics if `A*` has the wrong size.
    pub fn add_term(&mut self, a: SuperMatrix, c: &RatFun) {
        assert!(
            a.n() == self.n && a.size() == self.r,
            "term {a} does not belong to Q(n={}, r={})",
            self.n,
            self.r
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
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

    /// Adds `c [A0 | A1]`, treating an out-of-range pair as zero.
    pub fn add_raw(&mut self, a0: IMat, a1: IMat, c: &RatFun) {
        if let Some(a) = SuperMatrix::try_new(a0, a1) {
            self.add_term(a, c);
        }
    }

    fn check(&self, o: &Self) {
        assert!(
            self.n == o.n && self.r == o.r,
            "mixing Q({}, {}) with Q({}, {})",
            self.n,
            self.r,
            o.n,
            o.r
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let mut x = self.clone();
        for (a, c) in &o.terms {
            x.add_term(a.clone(), c);
        }
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&RatFun::from_int(-1))
    }

    pub fn scale(&self, s: &RatFun) -> Self {
        if s.is_zero() {
            return Self::zero(self.n, self.r);
        }
        SchurElement {
            n: self.n,
            r: self.r,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * s)).collect(),
        }
    }

    /// Keeps the terms whose matrix satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(&SuperMatrix) -> bool) -> Self {
        SchurElement {
            n: self.n,
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| keep(a))
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.terms.values().all(RatFun::is_laurent)
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let simple = c.is_laurent() && c.num().terms().len() == 1;
            let neg = simple && text.starts_with('-');
            let body = if neg { &text[1..] } else { &text[..] };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coef = if body == "1" {
                String::new()
            } else if simple {
                format!("{body}*")
            } else {
                format!("({body})*")
            };
            write!(f, "{sep}{coef}{a}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    matrix: SuperMatrix,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    r: i32,
    terms: Vec<TermJson>,
}

impl Serialize for SchurElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| TermJson {
                matrix: a.clone(),
                coeff: c.to_string(),
            })
            .collect();
        ElementJson {
            n: self.n,
            r: self.r,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = ElementJson::deserialize(d)?;
        let mut x = SchurElement::zero(j.n, j.r);
        for t in j.terms {
            if t.matrix.n() != j.n || t.matrix.size() != j.r {
                return Err(D::Error::custom(format!(
                    "term {} outside Q({}, {})",
                    t.matrix, j.n, j.r
                )));
            }
            let c: RatFun = t.coeff.parse().map_err(D::Error::custom)?;
            x.add_term(t.matrix, &c);
        }
        Ok(x)
    }
}
