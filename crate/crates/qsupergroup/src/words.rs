//! Generator words evaluated in `Q^s_v(n, r)` and the defining-relation suite.

use std::collections::BTreeMap;

use qcoeff::RatFun;
use qcombinat::SuperMatrix;
use qschur::{oracle_product, SchurElement, SchurError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gens::GenSymbol;
use crate::GroupError;

/// A word `Z_1^{e_1} Z_2^{e_2} ...`, multiplied left to right.
pub type Word = Vec<(GenSymbol, u32)>;

/// Product of two standard basis elements; the suite is generic over it so a perturbed
/// table can be plugged in.
pub type BasisProduct =
    dyn Fn(&SuperMatrix, &SuperMatrix) -> Result<SchurElement, SchurError> + Sync;

/// Bilinear extension of a basis product.
pub fn mul_with(
    product: &BasisProduct,
    x: &SchurElement,
    y: &SchurElement,
) -> Result<SchurElement, GroupError> {
    let mut out = SchurElement::zero(x.n(), x.r());
    for (b, cb) in x.terms() {
        for (a, ca) in y.terms() {
            if b.co() != a.ro() {
                continue;
            }
            out = out.add(&product(b, a)?.scale(&(cb * ca)));
        }
    }
    Ok(out)
}

/// Evaluates words with cached generator images.
pub struct Evaluator<'a> {
    n: usize,
    r: i32,
    images: BTreeMap<GenSymbol, SchurElement>,
    product: &'a BasisProduct,
}

impl<'a> Evaluator<'a> {
    pub fn new(n: usize, r: i32, product: &'a BasisProduct) -> Result<Self, GroupError> {
        let images = GenSymbol::all(n)
            .into_iter()
            .map(|z| Ok((z, z.image(n, r)?)))
            .collect::<Result<_, GroupError>>()?;
        Ok(Evaluator {
            n,
            r,
            images,
            product,
        })
    }

    pub fn mul(&self, x: &SchurElement, y: &SchurElement) -> Result<SchurElement, GroupError> {
        mul_with(self.product, x, y)
    }

    pub fn word(&self, w: &[(GenSymbol, u32)]) -> Result<SchurElement, GroupError> {
        let mut acc = SchurElement::identity(self.n, self.r);
        for &(z, e) in w {
            z.check(self.n)?;
            for _ in 0..e {
                acc = self.mul(&acc, &self.images[&z])?;
            }
        }
        Ok(acc)
    }

    pub fn expr(&self, x: &Expr) -> Result<SchurElement, GroupError> {
        let mut out = SchurElement::zero(self.n, self.r);
        for (c, w) in &x.0 {
            out = out.add(&self.word(w)?.scale(c));
        }
        Ok(out)
    }
}

/// The image of a word in `Q^s_v(n, r)` under the oracle product.
pub fn eval_word(word: &[(GenSymbol, u32)], n: usize, r: i32) -> Result<SchurElement, GroupError> {
    Evaluator::new(n, r, &oracle_product)?.word(word)
}

/// A linear combination of words.
#[derive(Clone, Debug, Default)]
pub struct Expr(pub Vec<(RatFun, Word)>);

impl Expr {
    pub fn zero() -> Self {
        Expr(Vec::new())
    }

    pub fn one() -> Self {
        Expr(vec![(RatFun::one(), Vec::new())])
    }

    /// `c * z_1 z_2 ...` with unit exponents.
    pub fn term(c: RatFun, gens: &[GenSymbol]) -> Self {
        Expr(vec![(c, gens.iter().map(|&z| (z, 1)).collect())])
    }

    pub fn word(gens: &[GenSymbol]) -> Self {
        Self::term(RatFun::one(), gens)
    }

    pub fn plus(mut self, o: Expr) -> Self {
        self.0.extend(o.0);
        self
    }

    pub fn minus(self, o: Expr) -> Self {
        self.plus(o.scale(&-RatFun::one()))
    }

    pub fn scale(self, s: &RatFun) -> Self {
        Expr(self.0.into_iter().map(|(c, w)| (&c * s, w)).collect())
    }
}

/// One instance of a defining relation `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub indices: BTreeMap<String, usize>,
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of the relation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationResult {
    pub relation: String,
    pub indices: BTreeMap<String, usize>,
    pub r: i32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
}

fn v(k: i64) -> RatFun {
    RatFun::v_pow(k)
}

fn vmv() -> RatFun {
    v(1) - v(-1)
}

fn inv(x: RatFun) -> RatFun {
    x.inv().expect("nonzero constant")
}

struct Builder {
    out: Vec<Relation>,
}

impl Builder {
    fn push(&mut self, name: &str, idx: &[(&str, usize)], lhs: Expr, rhs: Expr) {
        let indices = idx.iter().map(|&(k, x)| (k.to_string(), x)).collect();
        self.out.push(Relation {
            name: name.to_string(),
            indices,
            lhs,
            rhs,
        });
    }
}

/// `x y - c y x` (or `+ c y x` when `anti`).
fn twisted(c: RatFun, x: GenSymbol, y: GenSymbol, anti: bool) -> Expr {
    let s = if anti { c } else { -c };
    Expr::word(&[x, y]).plus(Expr::term(s, &[y, x]))
}

/// `c x y - y x` (or `+ y x` when `anti`).
fn twisted_left(c: RatFun, x: GenSymbol, y: GenSymbol, anti: bool) -> Expr {
    let s = if anti { RatFun::one() } else { -RatFun::one() };
    Expr::term(c, &[x, y]).plus(Expr::term(s, &[y, x]))
}

fn serre(i: GenSymbol, j: GenSymbol) -> Expr {
    Expr(vec![
        (RatFun::one(), vec![(i, 2), (j, 1)]),
        (-(v(1) + v(-1)), vec![(i, 1), (j, 1), (i, 1)]),
        (RatFun::one(), vec![(j, 1), (i, 2)]),
    ])
}

/// Every instance of the defining relations for `n`.
pub fn relations(n: usize) -> Vec<Relation> {
    use GenSymbol::*;
    let mut b = Builder { out: Vec::new() };
    let zero = Expr::zero;
    let one = RatFun::one;
    let alpha = |i: usize, j: usize| -> i64 { (i == j) as i64 - (i == j + 1) as i64 };

    for i in 1..=n {
        b.push(
            "QQ1.1",
            &[("i", i)],
            Expr::word(&[K(i), KInv(i)]),
            Expr::one(),
        );
        b.push(
            "QQ1.2",
            &[("i", i)],
            Expr::word(&[KInv(i), K(i)]),
            Expr::one(),
        );
        for j in 1..=n {
            if i < j {
                b.push(
                    "QQ1.3",
                    &[("i", i), ("j", j)],
                    twisted(one(), K(i), K(j), false),
                    zero(),
                );
            }
            b.push(
                "QQ1.4",
                &[("i", i), ("j", j)],
                twisted(one(), K(i), KOdd(j), false),
                zero(),
            );
            if i <= j {
                let rhs = if i == j {
                    Expr(vec![(one(), vec![(K(i), 2)]), (-one(), vec![(KInv(i), 2)])])
                        .scale(&(RatFun::from_int(2) * inv(v(2) - v(-2))))
                } else {
                    zero()
                };
                b.push(
                    "QQ1.5",
                    &[("i", i), ("j", j)],
                    twisted(one(), KOdd(i), KOdd(j), true),
                    rhs,
                );
            }
        }
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            let a = alpha(i, j);
            b.push("QQ2.1", &idx, twisted(v(a), K(i), E(j), false), zero());
            b.push("QQ2.2", &idx, twisted(v(a), K(i), EOdd(j), false), zero());
            b.push("QQ2.3", &idx, twisted(v(-a), K(i), F(j), false), zero());
            b.push("QQ2.4", &idx, twisted(v(-a), K(i), FOdd(j), false), zero());
        }
    }

    for i in 1..=n {
        let idx = [("i", i)];
        if i < n {
            b.push(
                "QQ3.1",
                &idx,
                twisted(v(1), KOdd(i), E(i), false),
                Expr::word(&[EOdd(i), KInv(i)]),
            );
            b.push(
                "QQ3.3",
                &idx,
                twisted(v(1), KOdd(i), F(i), false),
                Expr::term(-one(), &[FOdd(i), K(i)]),
            );
            b.push(
                "QQ3.5",
                &idx,
                twisted(v(1), KOdd(i), EOdd(i), true),
                Expr::word(&[E(i), KInv(i)]),
            );
            b.push(
                "QQ3.7",
                &idx,
                twisted(v(1), KOdd(i), FOdd(i), true),
                Expr::word(&[F(i), K(i)]),
            );
        }
        if i > 1 {
            let h = i - 1;
            b.push(
                "QQ3.2",
                &idx,
                twisted_left(v(1), KOdd(i), E(h), false),
                Expr::term(-one(), &[KInv(i), EOdd(h)]),
            );
            b.push(
                "QQ3.4",
                &idx,
                twisted_left(v(1), KOdd(i), F(h), false),
                Expr::word(&[K(i), FOdd(h)]),
            );
            b.push(
                "QQ3.6",
                &idx,
                twisted_left(v(1), KOdd(i), EOdd(h), true),
                Expr::word(&[KInv(i), E(h)]),
            );
            b.push(
                "QQ3.8",
                &idx,
                twisted_left(v(1), KOdd(i), FOdd(h), true),
                Expr::word(&[K(i), F(h)]),
            );
        }
        for j in (1..n).filter(|&j| j != i && j + 1 != i) {
            let idx = [("i", i), ("j", j)];
            b.push("QQ3.9", &idx, twisted(one(), KOdd(i), E(j), false), zero());
            b.push("QQ3.10", &idx, twisted(one(), KOdd(i), F(j), false), zero());
            b.push(
                "QQ3.11",
                &idx,
                twisted(one(), KOdd(i), EOdd(j), true),
                zero(),
            );
            b.push(
                "QQ3.12",
                &idx,
                twisted(one(), KOdd(i), FOdd(j), true),
                zero(),
            );
        }
    }

    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            let same = i == j;
            let when = |x: Expr| if same { x } else { zero() };
            b.push(
                "QQ4.1",
                &idx,
                twisted(one(), E(i), F(j), false),
                when(
                    Expr::word(&[K(i), KInv(i + 1)])
                        .minus(Expr::word(&[KInv(i), K(i + 1)]))
                        .scale(&inv(vmv())),
                ),
            );
            b.push(
                "QQ4.2",
                &idx,
                twisted(one(), EOdd(i), FOdd(j), true),
                when(
                    Expr::word(&[K(i), K(i + 1)])
                        .minus(Expr::word(&[KInv(i), KInv(i + 1)]))
                        .scale(&inv(vmv()))
                        .plus(Expr::term(vmv(), &[KOdd(i), KOdd(i + 1)])),
                ),
            );
            b.push(
                "QQ4.3",
                &idx,
                twisted(one(), E(i), FOdd(j), false),
                when(
                    Expr::word(&[KInv(i + 1), KOdd(i)]).minus(Expr::word(&[KOdd(i + 1), KInv(i)])),
                ),
            );
            b.push(
                "QQ4.4",
                &idx,
                twisted(one(), EOdd(i), F(j), false),
                when(Expr::word(&[K(i + 1), KOdd(i)]).minus(Expr::word(&[KOdd(i + 1), K(i)]))),
            );
        }
    }

    let ratio = (v(1) - v(-1)) * inv(v(1) + v(-1));
    for i in 1..n {
        let idx = [("i", i)];
        b.push(
            "QQ5.1",
            &idx,
            Expr(vec![(one(), vec![(EOdd(i), 2)])]),
            Expr(vec![(-ratio.clone(), vec![(E(i), 2)])]),
        );
        b.push(
            "QQ5.2",
            &idx,
            Expr(vec![(one(), vec![(FOdd(i), 2)])]),
            Expr(vec![(ratio.clone(), vec![(F(i), 2)])]),
        );
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if i.abs_diff(j) != 1 {
                b.push("QQ5.3", &idx, twisted(one(), E(i), EOdd(j), false), zero());
                b.push("QQ5.4", &idx, twisted(one(), F(i), FOdd(j), false), zero());
            }
            if i.abs_diff(j) > 1 {
                b.push("QQ5.5", &idx, twisted(one(), E(i), E(j), false), zero());
                b.push("QQ5.6", &idx, twisted(one(), F(i), F(j), false), zero());
                b.push(
                    "QQ5.7",
                    &idx,
                    twisted(one(), EOdd(i), EOdd(j), true),
                    zero(),
                );
                b.push(
                    "QQ5.8",
                    &idx,
                    twisted(one(), FOdd(i), FOdd(j), true),
                    zero(),
                );
            }
        }
        if i + 1 < n {
            let k = i + 1;
            b.push(
                "QQ5.9",
                &idx,
                twisted(v(1), E(i), E(k), false),
                twisted(v(1), EOdd(i), EOdd(k), true),
            );
            b.push(
                "QQ5.10",
                &idx,
                twisted(v(1), E(i), EOdd(k), false),
                twisted(v(1), EOdd(i), E(k), false),
            );
            b.push(
                "QQ5.11",
                &idx,
                twisted(v(1), F(i), F(k), false),
                twisted(v(1), FOdd(i), FOdd(k), true).scale(&-one()),
            );
            b.push(
                "QQ5.12",
                &idx,
                twisted(v(1), F(i), FOdd(k), false),
                twisted(v(1), FOdd(i), F(k), false),
            );
        }
    }

    for i in 1..n {
        for j in (1..n).filter(|&j| i.abs_diff(j) == 1) {
            let idx = [("i", i), ("j", j)];
            b.push("QQ6.1", &idx, serre(E(i), E(j)), zero());
            b.push("QQ6.2", &idx, serre(F(i), F(j)), zero());
            b.push("QQ6.3", &idx, serre(E(i), EOdd(j)), zero());
            b.push("QQ6.4", &idx, serre(F(i), FOdd(j)), zero());
        }
    }
    b.out
}

/// Checks one relation in degree `r`.
pub fn check_relation(ev: &Evaluator<'_>, rel: &Relation) -> Result<RelationResult, GroupError> {
    let diff = ev.expr(&rel.lhs)?.sub(&ev.expr(&rel.rhs)?);
    let pass = diff.is_zero();
    Ok(RelationResult {
        relation: rel.name.clone(),
        indices: rel.indices.clone(),
        r: ev.r,
        status: if pass { Status::Pass } else { Status::Fail },
        counterexample: (!pass).then(|| format!("lhs - rhs = {diff}")),
    })
}

/// Every relation instance for `n`, checked in degree `r` with the given basis product.
pub fn relation_suite_with(
    n: usize,
    r: i32,
    product: &BasisProduct,
) -> Result<Vec<RelationResult>, GroupError> {
    if n < 2 || r < 1 {
        return Err(GroupError::Shape(format!(
            "relation suite needs n >= 2 and r >= 1, got n={n}, r={r}"
        )));
    }
    let ev = Evaluator::new(n, r, product)?;
    relations(n)
        .par_iter()
        .map(|rel| check_relation(&ev, rel))
        .collect()
}

/// [`relation_suite_with`] using the oracle product.
pub fn relation_suite(n: usize, r: i32) -> Result<Vec<RelationResult>, GroupError> {
    relation_suite_with(n, r, &oracle_product)
}
