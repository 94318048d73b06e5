//! Closed-form multiplication formulas `[shape][A*]` in the standard basis.
//!
//! Terms whose matrix leaves `M_n(N|N2)_r` are dropped (see [`SchurElement::add_raw`]).

use qcoeff::{quantum_binom, quantum_int, LaurentPoly, RatFun};
use qcombinat::{after, col_tilde, exps, lower_left_zero, sdp_row, Composition, IMat, SuperMatrix};

use crate::element::SchurElement;
use crate::oracle::oracle_mul;
use crate::shapes::GeneratorShape;
use crate::SchurError;

fn vp(k: i64) -> LaurentPoly {
    LaurentPoly::v_pow(k)
}

fn sign(e: i64) -> LaurentPoly {
    LaurentPoly::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `[m]`, zero for `m <= 0`.
fn qint(m: i32) -> LaurentPoly {
    quantum_int(m.max(0) as u32)
}

/// `[m]_{v^2}`.
fn qint_sq(m: i32) -> LaurentPoly {
    LaurentPoly::quantum_int_base(m as i64, 2)
}

/// `[m choose 2]`.
fn binom2(m: i32) -> LaurentPoly {
    quantum_binom(m.max(0) as u32, 2)
}

/// `v - v^{-1}`.
fn vmv() -> LaurentPoly {
    vp(1) - vp(-1)
}

/// Accumulates `coef [a0 | a1]` terms with the zero convention.
struct Acc {
    out: SchurElement,
}

impl Acc {
    fn new(a: &SuperMatrix) -> Self {
        Acc {
            out: SchurElement::zero(a.n(), a.size()),
        }
    }

    fn add(&mut self, coef: LaurentPoly, a0: IMat, a1: IMat) {
        if !coef.is_zero() {
            self.out.add_raw(a0, a1, &RatFun::from_laurent(coef));
        }
    }
}

fn check_row(a: &SuperMatrix, h: usize, top: usize) -> Result<(), SchurError> {
    if h == 0 || h > top {
        return Err(SchurError::Shape(format!(
            "row index {h} outside [1, {top}] for {a}"
        )));
    }
    Ok(())
}

/// Even raising: `[E*_{h,ro(A)}][A*]`.
fn even_e(h: usize, a: &SuperMatrix) -> SchurElement {
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let f = exps::f(&b, h, k) as i64;
        acc.add(
            vp(f + a1.at(h + 1, k) as i64) * qint(a0.at(h, k) + 1),
            a0.plus(h, k, 1).plus(h + 1, k, -1),
            a1.clone(),
        );
        acc.add(
            vp(f - a0.at(h + 1, k) as i64),
            a0.clone(),
            a1.plus(h, k, 1).plus(h + 1, k, -1),
        );
        acc.add(
            -(vmv() * vp(f - a0.at(h + 1, k) as i64) * binom2(b.at(h, k) + 1)),
            a0.plus(h, k, 2),
            a1.plus(h, k, -1).plus(h + 1, k, -1),
        );
    }
    acc.out
}

/// Even lowering: `[F*_{h,ro(A)}][A*]`.
fn even_f(h: usize, a: &SuperMatrix) -> SchurElement {
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let g = exps::g(&b, h, k) as i64;
        acc.add(
            vp(g - a1.at(h, k) as i64) * qint(a0.at(h + 1, k) + 1),
            a0.plus(h, k, -1).plus(h + 1, k, 1),
            a1.clone(),
        );
        acc.add(
            vp(g + a0.at(h, k) as i64),
            a0.clone(),
            a1.plus(h, k, -1).plus(h + 1, k, 1),
        );
        acc.add(
            -(vmv() * vp(g + a0.at(h, k) as i64) * binom2(b.at(h + 1, k) + 1)),
            a0.plus(h + 1, k, 2),
            a1.plus(h, k, -1).plus(h + 1, k, -1),
        );
    }
    acc.out
}

/// Head of `[D*_{h-bar,ro(A)}][A*]`; the full product when row `h` satisfies the corner test.
pub fn odd_k_head(h: usize, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    check_row(a, h, a.n())?;
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let p = a.parity() as i64;
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let c = sign(p + col_tilde(a1, h, k) as i64) * vp(exps::d(&b, h, k) as i64);
        acc.add(c.clone(), a0.plus(h, k, -1), a1.plus(h, k, 1));
        acc.add(c * qint_sq(b.at(h, k)), a0.plus(h, k, 1), a1.plus(h, k, -1));
    }
    Ok(acc.out)
}

/// Head of `[E*_{h-bar,ro(A)}][A*]`.
pub fn odd_e_head(h: usize, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    check_row(a, h, a.n() - 1)?;
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let p = a.parity() as i64;
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let c = sign(p) * vp(exps::f(&b, h, k) as i64);
        let s_above = sign(col_tilde(a1, h - 1, k) as i64);
        let s_at = sign(col_tilde(a1, h, k) as i64 + 1);
        let up = vp(a1.at(h + 1, k) as i64);
        acc.add(&c * &s_above * &up, a0.plus(h + 1, k, -1), a1.plus(h, k, 1));
        acc.add(
            &c * &s_at * vp(-(a0.at(h + 1, k) as i64)) * qint(a0.at(h, k) + 1),
            a0.plus(h, k, 1),
            a1.plus(h + 1, k, -1),
        );
        acc.add(
            c * s_above * up * vmv() * binom2(b.at(h, k) + 1),
            a0.plus(h, k, 2).plus(h + 1, k, -1),
            a1.plus(h, k, -1),
        );
    }
    Ok(acc.out)
}

/// Head of `[F*_{h-bar,ro(A)}][A*]`; the full product when row `h` satisfies the corner test.
pub fn odd_f_head(h: usize, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    check_row(a, h, a.n() - 1)?;
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let p = a.parity() as i64;
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let c = sign(p + col_tilde(a1, h, k) as i64) * vp(exps::g_minus(&b, h, k) as i64);
        let down = vp(-(a1.at(h, k) as i64));
        acc.add(&c * &down, a0.plus(h, k, -1), a1.plus(h + 1, k, 1));
        acc.add(
            -(&c * &down * vmv() * binom2(b.at(h + 1, k) + 1)),
            a0.plus(h, k, -1).plus(h + 1, k, 2),
            a1.plus(h + 1, k, -1),
        );
        acc.add(
            c * vp(a0.at(h, k) as i64) * qint(a0.at(h + 1, k) + 1),
            a0.plus(h + 1, k, 1),
            a1.plus(h, k, -1),
        );
    }
    Ok(acc.out)
}

/// The explicit correction `HH(h, A*)` in
/// `[F*_{h-bar}][A*] = head + (v - v^{-1}) HH + (terms with base below some 1-down matrix)`.
///
/// The row-sum exponent for the pair `l < k` is `2 (after(h+1, l) - after(h+1, k-1))`,
/// twice the row `h+1` entries strictly between columns `l` and `k`.
pub fn odd_f_tail_correction(h: usize, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    check_row(a, h, a.n() - 1)?;
    let (a0, a1, b) = (a.a0(), a.a1(), a.base());
    let p = a.parity() as i64;
    let mut acc = Acc::new(a);
    for k in 1..=a.n() {
        let a0_down = a0.plus(h, k, -1).plus(h + 1, k, 1);
        let a1_down = a1.plus(h, k, -1).plus(h + 1, k, 1);
        let a1_both = a1.plus(h, k, -1).plus(h + 1, k, -1);
        let a0_two = a0.plus(h + 1, k, 2);
        for l in 1..k {
            let al = b.at(h + 1, l);
            let e = 2 * (after(&b, h + 1, l) - after(&b, h + 1, k - 1)) as i64
                + exps::g_minus(&b, h, k) as i64
                + al as i64
                + a0.at(h, k) as i64;
            let c = sign(p + col_tilde(a1, h, l) as i64) * vp(e);
            let sq = qint_sq(al);
            let first = &c * vp(-(b.at(h, k) as i64)) * qint(a0.at(h + 1, k) + 1);
            acc.add(
                first.clone(),
                a0_down.plus(h + 1, l, -1),
                a1.plus(h + 1, l, 1),
            );
            acc.add(
                -(first * &sq),
                a0_down.plus(h + 1, l, 1),
                a1.plus(h + 1, l, -1),
            );
            acc.add(c.clone(), a0.plus(h + 1, l, -1), a1_down.plus(h + 1, l, 1));
            acc.add(
                -(&c * &sq),
                a0.plus(h + 1, l, 1),
                a1_down.plus(h + 1, l, -1),
            );
            let third = c * vmv() * binom2(b.at(h + 1, k) + 1);
            acc.add(
                -third.clone(),
                a0_two.plus(h + 1, l, -1),
                a1_both.plus(h + 1, l, 1),
            );
            acc.add(
                third * sq,
                a0_two.plus(h + 1, l, 1),
                a1_both.plus(h + 1, l, -1),
            );
        }
    }
    Ok(acc.out)
}

/// Whether the odd raising formula is exact: for each `k` with `a_{h+1,k} > 0`,
/// the block strictly below row `h` and left of column `k` vanishes.
pub fn odd_e_exact(h: usize, b: &IMat) -> bool {
    (1..=b.n())
        .filter(|&k| b.at(h + 1, k) > 0)
        .all(|k| lower_left_zero(b, h, k))
}

fn check_weight(shape: &GeneratorShape, a: &SuperMatrix) -> Result<bool, SchurError> {
    let m = shape.matrix()?;
    if m.n() != a.n() || m.size() != a.size() {
        return Err(SchurError::Shape(format!(
            "{m} and {a} live in different algebras"
        )));
    }
    Ok(shape.weight() == &a.ro())
}

/// `[shape][A*]` by closed formula.
///
/// Odd shapes are evaluated only where their head is the full product; elsewhere the result is
/// [`SchurError::HeadOnly`]. Divided powers use [`divided_power_product`].
pub fn formula_product(
    shape: &GeneratorShape,
    a: &SuperMatrix,
) -> Result<SchurElement, SchurError> {
    if !check_weight(shape, a)? {
        return Ok(SchurElement::zero(a.n(), a.size()));
    }
    let b = a.base();
    match *shape {
        GeneratorShape::D { .. } => Ok(SchurElement::basis(a)),
        GeneratorShape::E { h, .. } => Ok(even_e(h, a)),
        GeneratorShape::F { h, .. } => Ok(even_f(h, a)),
        GeneratorShape::DOdd { i, .. } => {
            if i == a.n() || sdp_row(&b, i) {
                odd_k_head(i, a)
            } else {
                Err(SchurError::HeadOnly(format!(
                    "row {i} of {a} fails the corner test"
                )))
            }
        }
        GeneratorShape::EOdd { h, .. } => {
            if odd_e_exact(h, &b) {
                odd_e_head(h, a)
            } else {
                Err(SchurError::HeadOnly(format!(
                    "raising at row {h} of {a} has a lower-left obstruction"
                )))
            }
        }
        GeneratorShape::FOdd { h, .. } => {
            if sdp_row(&b, h) {
                odd_f_head(h, a)
            } else {
                Err(SchurError::HeadOnly(format!(
                    "row {h} of {a} fails the corner test"
                )))
            }
        }
        GeneratorShape::EPow { .. } | GeneratorShape::FPow { .. } => {
            divided_power_product(shape, &SchurElement::basis(a))
        }
    }
}

/// Applies an even single-step formula linearly; terms with the wrong row weight vanish.
fn apply_even(raise: bool, h: usize, lambda: &Composition, x: &SchurElement) -> SchurElement {
    let mut out = SchurElement::zero(x.n(), x.r());
    for (m, c) in x.terms() {
        if &m.ro() != lambda {
            continue;
        }
        let y = if raise { even_e(h, m) } else { even_f(h, m) };
        out = out.add(&y.scale(c));
    }
    out
}

/// `[E*_{h,lambda,p}] x` (or the `F` analogue) via
/// `[E*_{h,lambda,p}] = [p]^{-1} [E*_{h,lambda+(p-1)alpha_h}][E*_{h,lambda,p-1}]`, dividing exactly.
pub fn divided_power_product(
    shape: &GeneratorShape,
    x: &SchurElement,
) -> Result<SchurElement, SchurError> {
    let (raise, h, lambda, p) = match shape {
        GeneratorShape::EPow { h, lambda, p } => (true, *h, lambda, *p),
        GeneratorShape::FPow { h, lambda, p } => (false, *h, lambda, *p),
        _ => {
            return Err(SchurError::Shape(format!(
                "{shape:?} is not a divided power"
            )))
        }
    };
    let m = shape.matrix()?;
    if m.n() != x.n() || m.size() != x.r() {
        return Err(SchurError::Shape(format!(
            "{m} does not act on Q({}, {})",
            x.n(),
            x.r()
        )));
    }
    let mut acc = x.restrict(|a| &a.ro() == lambda);
    let mut weight = lambda.clone();
    for step in 1..=p {
        acc = apply_even(raise, h, &weight, &acc);
        weight = if raise {
            weight.plus(h, 1).plus(h + 1, -1)
        } else {
            weight.plus(h, -1).plus(h + 1, 1)
        };
        let q = qint(step);
        let mut divided = SchurElement::zero(x.n(), x.r());
        for (a, c) in acc.terms() {
            let quotient = c
                .as_laurent()
                .and_then(|l| l.div_exact(&q))
                .ok_or_else(|| {
                    SchurError::Decomposition(format!(
                        "coefficient {c} of {a} is not divisible by [{step}]"
                    ))
                })?;
            divided.add_term(a.clone(), &RatFun::from_laurent(quotient));
        }
        acc = divided;
    }
    Ok(acc)
}

/// The four special products of an odd off-diagonal generator with a neighbouring element
/// (`mu` has size `r - 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// `[mu | E_{h,h+1}] [mu + E_{h+1,h} | O]`.
    OddUpEvenDown,
    /// `[mu | E_{h,h+1}] [mu | E_{h+1,h}]`.
    OddUpOddDown,
    /// `[mu | E_{h+1,h}] [mu + E_{h,h+1} | O]`.
    OddDownEvenUp,
    /// `[mu | E_{h+1,h}] [mu | E_{h,h+1}]`.
    OddDownOddUp,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 4] = [
        SpecialCase::OddUpEvenDown,
        SpecialCase::OddUpOddDown,
        SpecialCase::OddDownEvenUp,
        SpecialCase::OddDownOddUp,
    ];
}

/// Returns `(left, right, closed form of left * right)` for a special product.
pub fn special_product(
    case: SpecialCase,
    mu: &Composition,
    h: usize,
) -> Result<(SuperMatrix, SuperMatrix, SchurElement), SchurError> {
    let n = mu.len();
    if h == 0 || h >= n {
        return Err(SchurError::Shape(format!(
            "row index {h} outside [1, {}]",
            n.saturating_sub(1)
        )));
    }
    let d = mu.as_diag();
    let z = IMat::zero(n);
    let up = IMat::unit(n, h, h + 1);
    let down = IMat::unit(n, h + 1, h);
    let sm =
        |a0: IMat, a1: IMat| SuperMatrix::new(a0, a1).map_err(|e| SchurError::Shape(e.to_string()));
    let (left, right) = match case {
        SpecialCase::OddUpEvenDown => (sm(d.clone(), up.clone())?, sm(d.add(&down), z.clone())?),
        SpecialCase::OddUpOddDown => (sm(d.clone(), up.clone())?, sm(d.clone(), down.clone())?),
        SpecialCase::OddDownEvenUp => (sm(d.clone(), down.clone())?, sm(d.add(&up), z.clone())?),
        SpecialCase::OddDownOddUp => (sm(d.clone(), down.clone())?, sm(d.clone(), up.clone())?),
    };
    let (mh, mh1) = (mu.part(h), mu.part(h + 1));
    let mut acc = Acc::new(&left);
    let hh = IMat::unit(n, h, h);
    let h1 = IMat::unit(n, h + 1, h + 1);
    match case {
        SpecialCase::OddUpEvenDown => {
            acc.add(LaurentPoly::one(), d.sub(&h1).add(&down), up.clone());
            acc.add(vp(mh1 as i64), d.clone(), hh.clone());
            acc.add(-(vmv() * qint(mh + 1)), d.sub(&h1).add(&hh), h1.clone());
        }
        SpecialCase::OddUpOddDown => {
            acc.add(vp(mh1 as i64) * qint(mh + 1), d.add(&hh), z.clone());
            acc.add(LaurentPoly::one(), d.sub(&h1), up.add(&down));
            acc.add(-vmv(), d.sub(&h1), hh.add(&h1));
        }
        SpecialCase::OddDownEvenUp => {
            acc.add(LaurentPoly::one(), d.sub(&hh).add(&up), down.clone());
            acc.add(vp(-(mh as i64)), d.clone(), h1.clone());
        }
        SpecialCase::OddDownOddUp => {
            acc.add(-LaurentPoly::one(), d.sub(&hh), up.add(&down));
            acc.add(vp(-(mh as i64)) * qint(mh1 + 1), d.add(&h1), z.clone());
        }
    }
    Ok((left, right, acc.out))
}

fn basis_or_zero(n: usize, r: i32, a0: IMat, a1: IMat) -> SchurElement {
    let mut x = SchurElement::zero(n, r);
    x.add_raw(a0, a1, &RatFun::one());
    x
}

/// Both sides of the two odd-even commutation relations between rows `h` and `h+1`
/// (`lambda` has size `r - 1`), each side evaluated with the oracle.
pub fn relation_sides(
    lambda: &Composition,
    h: usize,
) -> Result<[(SchurElement, SchurElement); 2], SchurError> {
    let n = lambda.len();
    if h == 0 || h + 2 > n {
        return Err(SchurError::Shape(format!(
            "row index {h} needs h + 2 <= n = {n}"
        )));
    }
    let r = lambda.total() + 1;
    let d = lambda.as_diag();
    let z = IMat::zero(n);
    let e1 = IMat::unit(n, h, h + 1);
    let e2 = IMat::unit(n, h + 1, h + 2);
    let alpha_h = IMat::zero(n).plus(h, h, 1).plus(h + 1, h + 1, -1);
    let alpha_h1 = IMat::zero(n).plus(h + 1, h + 1, 1).plus(h + 2, h + 2, -1);
    let el = |a0: IMat, a1: IMat| basis_or_zero(n, r, a0, a1);
    let v = RatFun::v_pow(1);
    let mul = |x: &SchurElement, y: &SchurElement| oracle_mul(x, y);

    let l1 = mul(&el(d.clone(), e1.clone()), &el(d.clone(), e2.clone()))?.add(
        &mul(
            &el(d.add(&alpha_h), e2.clone()),
            &el(d.sub(&alpha_h1), e1.clone()),
        )?
        .scale(&v),
    );
    let r1 = mul(&el(d.add(&e1), z.clone()), &el(d.add(&e2), z.clone()))?.sub(
        &mul(
            &el(d.add(&alpha_h).add(&e2), z.clone()),
            &el(d.sub(&alpha_h1).add(&e1), z.clone()),
        )?
        .scale(&v),
    );
    let l2 = mul(&el(d.clone(), e1.clone()), &el(d.add(&e2), z.clone()))?.sub(
        &mul(
            &el(d.add(&alpha_h).add(&e2), z.clone()),
            &el(d.sub(&alpha_h1), e1.clone()),
        )?
        .scale(&v),
    );
    let r2 = mul(&el(d.add(&e1), z.clone()), &el(d.clone(), e2.clone()))?
        .sub(&mul(&el(d.add(&alpha_h), e2), &el(d.sub(&alpha_h1).add(&e1), z))?.scale(&v));
    Ok([(l1, r1), (l2, r2)])
}
