//! Generator action on long elements: `Z * A*(j, r)` as a combination of long elements
//! with coefficients independent of `r`.

use qcoeff::{quantum_binom, quantum_int, LaurentPoly, RatFun};
use qcombinat::{col_tilde, compositions, exps, sdp_row, IMat};
use qschur::{odd_e_exact, oracle_mul, SchurElement};

use crate::gens::GenSymbol;
use crate::long::{expand_long, LongCombination, PlusMinusMatrix};
use crate::GroupError;

fn vp(k: i64) -> RatFun {
    RatFun::v_pow(k)
}

fn sign(e: i64) -> RatFun {
    RatFun::from_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `[m]`, zero for `m <= 0`.
fn qint(m: i32) -> RatFun {
    RatFun::from_laurent(quantum_int(m.max(0) as u32))
}

/// `[m]_{v^2}`.
fn qint_sq(m: i32) -> RatFun {
    RatFun::from_laurent(LaurentPoly::quantum_int_base(m as i64, 2))
}

/// `(v - v^{-1}) [m+1 choose 2]`.
fn boxed(m: i32) -> RatFun {
    vmv() * RatFun::from_laurent(quantum_binom((m + 1).max(0) as u32, 2))
}

fn vmv() -> RatFun {
    vp(1) - vp(-1)
}

/// `1 / (v - v^{-1})`.
fn inv_vmv() -> RatFun {
    vmv().inv().expect("nonzero")
}

/// `1 / [2]`.
fn inv_two() -> RatFun {
    (vp(1) + vp(-1)).inv().expect("nonzero")
}

/// Collects `c (a0 | a1)(j + shift)` terms.
struct Acc<'a> {
    out: LongCombination,
    j: &'a [i32],
}

impl<'a> Acc<'a> {
    fn new(n: usize, r: i32, j: &'a [i32]) -> Self {
        Acc {
            out: LongCombination::zero(n, r),
            j,
        }
    }

    fn add(&mut self, c: RatFun, a0: IMat, a1: IMat, shift: &[(usize, i32)]) {
        let mut j = self.j.to_vec();
        for &(i, d) in shift {
            j[i - 1] += d;
        }
        self.out.add_raw(a0, a1, j, &c);
    }

    /// `c/(v - v^{-1}) {(a0|a1)(j + s1) - (a0|a1)(j + s2)}`.
    fn difference(
        &mut self,
        c: RatFun,
        a0: &IMat,
        a1: &IMat,
        s1: &[(usize, i32)],
        s2: &[(usize, i32)],
    ) {
        let c = c * inv_vmv();
        self.add(c.clone(), a0.clone(), a1.clone(), s1);
        self.add(-c, a0.clone(), a1.clone(), s2);
    }

    /// `c/(v - v^{-1}) {v^{-1}/[2] (..)(j + s_up) + v/[2] (..)(j + s_down) - (..)(j + s_mid)}`.
    fn three_point(
        &mut self,
        c: RatFun,
        a0: &IMat,
        a1: &IMat,
        s_up: &[(usize, i32)],
        s_down: &[(usize, i32)],
        s_mid: &[(usize, i32)],
    ) {
        let c = c * inv_vmv();
        self.add(&c * &vp(-1) * inv_two(), a0.clone(), a1.clone(), s_up);
        self.add(&c * &vp(1) * inv_two(), a0.clone(), a1.clone(), s_down);
        self.add(-c, a0.clone(), a1.clone(), s_mid);
    }
}

/// Shift helpers: `eps_i`, `alpha_h = eps_h - eps_{h+1}`, `alpha_h^+ = eps_h + eps_{h+1}`.
fn alpha(h: usize) -> [(usize, i32); 2] {
    [(h, 1), (h + 1, -1)]
}

fn minus_alpha(h: usize) -> [(usize, i32); 2] {
    [(h, -1), (h + 1, 1)]
}

fn minus_alpha_plus(h: usize) -> [(usize, i32); 2] {
    [(h, -1), (h + 1, -1)]
}

fn jj(j: &[i32], i: usize) -> i64 {
    j[i - 1] as i64
}

/// `K_i^{±1} * A*(j)`.
fn act_k(i: usize, e: i32, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let b = a.matrix().base();
    let row: i64 = (1..=a.n()).map(|u| b.at(i, u) as i64).sum();
    let mut acc = Acc::new(a.n(), r, j);
    acc.add(
        vp(e as i64 * row),
        a.matrix().a0().clone(),
        a.matrix().a1().clone(),
        &[(i, e)],
    );
    acc.out
}

/// `X_h * A*(j)`.
fn act_e(h: usize, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let n = a.n();
    let (a0, a1, b) = (a.matrix().a0(), a.matrix().a1(), a.matrix().base());
    let f0 = |k: usize| (exps::f(&b, h, k) + a1.at(h + 1, k)) as i64;
    let f1 = |k: usize| (exps::f(&b, h, k) - if k == h + 1 { 0 } else { a0.at(h + 1, k) }) as i64;
    let mut acc = Acc::new(n, r, j);
    for k in 1..=n {
        let moved0 = a0.plus(h, k, 1).plus(h + 1, k, -1);
        let moved1 = a1.plus(h, k, 1).plus(h + 1, k, -1);
        let both = a1.plus(h, k, -1).plus(h + 1, k, -1);
        if k < h || k > h + 1 {
            let s: &[(usize, i32)] = if k < h { &alpha(h) } else { &[] };
            acc.add(vp(f0(k)) * qint(a0.at(h, k) + 1), moved0, a1.clone(), s);
            acc.add(vp(f1(k)), a0.clone(), moved1, s);
            acc.add(-(vp(f1(k)) * boxed(b.at(h, k))), a0.plus(h, k, 2), both, s);
        } else if k == h {
            acc.difference(
                vp(f0(h) - jj(j, h)),
                &a0.plus(h + 1, h, -1),
                a1,
                &alpha(h),
                &minus_alpha_plus(h),
            );
            acc.add(vp(f1(h)), a0.clone(), moved1, &[(h + 1, -1)]);
            acc.three_point(
                -vp(f1(h) - 2 * jj(j, h)),
                a0,
                &both,
                &[(h, 2), (h + 1, -1)],
                &[(h, -2), (h + 1, -1)],
                &[(h + 1, -1)],
            );
        } else {
            acc.add(
                vp(f0(k) + jj(j, h + 1)) * qint(a0.at(h, k) + 1),
                a0.plus(h, k, 1),
                a1.clone(),
                &[],
            );
            acc.add(vp(f1(k)), a0.clone(), moved1, &[(h + 1, -1)]);
            acc.add(
                -(vp(f1(k)) * boxed(b.at(h, k))),
                a0.plus(h, k, 2),
                both,
                &[(h + 1, -1)],
            );
        }
    }
    acc.out
}

/// `Y_h * A*(j)`.
fn act_f(h: usize, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let n = a.n();
    let (a0, a1, b) = (a.matrix().a0(), a.matrix().a1(), a.matrix().base());
    let g0 = |k: usize| (exps::g(&b, h, k) - a1.at(h, k)) as i64;
    let g1 = |k: usize| (exps::g(&b, h, k) + if k == h { 0 } else { a0.at(h, k) }) as i64;
    let mut acc = Acc::new(n, r, j);
    for k in 1..=n {
        let moved0 = a0.plus(h, k, -1).plus(h + 1, k, 1);
        let moved1 = a1.plus(h, k, -1).plus(h + 1, k, 1);
        let both = a1.plus(h, k, -1).plus(h + 1, k, -1);
        if k < h || k > h + 1 {
            let s: &[(usize, i32)] = if k < h { &[] } else { &minus_alpha(h) };
            acc.add(vp(g0(k)) * qint(a0.at(h + 1, k) + 1), moved0, a1.clone(), s);
            acc.add(vp(g1(k)), a0.clone(), moved1, s);
            acc.add(
                -(vp(g1(k)) * boxed(b.at(h + 1, k))),
                a0.plus(h + 1, k, 2),
                both,
                s,
            );
        } else if k == h {
            acc.add(
                vp(g0(h) + jj(j, h)) * qint(a0.at(h + 1, h) + 1),
                a0.plus(h + 1, h, 1),
                a1.clone(),
                &[],
            );
            acc.add(vp(g1(h)), a0.clone(), moved1, &[(h, 1)]);
            acc.add(
                -(vp(g1(h)) * boxed(b.at(h + 1, h))),
                a0.plus(h + 1, h, 2),
                both,
                &[(h, 1)],
            );
        } else {
            acc.difference(
                vp(g0(k) - jj(j, h + 1)),
                &a0.plus(h, h + 1, -1),
                a1,
                &minus_alpha(h),
                &minus_alpha_plus(h),
            );
            acc.add(vp(g1(k)), a0.clone(), moved1, &[(h, -1)]);
            acc.three_point(
                -vp(g1(k) - 2 * jj(j, h + 1)),
                a0,
                &both,
                &[(h, -1), (h + 1, 2)],
                &[(h, -1), (h + 1, -2)],
                &[(h, -1)],
            );
        }
    }
    acc.out
}

/// Head of `G_h-bar * A*(j)`: the full product when every `A + lambda` passes the corner
/// test on row `h`, and always for `h = n`.
pub fn head_k_odd(h: usize, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let n = a.n();
    let (a0, a1, b) = (a.matrix().a0(), a.matrix().a1(), a.matrix().base());
    let p = a.matrix().parity() as i64;
    let mut acc = Acc::new(n, r, j);
    for k in 1..=n {
        let c = sign(col_tilde(a1, h, k) as i64 + p) * vp(exps::d(&b, h, k) as i64);
        let s: &[(usize, i32)] = if k < h { &[(h, 1)] } else { &[(h, -1)] };
        if k == h {
            acc.add(&c * &vp(jj(j, h)), a0.clone(), a1.plus(h, h, 1), &[]);
            let c = c * vp(-jj(j, h)) * (vp(2) - vp(-2)).inv().expect("nonzero");
            acc.add(c.clone(), a0.clone(), a1.plus(h, h, -1), &[(h, 2)]);
            acc.add(-c, a0.clone(), a1.plus(h, h, -1), &[(h, -2)]);
        } else {
            acc.add(c.clone(), a0.plus(h, k, -1), a1.plus(h, k, 1), s);
            acc.add(
                c * qint_sq(b.at(h, k)),
                a0.plus(h, k, 1),
                a1.plus(h, k, -1),
                s,
            );
        }
    }
    acc.out
}

/// Head of `X_h-bar * A*(j)`.
pub fn head_e_odd(h: usize, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let n = a.n();
    let (a0, a1, b) = (a.matrix().a0(), a.matrix().a1(), a.matrix().base());
    let p = a.matrix().parity() as i64;
    let f0 = |k: usize| (exps::f(&b, h, k) + a1.at(h + 1, k)) as i64;
    let f1 = |k: usize| (exps::f(&b, h, k) - if k == h + 1 { 0 } else { a0.at(h + 1, k) }) as i64;
    let above = |k: usize| sign(p + col_tilde(a1, h - 1, k) as i64);
    let below = |k: usize| sign(p + col_tilde(a1, h + 1, k) as i64);
    let mut acc = Acc::new(n, r, j);
    for k in 1..=n {
        let up0 = a0.plus(h + 1, k, -1);
        let up1 = a1.plus(h, k, 1);
        let down1 = a1.plus(h + 1, k, -1);
        let two0 = a0.plus(h, k, 2).plus(h + 1, k, -1);
        let less1 = a1.plus(h, k, -1);
        if k < h || k > h + 1 {
            let s: &[(usize, i32)] = if k < h { &alpha(h) } else { &[] };
            acc.add(above(k) * vp(f0(k)), up0, up1, s);
            acc.add(
                below(k) * vp(f1(k)) * qint(a0.at(h, k) + 1),
                a0.plus(h, k, 1),
                down1,
                s,
            );
            acc.add(above(k) * vp(f0(k)) * boxed(b.at(h, k)), two0, less1, s);
        } else if k == h {
            acc.add(above(h) * vp(f0(h)), up0.clone(), up1, &[(h + 1, -1)]);
            acc.difference(
                below(h) * vp(f1(h) - jj(j, h)),
                a0,
                &down1,
                &alpha(h),
                &minus_alpha_plus(h),
            );
            acc.three_point(
                above(h) * vp(f0(h) - 2 * jj(j, h)),
                &up0,
                &less1,
                &[(h, 2), (h + 1, -1)],
                &[(h, -2), (h + 1, -1)],
                &[(h + 1, -1)],
            );
        } else {
            acc.add(above(k) * vp(f0(k) + jj(j, h + 1)), a0.clone(), up1, &[]);
            acc.add(
                below(k) * vp(f1(k)) * qint(a0.at(h, k) + 1),
                a0.plus(h, k, 1),
                down1,
                &[(h + 1, -1)],
            );
            acc.add(
                above(k) * vp(f0(k) + jj(j, h + 1)) * boxed(b.at(h, k)),
                a0.plus(h, k, 2),
                less1,
                &[],
            );
        }
    }
    acc.out
}

/// Head of `Y_h-bar * A*(j)`.
pub fn head_f_odd(h: usize, a: &PlusMinusMatrix, j: &[i32], r: i32) -> LongCombination {
    let n = a.n();
    let (a0, a1, b) = (a.matrix().a0(), a.matrix().a1(), a.matrix().base());
    let p = a.matrix().parity() as i64;
    let g0 = |k: usize| (exps::g_minus(&b, h, k) - a1.at(h, k)) as i64;
    let g1 = |k: usize| (exps::g_minus(&b, h, k) + if k == h { 0 } else { a0.at(h, k) }) as i64;
    let s_at = |k: usize| sign(p + col_tilde(a1, h, k) as i64);
    let mut acc = Acc::new(n, r, j);
    for k in 1..=n {
        let down0 = a0.plus(h, k, -1);
        let down1 = a1.plus(h + 1, k, 1);
        let two0 = a0.plus(h, k, -1).plus(h + 1, k, 2);
        let less_below = a1.plus(h + 1, k, -1);
        let up0 = a0.plus(h + 1, k, 1);
        let less_at = a1.plus(h, k, -1);
        if k < h || k > h + 1 {
            let s: &[(usize, i32)] = if k < h { &[] } else { &minus_alpha_plus(h) };
            acc.add(s_at(k) * vp(g0(k)), down0, down1, s);
            acc.add(
                -(s_at(k) * vp(g0(k)) * boxed(b.at(h + 1, k))),
                two0,
                less_below,
                s,
            );
            acc.add(
                s_at(k) * vp(g1(k)) * qint(a0.at(h + 1, k) + 1),
                up0,
                less_at,
                s,
            );
        } else if k == h {
            acc.add(s_at(h) * vp(g0(h) + jj(j, h)), a0.clone(), down1, &[]);
            acc.add(
                -(s_at(h) * vp(g0(h) + jj(j, h)) * boxed(b.at(h + 1, h))),
                a0.plus(h + 1, h, 2),
                less_below,
                &[],
            );
            acc.add(
                s_at(h) * vp(g1(h)) * qint(a0.at(h + 1, h) + 1),
                up0,
                less_at,
                &[(h, 1)],
            );
        } else {
            acc.add(s_at(k) * vp(g0(k)), down0.clone(), down1, &[(h, -1)]);
            acc.three_point(
                -(s_at(k) * vp(g0(k) - 2 * jj(j, h + 1))),
                &down0,
                &less_below,
                &[(h, -1), (h + 1, 2)],
                &[(h, -1), (h + 1, -2)],
                &[(h, -1)],
            );
            acc.difference(
                s_at(k) * vp(g1(k) - jj(j, h + 1)),
                a0,
                &less_at,
                &minus_alpha(h),
                &minus_alpha_plus(h),
            );
        }
    }
    acc.out
}

/// Whether the closed form for an odd generator is the full product on `A*(j, r)`:
/// the relevant corner condition must hold for `A + lambda`, every `lambda in Lambda(n, r-|A|)`.
pub fn closed_form_applies(z: GenSymbol, a: &PlusMinusMatrix, r: i32) -> bool {
    let n = a.n();
    let free = r - a.size();
    if free < 0 {
        return true;
    }
    let base = a.matrix().base();
    let all = |test: &dyn Fn(&IMat) -> bool| {
        compositions(n, free)
            .iter()
            .all(|lam| test(&base.add(&lam.as_diag())))
    };
    match z {
        GenSymbol::KOdd(i) => i == n || all(&|m| sdp_row(m, i)),
        GenSymbol::EOdd(h) => all(&|m| odd_e_exact(h, m)),
        GenSymbol::FOdd(h) => all(&|m| sdp_row(m, h)),
        _ => true,
    }
}

/// `Z * A*(j, r)` in closed form.
///
/// Odd generators other than `G_n-bar` need the corner condition of
/// [`closed_form_applies`]; otherwise the result is [`GroupError::SdpFallback`] and the
/// product must be taken in `Q^s_v(n, r)` (see [`act`]).
pub fn gen_action(
    z: GenSymbol,
    a: &PlusMinusMatrix,
    j: &[i32],
    r: i32,
) -> Result<LongCombination, GroupError> {
    let n = a.n();
    z.check(n)?;
    if j.len() != n {
        return Err(GroupError::Shape(format!(
            "shift vector {j:?} has length != {n}"
        )));
    }
    if !closed_form_applies(z, a, r) {
        return Err(GroupError::SdpFallback(format!("{z} on {a} at r={r}")));
    }
    Ok(match z {
        GenSymbol::K(i) => act_k(i, 1, a, j, r),
        GenSymbol::KInv(i) => act_k(i, -1, a, j, r),
        GenSymbol::E(h) => act_e(h, a, j, r),
        GenSymbol::F(h) => act_f(h, a, j, r),
        GenSymbol::KOdd(i) => head_k_odd(i, a, j, r),
        GenSymbol::EOdd(h) => head_e_odd(h, a, j, r),
        GenSymbol::FOdd(h) => head_f_odd(h, a, j, r),
    })
}

/// `Z * A*(j, r)` in `Q^s_v(n, r)`: the closed form when it applies, else the oracle product.
pub fn act(
    z: GenSymbol,
    a: &PlusMinusMatrix,
    j: &[i32],
    r: i32,
) -> Result<SchurElement, GroupError> {
    match gen_action(z, a, j, r) {
        Ok(x) => Ok(x.expand()),
        Err(GroupError::SdpFallback(_)) => {
            Ok(oracle_mul(&z.image(a.n(), r)?, &expand_long(a, j, r))?)
        }
        Err(e) => Err(e),
    }
}

/// Applies [`gen_action`] termwise to a long combination.
pub fn gen_action_long(z: GenSymbol, x: &LongCombination) -> Result<LongCombination, GroupError> {
    let mut out = LongCombination::zero(x.n(), x.r());
    for ((a, j), c) in x.terms() {
        out = out.add(&gen_action(z, a, j, x.r())?.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_shifts_the_weight() {
        let a = PlusMinusMatrix::try_new(IMat::unit(2, 1, 2), IMat::unit(2, 1, 1)).unwrap();
        let x = gen_action(GenSymbol::K(1), &a, &[0, 0], 3).unwrap();
        assert_eq!(x.len(), 1);
        let ((m, j), c) = x.terms().iter().next().unwrap();
        assert_eq!((m, j.as_slice(), c), (&a, &[1, 0][..], &RatFun::v_pow(2)));
    }

    #[test]
    fn bad_index_is_an_error() {
        let a = PlusMinusMatrix::zero(2);
        assert!(matches!(
            gen_action(GenSymbol::E(2), &a, &[0, 0], 1),
            Err(GroupError::Shape(_))
        ));
        assert!(matches!(
            gen_action(GenSymbol::E(1), &a, &[0], 1),
            Err(GroupError::Shape(_))
        ));
    }
}
