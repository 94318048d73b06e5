//! Distinguished elements: `x_lambda`, the Clifford sums `c_{q,i,j}` and `T_{A*}`.

use qcoeff::ZLaurent;
use qcombinat::{
    dist_rep, hat_length, longest_young_length, nu_and_tilde, Composition, IMat, Permutation,
    SuperMatrix,
};

use crate::element::HcElement;
use crate::HcError;

/// True when `w` maps every block of the composition to itself.
pub fn in_young_subgroup(w: &Permutation, lambda: &Composition) -> bool {
    let block = |x: usize| {
        (1..=lambda.len())
            .find(|&i| x as i32 <= lambda.partial_sum(i))
            .unwrap()
    };
    (1..=w.r()).all(|x| block(x) == block(w.apply(x)))
}

/// Elements of the Young subgroup `S_lambda`.
pub fn young_subgroup(lambda: &Composition) -> Vec<Permutation> {
    let r = lambda.total() as usize;
    Permutation::all(r)
        .into_iter()
        .filter(|w| in_young_subgroup(w, lambda))
        .collect()
}

/// `x_lambda = sum_{w in S_lambda} T_w`.
pub fn x_lambda(lambda: &Composition) -> HcElement {
    let r = lambda.total() as usize;
    let mut x = HcElement::zero(r);
    for w in young_subgroup(lambda) {
        x.add_assign(&HcElement::t_perm(&w));
    }
    x
}

fn check_range(r: usize, i: usize, j: usize) -> Result<(), HcError> {
    if i == 0 || i > j || j > r {
        return Err(HcError::OutOfRange(format!(
            "c-element indices ({i}, {j}) in rank {r}"
        )));
    }
    Ok(())
}

/// `c_{q,i,j} = q^{j-i} c_i + q^{j-i-1} c_{i+1} + ... + c_j`; the primed version
/// `c'_{q,i,j} = c_i + q c_{i+1} + ... + q^{j-i} c_j`.
pub fn c_q_element(r: usize, i: usize, j: usize, primed: bool) -> Result<HcElement, HcError> {
    check_range(r, i, j)?;
    let mut x = HcElement::zero(r);
    for k in i..=j {
        let e = if primed { k - i } else { j - k };
        x.add_assign(&HcElement::c(r, k)?.scale(&ZLaurent::v_pow(2 * e as i64)));
    }
    Ok(x)
}

/// Normalized sums `o_{v,i,j} = v^{j-i} c_i + v^{j-i-2} c_{i+1} + ... + v^{-(j-i)} c_j`
/// (primed: exponents reversed); `c_{q,i,j} = v^{j-i} o_{v,i,j}`.
pub fn o_element(r: usize, i: usize, j: usize, primed: bool) -> Result<HcElement, HcError> {
    check_range(r, i, j)?;
    let mut x = HcElement::zero(r);
    let span = (j - i) as i64;
    for k in i..=j {
        let step = (k - i) as i64;
        let e = if primed {
            2 * step - span
        } else {
            span - 2 * step
        };
        x.add_assign(&HcElement::c(r, k)?.scale(&ZLaurent::v_pow(e)));
    }
    Ok(x)
}

/// `c^alpha_nu = prod_k (c_{q, tilde nu_{k-1}+1, tilde nu_k})^{alpha_k}` (primed factors when `primed`).
pub fn c_alpha_general(nu: &Composition, alpha: &[u8], primed: bool) -> Result<HcElement, HcError> {
    if alpha.len() != nu.len() {
        return Err(HcError::OutOfRange(format!(
            "alpha {alpha:?} does not match {nu}"
        )));
    }
    let r = nu.total() as usize;
    let mut x = HcElement::one(r);
    for (k, &a) in alpha.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if a > 1 || nu.part(k + 1) == 0 {
            return Err(HcError::OutOfRange(format!(
                "alpha {alpha:?} not bounded by {nu}"
            )));
        }
        let lo = nu.partial_sum(k) as usize + 1;
        let hi = nu.partial_sum(k + 1) as usize;
        x = x.mul(&c_q_element(r, lo, hi, primed)?)?;
    }
    Ok(x)
}

/// `c^alpha_nu`.
pub fn c_alpha(nu: &Composition, alpha: &[u8]) -> Result<HcElement, HcError> {
    c_alpha_general(nu, alpha, false)
}

/// Minimal-length representatives of the right cosets `S_nu sigma` lying in `S_mu`
/// (requires `S_nu ⊆ S_mu`): `sigma^{-1}(i) < sigma^{-1}(i+1)` whenever `s_i ∈ S_nu`.
pub fn min_right_coset_reps(nu: &Composition, mu: &Composition) -> Vec<Permutation> {
    let r = mu.total() as usize;
    let inner: Vec<usize> = (1..r)
        .filter(|&i| !(1..nu.len()).any(|k| nu.partial_sum(k) as usize == i))
        .collect();
    super::special::young_subgroup(mu)
        .into_iter()
        .filter(|s| {
            let inv = s.inverse();
            inner.iter().all(|&i| inv.apply(i) < inv.apply(i + 1))
        })
        .collect()
}

fn alpha_of(a: &SuperMatrix) -> Vec<u8> {
    nu_and_tilde(a)
        .nu_odd
        .parts()
        .iter()
        .map(|&x| x as u8)
        .collect()
}

/// `h'_A = T_{d_A} c_{A*} sum_{sigma} T_sigma`, so that `T_{A*} = x_{ro(A)} h'_A`.
pub fn h_prime(a: &SuperMatrix) -> Result<HcElement, HcError> {
    let base = a.base();
    let nt = nu_and_tilde(a);
    let d = dist_rep(&base);
    let r = d.r();
    let mut tail = HcElement::zero(r);
    for s in min_right_coset_reps(&nt.nu, &base.co()) {
        tail.add_assign(&HcElement::t_perm(&s));
    }
    let c = c_alpha(&nt.nu, &alpha_of(a))?;
    HcElement::t_perm(&d).mul(&c)?.mul(&tail)
}

/// `T_{A*} = x_{ro(A)} T_{d_A} c_{A*} sum_{sigma in D_nu ∩ S_co(A)} T_sigma`.
pub fn t_astar(a: &SuperMatrix) -> Result<HcElement, HcError> {
    if a.size() == 0 {
        return Err(HcError::OutOfRange("T_A needs |A| >= 1".into()));
    }
    x_lambda(&a.ro()).mul(&h_prime(a)?)
}

/// Exponent `l(d^+_A) + A0 * A1` of the standardizing factor.
pub fn std_exponent(a: &SuperMatrix) -> i64 {
    let base: IMat = a.base();
    hat_length(&base) + longest_young_length(&base.co()) + a.a0().dot(a.a1())
}

/// `v^{-l(d^+_A) - A0*A1} T_{A*}`.
pub fn t_astar_std(a: &SuperMatrix) -> Result<HcElement, HcError> {
    Ok(t_astar(a)?.scale(&ZLaurent::v_pow(-std_exponent(a))))
}

/// Checks `c_{tilde a^r_{h,k-1}+p} T_{d_A} = T_{d_A} c_{tilde a_{h-1,k}+p}` for all `p in [1, a_{h,k}]`
/// by normal-form comparison.
pub fn sdp_definitional(a: &IMat, h: usize, k: usize) -> Result<bool, HcError> {
    if a.at(h, k) <= 0 {
        return Err(HcError::OutOfRange(format!(
            "entry ({h},{k}) of {a} is zero"
        )));
    }
    let d = dist_rep(a);
    let r = d.r();
    let td = HcElement::t_perm(&d);
    let left0 = qcombinat::row_tilde(a, h, k - 1) as usize;
    let right0 = qcombinat::col_tilde(a, h - 1, k) as usize;
    for p in 1..=a.at(h, k) as usize {
        let lhs = HcElement::c(r, left0 + p)?.mul(&td)?;
        let rhs = td.right_mul_c(right0 + p);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
