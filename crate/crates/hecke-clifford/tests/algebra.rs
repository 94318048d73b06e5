use hecke_clifford::*;
use proptest::prelude::*;
use qcoeff::ZLaurent;
use qcombinat::{
    compositions, matrices, sdp_corner, super_matrices, Composition, IMat, Permutation, SuperMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coef(rng: &mut impl Rng) -> ZLaurent {
    let k = rng.gen_range(1..=2);
    ZLaurent::from_terms((0..k).map(|_| (rng.gen_range(-2..=2i64), rng.gen_range(-3..=3i64))))
}

fn random_element(rng: &mut impl Rng, r: usize) -> HcElement {
    let perms = Permutation::all(r);
    let mut x = HcElement::zero(r);
    for _ in 0..rng.gen_range(1..=3) {
        let eps = rng.gen_range(0..1u32 << r);
        let w = &perms[rng.gen_range(0..perms.len())];
        x = x
            .add(&HcElement::monomial(r, eps, w, random_coef(rng)))
            .unwrap();
    }
    x
}

#[test]
fn dimension_is_two_to_the_r_times_r_factorial() {
    for r in 1..=4 {
        let words: std::collections::BTreeSet<HcBasisWord> = (0..dimension(r))
            .map(|i| HcElement::zero(r).word_at(i))
            .collect();
        assert_eq!(words.len(), (1 << r) * (1..=r).product::<usize>());
        assert_eq!(HcElement::zero(r).dim(), dimension(r));
    }
}

#[test]
fn associativity_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..500 {
        let r = 1 + trial % 4;
        let (x, y, z) = (
            random_element(&mut rng, r),
            random_element(&mut rng, r),
            random_element(&mut rng, r),
        );
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        assert_eq!(left, right, "r={r}: ({x})({y})({z})");
    }
}

#[test]
fn defining_relations_hold() {
    let q = ZLaurent::v_pow(2);
    let qm1 = ZLaurent::from_terms([(2, 1), (0, -1)]);
    for r in 1..=4 {
        let one = HcElement::one(r);
        let t = |i| HcElement::t(r, i).unwrap();
        let c = |i| HcElement::c(r, i).unwrap();
        for i in 1..r {
            let quad = t(i).mul(&t(i)).unwrap();
            assert_eq!(quad, t(i).scale(&qm1).add(&one.scale(&q)).unwrap());
            for j in 1..r {
                if i.abs_diff(j) > 1 {
                    assert_eq!(t(i).mul(&t(j)).unwrap(), t(j).mul(&t(i)).unwrap());
                }
                if j == i + 1 {
                    let a = t(i).mul(&t(j)).unwrap().mul(&t(i)).unwrap();
                    let b = t(j).mul(&t(i)).unwrap().mul(&t(j)).unwrap();
                    assert_eq!(a, b, "braid {i} {j}");
                }
            }
            for j in 1..=r {
                let lhs = t(i).mul(&c(j)).unwrap();
                let rhs = if j == i {
                    c(i + 1).mul(&t(i)).unwrap()
                } else if j == i + 1 {
                    c(i).mul(&t(i))
                        .unwrap()
                        .sub(&c(i).sub(&c(i + 1)).unwrap().scale(&qm1))
                        .unwrap()
                } else {
                    c(j).mul(&t(i)).unwrap()
                };
                assert_eq!(lhs, rhs, "T{i} c{j}");
            }
        }
        for i in 1..=r {
            assert_eq!(c(i).mul(&c(i)).unwrap(), one.scale(&ZLaurent::from_int(-1)));
            for j in 1..=r {
                if i != j {
                    let anti = c(i)
                        .mul(&c(j))
                        .unwrap()
                        .add(&c(j).mul(&c(i)).unwrap())
                        .unwrap();
                    assert!(anti.is_zero());
                }
            }
        }
    }
}

#[test]
fn x_lambda_commutes_with_clifford_sums() {
    for n in 1..=3 {
        for r in 1..=3 {
            for lam in compositions(n, r) {
                for bits in 0..1u32 << n {
                    let alpha: Vec<u8> = (0..n).map(|i| (bits >> i & 1) as u8).collect();
                    if alpha.iter().zip(lam.parts()).any(|(&a, &l)| a as i32 > l) {
                        continue;
                    }
                    let x = x_lambda(&lam);
                    let lhs = x.mul(&c_alpha(&lam, &alpha).unwrap()).unwrap();
                    let rhs = c_alpha_general(&lam, &alpha, true)
                        .unwrap()
                        .mul(&x)
                        .unwrap();
                    assert_eq!(lhs, rhs, "{lam} {alpha:?}");
                }
            }
        }
    }
}

#[test]
fn sdp_condition_matches_the_corner_test() {
    for n in 1..=3 {
        for r in 1..=4 {
            for a in matrices(n, r) {
                for h in 1..=n {
                    for k in 1..=n {
                        if a.at(h, k) > 0 {
                            assert_eq!(
                                sdp_definitional(&a, h, k).unwrap(),
                                sdp_corner(&a, h, k),
                                "{a} ({h},{k})"
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Double coset of `S_ro(A) w S_co(A)` read off as `a_ij = |R^lambda_i ∩ w(R^mu_j)|`.
fn coset_matrix(w: &Permutation, lambda: &Composition, mu: &Composition) -> IMat {
    let n = lambda.len();
    let block =
        |c: &Composition, x: usize| (1..=n).find(|&i| (x as i32) <= c.partial_sum(i)).unwrap();
    let mut m = IMat::zero(n);
    for x in 1..=w.r() {
        m.bump(block(lambda, w.apply(x)), block(mu, x), 1);
    }
    m
}

#[test]
fn even_basis_elements_are_double_coset_sums() {
    for n in 1..=3 {
        for r in 1..=4 {
            let perms = Permutation::all(r as usize);
            for a in matrices(n, r) {
                let mut sum = HcElement::zero(r as usize);
                for w in perms
                    .iter()
                    .filter(|w| coset_matrix(w, &a.ro(), &a.co()) == a)
                {
                    sum = sum.add(&HcElement::t_perm(w)).unwrap();
                }
                assert_eq!(
                    t_astar(&SuperMatrix::even(a.clone()).unwrap()).unwrap(),
                    sum,
                    "{a}"
                );
            }
        }
    }
}

#[test]
fn basis_elements_are_parabolically_invariant_and_homogeneous() {
    let q = ZLaurent::v_pow(2);
    for n in 1..=3 {
        for r in 1..=3 {
            for a in super_matrices(n, r) {
                let t = t_astar(&a).unwrap();
                assert_eq!(t.parity(), Some(a.parity()), "{a}");
                let (lam, mu) = (a.ro(), a.co());
                for s in 1..r as usize {
                    let simple = Permutation::simple(r as usize, s);
                    let ts = HcElement::t(r as usize, s).unwrap();
                    if in_young_subgroup(&simple, &lam) {
                        assert_eq!(ts.mul(&t).unwrap(), t.scale(&q), "left {s} {a}");
                    }
                    if in_young_subgroup(&simple, &mu) {
                        assert_eq!(t.mul(&ts).unwrap(), t.scale(&q), "right {s} {a}");
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rng.gen_range(1..=3);
        let perms = Permutation::all(r);
        let pick = |rng: &mut ChaCha8Rng| {
            let eps = rng.gen_range(0..1u32 << r);
            HcElement::monomial(r, eps, &perms[rng.gen_range(0..perms.len())], ZLaurent::one())
        };
        let (x, y) = (pick(&mut rng), pick(&mut rng));
        let p = x.mul(&y).unwrap();
        prop_assert!(!p.is_zero());
        prop_assert_eq!(p.parity(), Some((x.parity().unwrap() + y.parity().unwrap()) % 2));
    }

    #[test]
    fn distributivity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rng.gen_range(1..=3);
        let (x, y, z) = (random_element(&mut rng, r), random_element(&mut rng, r), random_element(&mut rng, r));
        let lhs = x.mul(&y.add(&z).unwrap()).unwrap();
        let rhs = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn rank_mismatch_is_an_error() {
    assert_eq!(
        HcElement::one(2).mul(&HcElement::one(3)),
        Err(HcError::RankMismatch(2, 3))
    );
    assert!(HcElement::t(3, 3).is_err());
    assert!(HcElement::c(3, 0).is_err());
}
