use proptest::prelude::*;
use qcoeff::RatFun;
use qcombinat::{compositions, super_matrices, Composition, IMat, SuperMatrix};
use qschur::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sm(a0: &[Vec<i32>], a1: &[Vec<i32>]) -> SuperMatrix {
    SuperMatrix::new(IMat::from_rows(a0).unwrap(), IMat::from_rows(a1).unwrap()).unwrap()
}

#[test]
fn odd_off_diagonal_products_in_rank_one() {
    let up = sm(&[vec![0, 0], vec![0, 0]], &[vec![0, 1], vec![0, 0]]);
    let down = sm(&[vec![0, 0], vec![0, 0]], &[vec![0, 0], vec![1, 0]]);
    let e11 = sm(&[vec![1, 0], vec![0, 0]], &[vec![0, 0], vec![0, 0]]);
    let e22 = sm(&[vec![0, 0], vec![0, 1]], &[vec![0, 0], vec![0, 0]]);
    assert_eq!(
        oracle_product(&up, &down).unwrap(),
        SchurElement::basis(&e11)
    );
    assert_eq!(
        oracle_product(&down, &up).unwrap(),
        SchurElement::basis(&e22)
    );
}

#[test]
fn mismatched_weights_give_zero() {
    let a = SuperMatrix::diag(&Composition(vec![1, 0]));
    let b = SuperMatrix::diag(&Composition(vec![0, 1]));
    assert!(oracle_product(&a, &b).unwrap().is_zero());
}

#[test]
fn rank_and_size_errors() {
    let a = SuperMatrix::diag(&Composition(vec![1, 0]));
    let b = SuperMatrix::diag(&Composition(vec![2, 0]));
    assert!(matches!(oracle_product(&a, &b), Err(SchurError::Shape(_))));
    let c = SuperMatrix::diag(&Composition(vec![1, 0, 0]));
    assert!(matches!(oracle_product(&a, &c), Err(SchurError::Shape(_))));
}

#[test]
fn diagonal_idempotents_sum_to_a_two_sided_identity() {
    for (n, rmax) in [(1, 3), (2, 3), (3, 2)] {
        for r in 1..=rmax {
            let one = SchurElement::identity(n, r);
            for a in super_matrices(n, r) {
                let x = SchurElement::basis(&a);
                assert_eq!(oracle_mul(&one, &x).unwrap(), x, "left {a}");
                assert_eq!(oracle_mul(&x, &one).unwrap(), x, "right {a}");
                for mu in compositions(n, r) {
                    let d = SuperMatrix::diag(&mu);
                    let left = oracle_product(&d, &a).unwrap();
                    let right = oracle_product(&a, &d).unwrap();
                    assert_eq!(left.is_zero(), mu != a.ro(), "{mu} {a}");
                    assert_eq!(right.is_zero(), mu != a.co(), "{a} {mu}");
                }
            }
        }
    }
}

#[test]
fn structure_constants_are_laurent_and_blocks_unimodular() {
    for (n, rmax) in [(2, 3), (3, 2)] {
        for r in 1..=rmax {
            let all = super_matrices(n, r);
            for b in &all {
                for a in all.iter().filter(|a| a.ro() == b.co()) {
                    let p = oracle_product(b, a).unwrap();
                    assert!(p.is_laurent(), "{b} * {a}");
                    assert!(p
                        .terms()
                        .keys()
                        .all(|m| m.ro() == b.ro() && m.co() == a.co()));
                    let parity = (a.parity() + b.parity()) % 2;
                    assert!(p.terms().keys().all(|m| m.parity() == parity), "{b} * {a}");
                }
            }
            for lam in compositions(n, r) {
                for mu in compositions(n, r) {
                    assert!(block_solver(&lam, &mu).unwrap().unimodular(), "{lam} {mu}");
                }
            }
        }
    }
}

fn random_element(rng: &mut impl Rng, basis: &[SuperMatrix], n: usize, r: i32) -> SchurElement {
    let mut x = SchurElement::zero(n, r);
    for _ in 0..rng.gen_range(1..=3) {
        let a = basis[rng.gen_range(0..basis.len())].clone();
        let c = RatFun::v_pow(rng.gen_range(-2..=2))
            .scale_laurent(&qcoeff::LaurentPoly::from_int(rng.gen_range(1..=3)));
        x.add_term(a, &c);
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity_on_random_triples(seed in any::<u64>(), r in 1i32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = super_matrices(2, r);
        let (x, y, z) = (
            random_element(&mut rng, &basis, 2, r),
            random_element(&mut rng, &basis, 2, r),
            random_element(&mut rng, &basis, 2, r),
        );
        let left = oracle_mul(&oracle_mul(&x, &y).unwrap(), &z).unwrap();
        let right = oracle_mul(&x, &oracle_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn associativity_on_basis_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 1..=3 {
        let all = super_matrices(2, r);
        for _ in 0..200 {
            let a = &all[rng.gen_range(0..all.len())];
            let bs: Vec<&SuperMatrix> = all.iter().filter(|b| b.co() == a.ro()).collect();
            let b = bs[rng.gen_range(0..bs.len())];
            let cs: Vec<&SuperMatrix> = all.iter().filter(|c| c.co() == b.ro()).collect();
            let c = cs[rng.gen_range(0..cs.len())];
            let (x, y, z) = (
                SchurElement::basis(c),
                SchurElement::basis(b),
                SchurElement::basis(a),
            );
            let left = oracle_mul(&oracle_mul(&x, &y).unwrap(), &z).unwrap();
            let right = oracle_mul(&x, &oracle_mul(&y, &z).unwrap()).unwrap();
            assert_eq!(left, right, "{c} {b} {a}");
        }
    }
}

#[test]
fn json_round_trip() {
    let up = sm(&[vec![1, 0], vec![0, 0]], &[vec![0, 1], vec![0, 0]]);
    let down = sm(&[vec![1, 0], vec![0, 0]], &[vec![0, 0], vec![1, 0]]);
    let x = oracle_product(&up, &down)
        .unwrap()
        .add(&SchurElement::basis(&up));
    let text = serde_json::to_string(&x).unwrap();
    let back: SchurElement = serde_json::from_str(&text).unwrap();
    assert_eq!(back, x);
    assert!(text.starts_with("{\"n\":2,\"r\":2,\"terms\":["));
}
