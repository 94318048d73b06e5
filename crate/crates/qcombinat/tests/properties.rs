use std::collections::BTreeSet;

use proptest::prelude::*;
use qcombinat::*;

/// `|R^lambda_i ∩ w(R^mu_j)|` for all `(i, j)`: the matrix of the double coset containing `w`.
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
fn dist_rep_is_the_shortest_element_of_its_double_coset() {
    for n in 1..=3 {
        for r in 1..=4 {
            let perms = Permutation::all(r as usize);
            for a in matrices(n, r) {
                let (lambda, mu) = (a.ro(), a.co());
                let coset: Vec<&Permutation> = perms
                    .iter()
                    .filter(|w| coset_matrix(w, &lambda, &mu) == a)
                    .collect();
                let d = dist_rep(&a);
                assert!(coset.contains(&&d), "d_A outside its coset for {a}");
                let min = coset.iter().map(|w| w.length()).min().unwrap();
                let max = coset.iter().map(|w| w.length()).max().unwrap();
                assert_eq!(d.length(), min, "{a}");
                assert_eq!(coset.iter().filter(|w| w.length() == min).count(), 1);
                assert_eq!(
                    max as i64,
                    hat_length(&a) + longest_young_length(&mu),
                    "{a}"
                );
            }
        }
    }
}

#[test]
fn hat_length_increment_matches_direct_difference() {
    for n in 2..=3 {
        for r in 0..=4 {
            for a in matrices(n, r) {
                for h in 1..n {
                    for k in 1..=n {
                        for sign in [1, -1] {
                            let moved = one_move(&a, h, k, sign);
                            if !moved.is_nonneg() {
                                continue;
                            }
                            assert_eq!(
                                hat_length(&moved) - hat_length(&a),
                                hat_length_increment(&a, h, k, sign),
                                "{a} h={h} k={k} sign={sign}"
                            );
                        }
                    }
                }
            }
        }
    }
}

fn bitset_rows(ms: &[IMat]) -> Vec<Vec<u64>> {
    let words = ms.len().div_ceil(64);
    ms.iter()
        .map(|b| {
            let mut row = vec![0u64; words];
            for (j, a) in ms.iter().enumerate() {
                if preceq(b, a) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

#[test]
fn preorder_is_transitive_and_equivalence_is_off_diagonal_equality() {
    for n in 2..=3 {
        for r in 1..=4 {
            let ms = matrices(n, r);
            let up = bitset_rows(&ms);
            for (i, row) in up.iter().enumerate() {
                assert!(row[i / 64] >> (i % 64) & 1 == 1, "reflexivity");
                for j in 0..ms.len() {
                    if row[j / 64] >> (j % 64) & 1 == 0 {
                        continue;
                    }
                    // everything above j is above i
                    for (w, word) in up[j].iter().enumerate() {
                        assert_eq!(word & !row[w], 0, "transitivity fails through {}", ms[j]);
                    }
                    let back = up[j][i / 64] >> (i % 64) & 1 == 1;
                    assert_eq!(back, ms[i].off_diagonal() == ms[j].off_diagonal());
                }
            }
        }
    }
}

#[test]
fn star_order_is_antisymmetric() {
    for r in 1..=3 {
        let ms = super_matrices(2, r);
        for a in &ms {
            for b in &ms {
                let ab = order_cmp_star(a, b);
                let ba = order_cmp_star(b, a);
                let flipped = match ab {
                    OrderVerdict::StrictlyLess => OrderVerdict::StrictlyGreater,
                    OrderVerdict::StrictlyGreater => OrderVerdict::StrictlyLess,
                    v => v,
                };
                assert_eq!(ba, flipped);
            }
        }
    }
}

#[test]
fn star_order_shrinking_diagonal_support() {
    // (A0 | A1 - E_kk + E_{k+1,k}) against (A0 - E_kk + E_{k+1,k} | A1): same base, support loses k
    let a0 = IMat::diag(&[1, 1]);
    let a1 = IMat::unit(2, 1, 1);
    let first = SuperMatrix::new(a0.clone(), a1.plus(1, 1, -1).plus(2, 1, 1)).unwrap();
    let second = SuperMatrix::new(a0.plus(1, 1, -1).plus(2, 1, 1), a1).unwrap();
    assert_eq!(first.base(), second.base());
    assert_eq!(order_cmp_star(&first, &second), OrderVerdict::StrictlyLess);
}

#[test]
fn super_matrix_counts() {
    // each nonzero base entry carries an odd unit or not
    for n in 2..=3 {
        for r in 1..=3 {
            let expected: usize = matrices(n, r)
                .iter()
                .map(|m| 1usize << m.entries().iter().filter(|&&x| x > 0).count())
                .sum();
            let all = super_matrices(n, r);
            assert_eq!(all.len(), expected);
            assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), expected);
        }
    }
    assert_eq!(super_matrices(2, 1).len(), 8);
}

#[test]
fn row_col_examples() {
    let a = SuperMatrix::even(IMat::unit(2, 1, 2)).unwrap();
    assert_eq!(
        row_col(&a),
        (Composition(vec![1, 0]), Composition(vec![0, 1]))
    );
    let a = SuperMatrix::new(IMat::zero(2), IMat::unit(2, 2, 1)).unwrap();
    assert_eq!(
        row_col(&a),
        (Composition(vec![0, 1]), Composition(vec![1, 0]))
    );
}

fn arb_super(n: usize) -> impl Strategy<Value = SuperMatrix> {
    (
        prop::collection::vec(0i32..3, n * n),
        prop::collection::vec(0i32..2, n * n),
    )
        .prop_map(move |(a0, a1)| {
            let rows = |e: &Vec<i32>| e.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>();
            SuperMatrix::new(
                IMat::from_rows(&rows(&a0)).unwrap(),
                IMat::from_rows(&rows(&a1)).unwrap(),
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn json_round_trip(a in arb_super(3)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: SuperMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partial_flag_splits(a in arb_super(3)) {
        prop_assert_eq!(partial_flag(&a), hat_length(&a.base()) + a.a0().dot(a.a1()));
        prop_assert_eq!(a.parity() as i32, a.a1().total() % 2);
    }

    #[test]
    fn bottom_row_always_passes_the_corner_test(a in arb_super(3)) {
        prop_assert!(sdp_row(&a.base(), 3));
    }
}

#[test]
fn json_defaults_missing_parts() {
    let a: SuperMatrix = serde_json::from_str(r#"{"a1":[[0,1],[0,0]]}"#).unwrap();
    assert_eq!(
        a,
        SuperMatrix::new(IMat::zero(2), IMat::unit(2, 1, 2)).unwrap()
    );
    assert!(serde_json::from_str::<SuperMatrix>(r#"{"a1":[[0,2],[0,0]]}"#).is_err());
    assert!(serde_json::from_str::<SuperMatrix>(r#"{"n":3,"a0":[[0,1],[0,0]]}"#).is_err());
}
