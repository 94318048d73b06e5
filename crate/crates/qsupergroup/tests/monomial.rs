use qcombinat::{super_matrices, IMat, SuperMatrix};
use qsupergroup::*;

#[test]
fn monomials_are_triangular_n2() {
    let mut with_lower = 0;
    let mut nontrivial_lc = 0;
    for r in 1..=3 {
        for a in super_matrices(2, r) {
            let rep = triangular_check(&a).unwrap();
            assert!(rep.passed(), "{rep:?}");
            with_lower += (rep.lower_terms > 0) as usize;
            nontrivial_lc += (rep.expected != "1") as usize;
        }
    }
    assert!(
        with_lower > 0 && nontrivial_lc > 0,
        "{with_lower} {nontrivial_lc}"
    );
}

#[test]
fn monomials_are_triangular_n3() {
    for r in 1..=2 {
        for a in super_matrices(3, r) {
            let rep = triangular_check(&a).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}

#[test]
fn two_odd_off_diagonal_entries() {
    let a = SuperMatrix::new(
        IMat::zero(2),
        IMat::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(),
    )
    .unwrap();
    let rep = triangular_check(&a).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn transition_matrices_are_invertible() {
    for r in 1..=3 {
        let t = TransitionMatrix::build(2, r).unwrap();
        assert_eq!(t.size(), super_matrices(2, r).len());
        assert!(t.is_invertible(), "r={r}");
    }
    let t = TransitionMatrix::build(2, 2).unwrap();
    assert!(!t.determinant().is_zero());
}

#[test]
fn transition_matrix_round_trips_through_json() {
    let t = TransitionMatrix::build(2, 1).unwrap();
    let s = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<TransitionMatrix>(&s).unwrap(), t);
}

#[test]
fn determinant_is_the_product_of_leading_coefficients() {
    for r in 1..=3 {
        let t = TransitionMatrix::build(2, r).unwrap();
        let lc = t
            .basis
            .iter()
            .fold(qcoeff::RatFun::one(), |c, a| c * leading_coefficient(a));
        let det = t.determinant();
        assert!(
            det == lc || det == -lc.clone(),
            "r={r}: det {det}, product {lc}"
        );
    }
}
