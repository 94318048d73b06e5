use qcoeff::RatFun;
use qcombinat::SuperMatrix;
use qschur::{oracle_product, SchurElement, SchurError};
use qsupergroup::*;

fn failures(report: &[RelationResult]) -> Vec<String> {
    report
        .iter()
        .filter(|x| x.status == Status::Fail)
        .map(|x| {
            format!(
                "{} {:?} r={}: {}",
                x.relation,
                x.indices,
                x.r,
                x.counterexample.as_deref().unwrap_or("")
            )
        })
        .collect()
}

#[test]
fn all_relations_hold_n2() {
    for r in 1..=3 {
        let report = relation_suite(2, r).unwrap();
        assert_eq!(report.len(), 36);
        let bad = failures(&report);
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }
}

#[test]
fn all_relations_hold_n3() {
    for r in 1..=3 {
        let bad = failures(&relation_suite(3, r).unwrap());
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }
}

#[test]
fn perturbed_structure_constant_is_caught() {
    let target = SuperMatrix::new(
        qcombinat::IMat::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap(),
        qcombinat::IMat::zero(2),
    )
    .unwrap();
    let perturbed = move |b: &SuperMatrix, a: &SuperMatrix| -> Result<SchurElement, SchurError> {
        let x = oracle_product(b, a)?;
        Ok(if b == &target {
            x.scale(&RatFun::v_pow(1))
        } else {
            x
        })
    };
    let report = relation_suite_with(2, 1, &perturbed).unwrap();
    assert!(!failures(&report).is_empty());
}

#[test]
fn odd_square_example() {
    let x = eval_word(&[(GenSymbol::EOdd(1), 2)], 2, 2).unwrap();
    let a = PlusMinusMatrix::try_new(
        qcombinat::IMat::from_rows(&[vec![0, 2], vec![0, 0]]).unwrap(),
        qcombinat::IMat::zero(2),
    )
    .unwrap();
    let expected = expand_long(&a, &[0, 0], 2).scale(&-(RatFun::v_pow(1) - RatFun::v_pow(-1)));
    assert_eq!(x, expected);
}
