use qcoeff::{quantum_factorial, RatFun};
use qcombinat::{compositions, one_move, sdp_row, super_matrices, Composition, IMat, SuperMatrix};
use qschur::*;

/// `(n, max r)` ranges swept by the exhaustive comparisons.
const RANGES: [(usize, i32); 2] = [(2, 3), (3, 2)];

fn vmv() -> RatFun {
    RatFun::v_pow(1) - RatFun::v_pow(-1)
}

fn all_pairs() -> impl Iterator<Item = (GeneratorShape, SuperMatrix)> {
    RANGES.into_iter().flat_map(|(n, rmax)| {
        (1..=rmax).flat_map(move |r| {
            super_matrices(n, r).into_iter().flat_map(|a| {
                GeneratorShape::all_for_weight(&a.ro())
                    .into_iter()
                    .map(move |s| (s, a.clone()))
            })
        })
    })
}

#[test]
fn closed_formulas_match_the_oracle() {
    let mut exact = 0;
    for (shape, a) in all_pairs() {
        let oracle = oracle_product(&shape.matrix().unwrap(), &a).unwrap();
        match formula_product(&shape, &a) {
            Ok(f) => {
                assert_eq!(f, oracle, "{shape:?} on {a}");
                exact += 1;
            }
            Err(SchurError::HeadOnly(_)) => {
                assert!(matches!(
                    shape,
                    GeneratorShape::DOdd { .. }
                        | GeneratorShape::EOdd { .. }
                        | GeneratorShape::FOdd { .. }
                ))
            }
            Err(e) => panic!("{shape:?} on {a}: {e}"),
        }
    }
    assert!(exact > 1000);
}

#[test]
fn even_shapes_are_always_exact() {
    for (shape, a) in all_pairs() {
        if matches!(
            shape,
            GeneratorShape::D { .. } | GeneratorShape::E { .. } | GeneratorShape::F { .. }
        ) {
            assert!(formula_product(&shape, &a).is_ok());
        }
    }
}

#[test]
fn wrong_weight_gives_zero_and_wrong_algebra_errors() {
    let a = SuperMatrix::diag(&Composition(vec![1, 1]));
    let s = GeneratorShape::E {
        h: 1,
        lambda: Composition(vec![0, 2]),
    };
    assert!(formula_product(&s, &a).unwrap().is_zero());
    let s = GeneratorShape::E {
        h: 1,
        lambda: Composition(vec![0, 3]),
    };
    assert!(matches!(formula_product(&s, &a), Err(SchurError::Shape(_))));
}

#[test]
fn diagonal_head_is_exact_on_the_last_row() {
    for (n, rmax) in RANGES {
        for r in 1..=rmax {
            for a in super_matrices(n, r) {
                let d = GeneratorShape::DOdd {
                    i: n,
                    lambda: a.ro(),
                };
                let Ok(m) = d.matrix() else { continue };
                let oracle = oracle_product(&m, &a).unwrap();
                assert_eq!(head_terms(HeadKind::K, n, &a).unwrap(), oracle, "{a}");
            }
        }
    }
}

#[test]
fn odd_tails_lie_below_the_stated_bounds() {
    let mut checked = [0; 3];
    for (n, rmax) in [(2, 4), (3, 3)] {
        for r in 1..=rmax {
            for a in super_matrices(n, r) {
                let b = a.base();
                let lam = a.ro();
                for h in 1..=n {
                    if let Ok(m) = (GeneratorShape::DOdd {
                        i: h,
                        lambda: lam.clone(),
                    })
                    .matrix()
                    {
                        let rest = oracle_product(&m, &a)
                            .unwrap()
                            .sub(&head_terms(HeadKind::K, h, &a).unwrap());
                        assert!(support_check(&rest, &a, false), "K h={h} {a}: {rest}");
                        checked[0] += !sdp_row(&b, h) as usize;
                    }
                    if h == n {
                        continue;
                    }
                    let ups: Vec<IMat> = (1..=n)
                        .map(|k| one_move(&b, h, k, 1))
                        .filter(IMat::is_nonneg)
                        .collect();
                    if let Ok(m) = (GeneratorShape::EOdd {
                        h,
                        lambda: lam.clone(),
                    })
                    .matrix()
                    {
                        let rest = oracle_product(&m, &a)
                            .unwrap()
                            .sub(&head_terms(HeadKind::E, h, &a).unwrap());
                        assert!(support_below_any(&rest, &ups), "E h={h} {a}: {rest}");
                        checked[1] += !rest.is_zero() as usize;
                    }
                    let downs: Vec<IMat> = (1..=n)
                        .map(|k| one_move(&b, h, k, -1))
                        .filter(IMat::is_nonneg)
                        .collect();
                    if let Ok(m) = (GeneratorShape::FOdd {
                        h,
                        lambda: lam.clone(),
                    })
                    .matrix()
                    {
                        let rest = oracle_product(&m, &a)
                            .unwrap()
                            .sub(&head_terms(HeadKind::F, h, &a).unwrap())
                            .sub(
                                &head_terms(HeadKind::FCorrection, h, &a)
                                    .unwrap()
                                    .scale(&vmv()),
                            );
                        assert!(support_below_any(&rest, &downs), "F h={h} {a}: {rest}");
                        // The correction is the whole 1-down part of the remainder.
                        assert!(
                            rest.restrict(|t| downs.contains(&t.base())).is_zero(),
                            "F h={h} {a}: {rest}"
                        );
                        checked[2] += !sdp_row(&b, h) as usize;
                    }
                }
            }
        }
    }
    assert!(checked.iter().all(|&c| c > 10), "{checked:?}");
}

#[test]
fn correction_vanishes_under_the_corner_condition() {
    for (n, rmax) in RANGES {
        for r in 1..=rmax {
            for a in super_matrices(n, r) {
                for h in 1..n {
                    if sdp_row(&a.base(), h) {
                        assert!(
                            head_terms(HeadKind::FCorrection, h, &a).unwrap().is_zero(),
                            "{a} h={h}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn last_diagonal_generator_on_upper_triangular_matrices() {
    for (n, rmax) in [(2, 3), (3, 3)] {
        for r in 1..=rmax {
            for a in super_matrices(n, r) {
                let b = a.base();
                let upper = (1..=n).all(|i| (1..i).all(|j| b.at(i, j) == 0));
                if !upper || a.a0().at(n, n) == 0 || a.a1().at(n, n) != 0 {
                    continue;
                }
                let m = GeneratorShape::DOdd {
                    i: n,
                    lambda: a.ro(),
                }
                .matrix()
                .unwrap();
                let expect = SuperMatrix::new(a.a0().plus(n, n, -1), a.a1().plus(n, n, 1)).unwrap();
                assert_eq!(
                    oracle_product(&m, &a).unwrap(),
                    SchurElement::basis(&expect),
                    "{a}"
                );
            }
        }
    }
}

#[test]
fn special_products_match_the_oracle() {
    let mut count = 0;
    for (n, rmax) in [(2, 3), (3, 3)] {
        for r in 1..=rmax {
            for mu in compositions(n, r - 1) {
                for h in 1..n {
                    for case in SpecialCase::ALL {
                        let (left, right, rhs) = special_product(case, &mu, h).unwrap();
                        assert_eq!(
                            oracle_product(&left, &right).unwrap(),
                            rhs,
                            "{case:?} mu={mu} h={h}"
                        );
                        count += 1;
                    }
                }
            }
        }
    }
    assert!(count > 50);
}

#[test]
fn special_product_three_term_instance() {
    let (left, right, rhs) =
        special_product(SpecialCase::OddUpEvenDown, &Composition(vec![0, 1]), 1).unwrap();
    assert_eq!(rhs.len(), 3);
    assert_eq!(oracle_product(&left, &right).unwrap(), rhs);
    // With mu = (1, 0) two of the three terms leave the index set.
    let (left, right, rhs) =
        special_product(SpecialCase::OddUpEvenDown, &Composition(vec![1, 0]), 1).unwrap();
    assert_eq!(rhs.len(), 1);
    assert_eq!(oracle_product(&left, &right).unwrap(), rhs);
}

#[test]
fn odd_even_commutation_relations_hold() {
    for (n, rmax) in [(3, 3), (4, 2)] {
        for r in 1..=rmax {
            for lam in compositions(n, r - 1) {
                for h in 1..n - 1 {
                    for (lhs, rhs) in relation_sides(&lam, h).unwrap() {
                        assert_eq!(lhs, rhs, "lambda={lam} h={h}");
                    }
                }
            }
        }
    }
}

fn divided_shape(raise: bool, h: usize, lambda: &Composition, p: i32) -> GeneratorShape {
    if raise {
        GeneratorShape::EPow {
            h,
            lambda: lambda.clone(),
            p,
        }
    } else {
        GeneratorShape::FPow {
            h,
            lambda: lambda.clone(),
            p,
        }
    }
}

#[test]
fn divided_powers_match_the_oracle() {
    for (n, rmax) in [(2, 4), (3, 3)] {
        for r in 1..=rmax {
            for a in super_matrices(n, r) {
                for h in 1..n {
                    for raise in [true, false] {
                        for p in 0..=r {
                            let shape = divided_shape(raise, h, &a.ro(), p);
                            let Ok(m) = shape.matrix() else { continue };
                            let oracle = oracle_product(&m, &a).unwrap();
                            assert_eq!(
                                formula_product(&shape, &a).unwrap(),
                                oracle,
                                "{shape:?} {a}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn divided_powers_factor_through_single_steps() {
    for (n, rmax) in [(2, 4), (3, 3)] {
        for r in 1..=rmax {
            for lam in compositions(n, r) {
                for h in 1..n {
                    for raise in [true, false] {
                        for p in 1..=r {
                            let Ok(m) = divided_shape(raise, h, &lam, p).matrix() else {
                                continue;
                            };
                            let step = if raise { 1 } else { -1 };
                            let mut prod = SchurElement::identity(n, r);
                            for i in (0..p).rev() {
                                let w = lam.plus(h, step * i).plus(h + 1, -step * i);
                                let s = divided_shape(raise, h, &w, 1).matrix().unwrap();
                                prod = oracle_mul(&prod, &SchurElement::basis(&s)).unwrap();
                            }
                            let fact = RatFun::from_z(&quantum_factorial(p as u32));
                            assert_eq!(
                                prod,
                                SchurElement::basis(&m).scale(&fact),
                                "{lam} h={h} p={p}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn support_check_trivia() {
    let a = SuperMatrix::diag(&Composition(vec![1, 1]));
    assert!(support_check(&SchurElement::zero(2, 2), &a, false));
    assert!(!support_check(&SchurElement::basis(&a), &a, false));
    assert!(!support_check(&SchurElement::basis(&a), &a, true));
    let odd = SuperMatrix::new(IMat::diag(&[0, 1]), IMat::diag(&[1, 0])).unwrap();
    assert!(support_check(&SchurElement::basis(&a), &odd, true));
    assert!(!support_check(&SchurElement::basis(&odd), &a, true));
}
