use proptest::prelude::*;
use qcoeff::{
    quantum_binom, quantum_int, ratfun_div, step_poly, Coeff, LaurentPoly, RatFun, ZLaurent,
};

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// `[m choose s]` as a product of ratios `(v^k - v^-k)`, evaluated in `Q(v)`.
fn binom_by_ratios(m: u32, s: u32) -> RatFun {
    let diff = |k: i64| {
        RatFun::from_laurent(LaurentPoly::from_terms([
            (k, Coeff::from_i64(1)),
            (-k, Coeff::from_i64(-1)),
        ]))
    };
    let mut acc = RatFun::one();
    for i in 1..=s as i64 {
        acc = &acc * &diff(m as i64 - i + 1);
        acc = ratfun_div(&acc, &diff(i)).unwrap();
    }
    acc
}

#[test]
fn binomials_agree_with_ratio_products() {
    for m in 0..=8 {
        for s in 0..=m {
            assert_eq!(
                RatFun::from_laurent(quantum_binom(m, s)),
                binom_by_ratios(m, s),
                "m={m} s={s}"
            );
        }
    }
}

#[test]
fn pascal_identity() {
    for m in 1..=8u32 {
        for s in 1..=m {
            let rhs = quantum_binom(m - 1, s).shift(s as i64)
                + quantum_binom(m - 1, s - 1).shift(s as i64 - m as i64);
            assert_eq!(quantum_binom(m, s), rhs, "m={m} s={s}");
        }
    }
}

#[test]
fn quantum_int_is_shifted_step_sum() {
    for m in 1..=10 {
        assert_eq!(quantum_int(m), step_poly(m, 1).shift(1 - m as i64));
    }
}

#[test]
fn binom_symmetry() {
    for m in 0..=9 {
        for s in 0..=m {
            assert_eq!(quantum_binom(m, s), quantum_binom(m, m - s));
        }
    }
}

#[test]
fn ratfun_div_examples() {
    let a: RatFun = "v^2 - v^-2".parse().unwrap();
    let b: RatFun = "v - v^-1".parse().unwrap();
    assert_eq!(ratfun_div(&a, &b).unwrap(), "v + v^-1".parse().unwrap());
    let x: RatFun = "(3*v + 1)/(v^2 + 5)".parse().unwrap();
    assert_eq!(ratfun_div(&x, &x).unwrap(), RatFun::one());
    let num = RatFun::from_laurent(&quantum_int(2) * &quantum_binom(3, 1));
    let q = ratfun_div(&num, &RatFun::from_laurent(quantum_int(3))).unwrap();
    assert_eq!(q, RatFun::from_laurent(lp("v + v^-1")));
    assert!(ratfun_div(&x, &RatFun::zero()).is_err());
}

fn small_laurent() -> impl Strategy<Value = ZLaurent> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..5).prop_map(ZLaurent::from_terms)
}

fn small_ratfun() -> impl Strategy<Value = RatFun> {
    (small_laurent(), small_laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFun::new(n.to_rational(), d.to_rational()).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in small_laurent()) {
        let back: ZLaurent = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a.clone());
        let q: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(q, a.to_rational());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in small_laurent(), b in small_laurent()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        let q = p.to_rational().div_exact(&b.to_rational());
        prop_assert_eq!(q, Some(a.to_rational()));
    }

    #[test]
    fn ratfun_canonical_and_field(x in small_ratfun(), y in small_ratfun()) {
        let again = RatFun::new(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        let text: RatFun = x.to_string().parse().unwrap();
        prop_assert_eq!(&text, &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&ratfun_div(&x, &y).unwrap() * &y, x.clone());
        }
        prop_assert_eq!(x.den().min_exp(), Some(0));
        prop_assert!(x.den().leading_coeff().unwrap().is_one());
    }
}
