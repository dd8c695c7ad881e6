use num_bigint::BigInt;
use proptest::prelude::*;
use sievekit::MultiPoly;

const QT: [&str; 2] = ["q", "t"];

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((0u32..5, 0u32..5, -20i64..20), 0..8).prop_map(|terms| {
        let mut p = MultiPoly::zero(&QT);
        for (a, b, c) in terms {
            p = &p + &MultiPoly::monomial(&QT, &[a, b], c);
        }
        p
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(&QT), a.clone());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn division_round_trip(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -4i64..5, y in -4i64..5) {
        let at = |p: &MultiPoly| p.eval_i64(&[x, y]).unwrap();
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert_eq!(at(&(&a + &b)), at(&a) + at(&b));
    }

    #[test]
    fn parse_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(MultiPoly::parse(&text, &QT).unwrap(), a);
    }

    #[test]
    fn elementary_basis_round_trip(a in poly()) {
        let sym = &a + &a.swap_vars("q", "t").unwrap();
        let h = sym.to_elementary_basis().unwrap();
        let e1 = MultiPoly::parse("q + t", &QT).unwrap();
        let e2 = MultiPoly::parse("q*t", &QT).unwrap();
        prop_assert_eq!(h.substitute(&[("e1", e1), ("e2", e2)]).unwrap(), sym);
    }

    #[test]
    fn pow_matches_repeated_product(a in poly(), e in 0u32..4) {
        let mut acc = MultiPoly::one(&QT);
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }
}

#[test]
fn non_divisible_is_an_error() {
    let a = MultiPoly::parse("q^2 + t", &QT).unwrap();
    let b = MultiPoly::parse("q + 1", &QT).unwrap();
    assert!(a.exact_div(&b).is_err());
    assert!(a.exact_div(&MultiPoly::zero(&QT)).is_err());
}

#[test]
fn canonical_order_is_graded() {
    let p = MultiPoly::parse("1 + t^2 + q*t + q^3", &QT).unwrap();
    assert_eq!(p.to_string(), "q^3 + q*t + t^2 + 1");
    assert_eq!(p.eval_i64(&[2, 3]).unwrap(), BigInt::from(24));
}
