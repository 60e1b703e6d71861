//! Property suites for the quadratic-form layer.

use proptest::prelude::*;
use torsion2::gw::{gw_sum, is_isometric, trace_form_weighted, GwElement};
use torsion2::poly::Poly;
use torsion2::rational::{int, signum, Rational};
use torsion2::square::{square_class_of_int, SquareClass};

fn arb_class() -> impl Strategy<Value = SquareClass> {
    (-50i64..=50)
        .prop_filter("nonzero", |&n| n != 0)
        .prop_map(|n| square_class_of_int(n).unwrap())
}

fn arb_form() -> impl Strategy<Value = GwElement> {
    proptest::collection::vec(arb_class(), 0..=6).prop_map(GwElement::new)
}

proptest! {
    #[test]
    fn isometry_is_reflexive_and_symmetric(e1 in arb_form(), e2 in arb_form()) {
        prop_assert!(is_isometric(&e1, &e1));
        prop_assert_eq!(is_isometric(&e1, &e2), is_isometric(&e2, &e1));
    }

    #[test]
    fn isometry_transitive_on_scaled_forms(e in arb_form(), k in 1i64..=5) {
        // e, e rescaled by a square, and e with entries re-sorted must all
        // be isometric to one another
        let scaled = GwElement::new(
            e.entries()
                .iter()
                .map(|c| c * &square_class_of_int(k * k).unwrap())
                .collect(),
        );
        prop_assert!(is_isometric(&e, &scaled));
        let sum = gw_sum(&e, &GwElement::zero());
        prop_assert!(is_isometric(&scaled, &sum) == is_isometric(&e, &sum));
    }

    #[test]
    fn hasse_minus_set_has_even_size(e in arb_form()) {
        // product formula over all places
        prop_assert_eq!(e.invariants().hasse.len() % 2, 0);
    }

    #[test]
    fn sum_invariants_are_additive(e1 in arb_form(), e2 in arb_form()) {
        let i1 = e1.invariants();
        let i2 = e2.invariants();
        let i = gw_sum(&e1, &e2).invariants();
        prop_assert_eq!(i.rank, i1.rank + i2.rank);
        prop_assert_eq!(i.signature, i1.signature + i2.signature);
        prop_assert_eq!(i.discriminant, &i1.discriminant * &i2.discriminant);
    }

    #[test]
    fn trace_form_signature_counts_rising_roots(
        roots in proptest::collection::vec(-20i64..=20, 3..=4),
        lead in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)],
    ) {
        let mut rs: Vec<i64> = roots;
        rs.sort();
        rs.dedup();
        prop_assume!(rs.len() >= 3);
        let root_rats: Vec<Rational> = rs.iter().map(|&r| int(r)).collect();
        let p = Poly::from_roots(&int(lead), &root_rats);
        let t = trace_form_weighted(&p).unwrap();
        let deriv = p.derivative();
        let expected: i64 = root_rats
            .iter()
            .map(|z| i64::from(signum(&deriv.eval(z))))
            .sum();
        prop_assert_eq!(t.invariants().signature, expected);
    }
}
