//! Property suites for rationals, square classes, symbols and polynomials.

use num_traits::Zero;
use proptest::prelude::*;
use torsion2::poly::Poly;
use torsion2::rational::{int, rat, Rational};
use torsion2::square::{hilbert_symbol, relevant_places, square_class, Place, Sign};

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-300i64..=300, 1i64..=60)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #[test]
    fn square_class_is_multiplicative(r in nonzero_rational(), s in nonzero_rational()) {
        let lhs = &square_class(&r).unwrap() * &square_class(&s).unwrap();
        let rhs = square_class(&(r * s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_class_ignores_squares(r in nonzero_rational(), t in nonzero_rational()) {
        let scaled = r.clone() * (&t * &t);
        prop_assert_eq!(square_class(&r).unwrap(), square_class(&scaled).unwrap());
    }

    #[test]
    fn hilbert_product_formula(a in -10_000i64..=10_000, b in -10_000i64..=10_000) {
        prop_assume!(a != 0 && b != 0);
        let (ra, rb) = (int(a), int(b));
        let ca = square_class(&ra).unwrap();
        let cb = square_class(&rb).unwrap();
        // the symbol is +1 at every place outside this finite set
        let places = relevant_places(&[&ca, &cb]);
        let mut product = Sign::Plus;
        for v in &places {
            product = product * hilbert_symbol(&ra, &rb, v).unwrap();
        }
        prop_assert_eq!(product, Sign::Plus);
    }

    #[test]
    fn hilbert_symmetry(a in -500i64..=500, b in -500i64..=500, p in 0usize..=5) {
        prop_assume!(a != 0 && b != 0);
        let v = match p {
            0 => Place::Real,
            1 => Place::finite(2),
            2 => Place::finite(3),
            3 => Place::finite(5),
            4 => Place::finite(7),
            _ => Place::finite(11),
        };
        prop_assert_eq!(
            hilbert_symbol(&int(a), &int(b), &v).unwrap(),
            hilbert_symbol(&int(b), &int(a), &v).unwrap()
        );
    }

    #[test]
    fn hilbert_bimultiplicative(a in -200i64..=200, b in -200i64..=200, c in -200i64..=200) {
        prop_assume!(a != 0 && b != 0 && c != 0);
        for v in [Place::Real, Place::finite(2), Place::finite(3), Place::finite(5)] {
            let lhs = hilbert_symbol(&int(a * b), &int(c), &v).unwrap();
            let rhs = hilbert_symbol(&int(a), &int(c), &v).unwrap()
                * hilbert_symbol(&int(b), &int(c), &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rational_roots_found_exactly(
        roots in proptest::collection::vec((-12i64..=12, 1i64..=4), 1..=4),
        lead_num in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2), Just(3)],
        with_irreducible in any::<bool>(),
    ) {
        let mut expected: Vec<Rational> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
        let mut p = Poly::from_roots(&int(lead_num), &expected);
        if with_irreducible {
            p = &p * &Poly::from_int_coeffs(&[1, 0, 1]); // x^2 + 1 has no rational roots
        }
        expected.sort();
        let found = p.rational_roots();
        prop_assert_eq!(&found, &expected);
        for r in &found {
            prop_assert!(p.eval(r).is_zero());
        }
    }
}
