//! The render/parse round-trip property on random polynomials.

use proptest::prelude::*;
use torsion2::poly::Poly;
use torsion2::rational::rat;
use torsion2_cli::parse::parse_poly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn render_then_parse_is_identity(
        coeffs in proptest::collection::vec((-100i64..=100, 1i64..=100), 0..=9)
    ) {
        let p = Poly::new(coeffs.into_iter().map(|(n, d)| rat(n, d)).collect());
        let q = parse_poly(&p.to_string()).unwrap();
        prop_assert_eq!(p, q);
    }
}
