//! Property tests over random bases, parameters and coordinate vectors.

use cobasis::oracle::{oracle_connection, oracle_to_monomial, oracle_values};
use cobasis::{connection_matrix, jacobi_connection, BasisSpec, PolyCoords, Rational};
use proptest::prelude::*;

/// A rational strictly greater than `floor`.
fn above(floor: i64) -> impl Strategy<Value = Rational> {
    (-12i64..40, 1i64..7)
        .prop_map(|(n, d)| Rational::new(n, d))
        .prop_filter("outside the valid range", move |q| *q > Rational::integer(floor))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..7)
        .prop_filter("zero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n, d))
}

fn any_basis() -> impl Strategy<Value = BasisSpec> {
    let lambda = above(-1).prop_filter("degenerate or invalid", |l| !l.is_zero() && *l > Rational::new(-1, 2));
    prop_oneof![
        (0usize..13).prop_map(|i| BasisSpec::parameter_free()[i].clone()),
        (above(-1), above(-1)).prop_map(|(a, b)| BasisSpec::jacobi(a, b)),
        lambda.prop_map(BasisSpec::gegenbauer),
        above(-1).prop_map(BasisSpec::laguerre),
        (nonzero(), nonzero()).prop_map(|(c, d)| BasisSpec::shifted_monomial(c, d)),
    ]
}

fn coords(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-30i64..30, 1i64..10).prop_map(|(n, d)| Rational::new(n, d)), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_match_oracle(a in any_basis(), b in any_basis(), degree in 0usize..7) {
        let formula = connection_matrix(&a, &b, degree).unwrap();
        let oracle = oracle_connection(&a, &b, degree).unwrap();
        prop_assert_eq!(formula.first_difference(&oracle), None, "{} -> {}", a, b);
    }

    #[test]
    fn round_trip_is_identity(a in any_basis(), b in any_basis(), degree in 0usize..7) {
        let ab = connection_matrix(&a, &b, degree).unwrap();
        let ba = connection_matrix(&b, &a, degree).unwrap();
        prop_assert!(ab.mul(&ba).unwrap().is_identity());
        prop_assert_eq!(ab.invert().unwrap(), ba);
    }

    #[test]
    fn diagonal_is_ratio_of_leading_coefficients(a in any_basis(), b in any_basis()) {
        let degree = 6;
        let m = connection_matrix(&a, &b, degree).unwrap();
        let ka = oracle_to_monomial(&a, degree).unwrap().diagonal();
        let kb = oracle_to_monomial(&b, degree).unwrap().diagonal();
        for (j, d) in m.diagonal().iter().enumerate() {
            prop_assert_eq!(d, &(&ka[j] / &kb[j]));
        }
    }

    #[test]
    fn direct_jacobi_matches_routing(
        a in above(-1), b in above(-1), c in above(-1), d in above(-1), degree in 0usize..8,
    ) {
        let direct = jacobi_connection(&a, &b, &c, &d, degree).unwrap();
        let routed = connection_matrix(&BasisSpec::jacobi(a, b), &BasisSpec::jacobi(c, d), degree).unwrap();
        prop_assert_eq!(direct, routed);
    }

    #[test]
    fn conversion_preserves_values(
        a in any_basis(),
        b in any_basis(),
        p in coords(7),
        x in (-6i64..6, 1i64..5).prop_map(|(n, d)| Rational::new(n, d)),
    ) {
        let degree = p.len() - 1;
        let source = PolyCoords::new(a.clone(), p);
        let image = connection_matrix(&a, &b, degree).unwrap().apply(&source).unwrap();
        let value = |c: &PolyCoords| -> Rational {
            let basis = oracle_values(&c.basis, degree, &x).unwrap();
            c.coeffs.iter().zip(&basis).map(|(u, v)| u * v).sum()
        };
        prop_assert_eq!(value(&source), value(&image));
    }
}

#[test]
fn leading_principal_blocks_are_lower_degree_matrices() {
    let a = BasisSpec::laguerre(Rational::new(3, 2));
    let b = BasisSpec::ShiftedW;
    let big = connection_matrix(&a, &b, 7).unwrap();
    for degree in 0..7 {
        let small = connection_matrix(&a, &b, degree).unwrap();
        for j in 0..=degree {
            assert_eq!(&big.column(j)[..=degree], small.column(j));
        }
    }
}

#[test]
fn transitivity_through_a_third_basis() {
    let (a, b, c) = (
        BasisSpec::HermiteProb,
        BasisSpec::gegenbauer(Rational::new(5, 2)),
        BasisSpec::ShiftedT,
    );
    let ab = connection_matrix(&a, &b, 8).unwrap();
    let bc = connection_matrix(&b, &c, 8).unwrap();
    let ac = connection_matrix(&a, &c, 8).unwrap();
    assert_eq!(bc.mul(&ab).unwrap(), ac);
}
