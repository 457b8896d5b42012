use cobasis::registry::{
    from_monomial, parity_to_monomial, shifted_monomial_to_monomial, shifted_to_monomial, to_monomial,
};
use cobasis::{build_matrix, compose, lift_beta_to_alpha, BasisSpec, CoefficientFunction, Rational};

fn chain() -> (CoefficientFunction, CoefficientFunction, CoefficientFunction) {
    // Laguerre → mono → V → He.
    let c = to_monomial(&BasisSpec::laguerre(Rational::new(1, 2))).unwrap();
    let b = from_monomial(&BasisSpec::ChebyshevV).unwrap();
    let v_to_mono = to_monomial(&BasisSpec::ChebyshevV).unwrap();
    let a = compose(&from_monomial(&BasisSpec::HermiteProb).unwrap(), &v_to_mono).unwrap();
    (a, b, c)
}

#[test]
fn composition_is_associative() {
    let (a, b, c) = chain();
    let left = compose(&a, &compose(&b, &c).unwrap()).unwrap();
    let right = compose(&compose(&a, &b).unwrap(), &c).unwrap();
    assert_eq!(left.domain(), &BasisSpec::laguerre(Rational::new(1, 2)));
    assert_eq!(left.range(), &BasisSpec::HermiteProb);
    assert_eq!(build_matrix(&left, 8).unwrap(), build_matrix(&right, 8).unwrap());
}

#[test]
fn composition_agrees_with_matrix_product() {
    let pairs = [
        (BasisSpec::ShiftedW, BasisSpec::gegenbauer(Rational::new(3, 2))),
        (BasisSpec::HermitePhys, BasisSpec::ShiftedLegendre),
        (
            BasisSpec::jacobi(Rational::integer(2), Rational::integer(7)),
            BasisSpec::ChebyshevT,
        ),
        (
            BasisSpec::shifted_monomial(Rational::new(1, 3), Rational::new(-2, 3)),
            BasisSpec::ShiftedU,
        ),
    ];
    for (from, to) in pairs {
        let a2 = to_monomial(&from).unwrap();
        let a1 = from_monomial(&to).unwrap();
        let composed = build_matrix(&compose(&a1, &a2).unwrap(), 10).unwrap();
        let product = build_matrix(&a1, 10)
            .unwrap()
            .mul(&build_matrix(&a2, 10).unwrap())
            .unwrap();
        assert_eq!(composed, product, "{from} -> {to}");
    }
}

#[test]
fn shifted_legendre_from_its_construction() {
    let shift = BasisSpec::shifted_monomial(Rational::integer(2), Rational::integer(-1));
    let legendre = parity_to_monomial(&BasisSpec::Legendre).unwrap();
    let lifted = lift_beta_to_alpha(&legendre)
        .unwrap()
        .relabel(BasisSpec::ShiftedLegendre, shift);
    let outer = shifted_monomial_to_monomial(Rational::integer(2), Rational::integer(-1)).unwrap();
    let replayed = compose(&outer, &lifted).unwrap();
    let closed = shifted_to_monomial(&BasisSpec::ShiftedLegendre).unwrap();
    for n in 0..=8 {
        assert_eq!(replayed.row(n).unwrap(), closed.row(n).unwrap(), "n = {n}");
    }
}
