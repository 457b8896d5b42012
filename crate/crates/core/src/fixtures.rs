//! Worked examples with known exact answers.
//!
//! Each fixture recomputes a small matrix or expansion through the public
//! routing API and pairs it with the expected values, so the same set backs
//! the `repro` command and the acceptance suite.

use crate::basis::BasisSpec;
use crate::error::Result;
use crate::matrix::{connection_matrix, PolyCoords, TriangularMatrix};
use crate::rational::Rational;

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

pub struct Fixture {
    pub name: &'static str,
    pub title: &'static str,
    run: fn() -> Result<Vec<Check>>,
}

impl Fixture {
    pub fn run(&self) -> Result<Vec<Check>> {
        (self.run)()
    }
}

fn b(token: &str) -> BasisSpec {
    token.parse().expect("fixture tokens are valid")
}

fn text(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

fn check(label: impl Into<String>, expected: &[&str], computed: &[Rational]) -> Check {
    Check {
        label: label.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
        computed: text(computed),
    }
}

fn matrix_rows(m: &TriangularMatrix, expected: &[&[&str]]) -> Vec<Check> {
    m.rows()
        .iter()
        .zip(expected)
        .enumerate()
        .map(|(i, (row, want))| check(format!("row {i}"), want, row))
        .collect()
}

fn shiftm() -> Result<Vec<Check>> {
    let m = connection_matrix(&b("shiftmono:1/3,-2/3"), &BasisSpec::Monomial, 3)?;
    let mut checks = matrix_rows(
        &m,
        &[
            &["1", "-2/3", "4/9", "-8/27"],
            &["0", "1/3", "-4/9", "4/9"],
            &["0", "0", "1/9", "-2/9"],
            &["0", "0", "0", "1/27"],
        ],
    );
    checks.push(check(
        "((x-2)/3)^3, ascending",
        &["-8/27", "4/9", "-2/9", "1/27"],
        m.column(3),
    ));
    Ok(checks)
}

fn mshift() -> Result<Vec<Check>> {
    let m = connection_matrix(&BasisSpec::Monomial, &b("shiftmono:1/3,-2/3"), 3)?;
    let mut checks = matrix_rows(
        &m,
        &[
            &["1", "2", "4", "8"],
            &["0", "3", "12", "36"],
            &["0", "0", "9", "54"],
            &["0", "0", "0", "27"],
        ],
    );
    checks.push(check(
        "x^3 in ((x-2)/3)^k, ascending",
        &["8", "36", "54", "27"],
        m.column(3),
    ));
    Ok(checks)
}

fn u3star() -> Result<Vec<Check>> {
    let m = connection_matrix(&BasisSpec::ShiftedU, &BasisSpec::Monomial, 3)?;
    let mut checks = matrix_rows(
        &m,
        &[
            &["1", "-2", "3", "-4"],
            &["0", "4", "-16", "40"],
            &["0", "0", "16", "-96"],
            &["0", "0", "0", "64"],
        ],
    );
    checks.push(check("U_3(2x-1), ascending", &["-4", "40", "-96", "64"], m.column(3)));
    Ok(checks)
}

fn tstar() -> Result<Vec<Check>> {
    let m = connection_matrix(&BasisSpec::Monomial, &BasisSpec::ShiftedT, 3)?;
    let mut checks = matrix_rows(
        &m,
        &[
            &["1", "1/2", "3/8", "5/16"],
            &["0", "1/2", "1/2", "15/32"],
            &["0", "0", "1/8", "3/16"],
            &["0", "0", "0", "1/32"],
        ],
    );
    checks.push(check("x^2 in T*, ascending", &["3/8", "1/2", "1/8", "0"], m.column(2)));
    checks.push(check(
        "x^3 in T*, ascending",
        &["5/16", "15/32", "3/16", "1/32"],
        m.column(3),
    ));
    Ok(checks)
}

fn w4() -> Result<Vec<Check>> {
    let m = connection_matrix(&BasisSpec::Monomial, &BasisSpec::ChebyshevW, 4)?;
    Ok(vec![check(
        "x^4 in W, ascending",
        &["3/8", "-1/4", "1/4", "-1/16", "1/16"],
        m.column(4),
    )])
}

fn pstar4() -> Result<Vec<Check>> {
    let m = connection_matrix(&BasisSpec::Monomial, &BasisSpec::ShiftedLegendre, 4)?;
    Ok(vec![check(
        "x^4 in P*, ascending",
        &["1/5", "2/5", "2/7", "1/10", "1/70"],
        m.column(4),
    )])
}

fn jacobi() -> Result<Vec<Check>> {
    let m = connection_matrix(&b("jacobi:2,7"), &b("jacobi:1,8"), 4)?;
    let mut checks = matrix_rows(
        &m,
        &[
            &["1", "1", "9/11", "15/22", "15/26"],
            &["0", "1", "12/11", "10/11", "10/13"],
            &["0", "0", "1", "7/6", "77/78"],
            &["0", "0", "0", "1", "16/13"],
            &["0", "0", "0", "0", "1"],
        ],
    );
    checks.push(check(
        "P_3^(2,7) in P^(1,8), ascending",
        &["15/22", "10/11", "7/6", "1", "0"],
        m.column(3),
    ));
    Ok(checks)
}

fn h5() -> Result<Vec<Check>> {
    const COORDS: [&str; 6] = ["76/3", "-4/7", "-640/21", "-32/9", "8/7", "8/63"];
    let to_mono = connection_matrix(&BasisSpec::HermitePhys, &BasisSpec::Monomial, 5)?;
    let direct = connection_matrix(&BasisSpec::HermitePhys, &BasisSpec::ShiftedLegendre, 5)?;
    let mono_to_p = connection_matrix(&BasisSpec::Monomial, &BasisSpec::ShiftedLegendre, 5)?;
    let h5 = PolyCoords::new(BasisSpec::Monomial, to_mono.column(5).to_vec());
    let applied = mono_to_p.apply(&h5)?;
    Ok(vec![
        check(
            "H_5 = 32x^5 - 160x^3 + 120x, ascending",
            &["0", "120", "0", "-160", "0", "32"],
            to_mono.column(5),
        ),
        check("H_5 in P*, ascending", &COORDS, direct.column(5)),
        check("H_5 monomial coordinates mapped to P*", &COORDS, &applied.coeffs),
    ])
}

/// All fixtures, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "shiftm",
            title: "shifted monomials (c=1/3, d=-2/3) to monomials",
            run: shiftm,
        },
        Fixture {
            name: "mshift",
            title: "monomials to shifted monomials (c=1/3, d=-2/3)",
            run: mshift,
        },
        Fixture {
            name: "u3star",
            title: "shifted Chebyshev U to monomials",
            run: u3star,
        },
        Fixture {
            name: "tstar",
            title: "monomials to shifted Chebyshev T",
            run: tstar,
        },
        Fixture {
            name: "w4",
            title: "x^4 in Chebyshev W",
            run: w4,
        },
        Fixture {
            name: "pstar4",
            title: "x^4 in shifted Legendre",
            run: pstar4,
        },
        Fixture {
            name: "jacobi",
            title: "Jacobi (2,7) to Jacobi (1,8)",
            run: jacobi,
        },
        Fixture {
            name: "h5",
            title: "physicist's Hermite H_5 in shifted Legendre",
            run: h5,
        },
    ]
}

pub fn find(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}
