//! Formula-independent ground truth.
//!
//! Every basis is expanded in the monomials from its three-term recurrence
//! (or, for shifted families, by substituting `2x-1` into the unshifted
//! expansion), and connection matrices follow from a triangular solve. None
//! of this touches the closed-form registry; only the rational kernel is
//! shared.

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::matrix::{connection_matrix, TriangularMatrix};
use crate::rational::Rational;

/// Ascending monomial coefficients.
type Poly = Vec<Rational>;

type StepFn = Box<dyn Fn(usize) -> Result<(Rational, Rational, Rational)>>;

/// `p_n = (a_n x + b_n) p_{n-1} - c_n p_{n-2}` for `n ≥ 2`.
pub struct RecurrenceSpec {
    pub p0: Poly,
    pub p1: Poly,
    step: StepFn,
}

impl RecurrenceSpec {
    pub fn new<F>(p0: Poly, p1: Poly, step: F) -> Self
    where
        F: Fn(usize) -> Result<(Rational, Rational, Rational)> + 'static,
    {
        RecurrenceSpec {
            p0,
            p1,
            step: Box::new(step),
        }
    }

    pub fn generate(&self, degree: usize) -> Result<Vec<Poly>> {
        let mut polys = vec![self.p0.clone()];
        if degree >= 1 {
            polys.push(self.p1.clone());
        }
        for n in 2..=degree {
            let (a, b, c) = (self.step)(n)?;
            let prev = &polys[n - 1];
            let prev2 = &polys[n - 2];
            let mut next = vec![Rational::zero(); n + 1];
            for (j, coeff) in prev.iter().enumerate() {
                next[j + 1] += &a * coeff;
                next[j] += &b * coeff;
            }
            for (j, coeff) in prev2.iter().enumerate() {
                next[j] -= &(&c * coeff);
            }
            polys.push(next);
        }
        for (n, p) in polys.iter().enumerate() {
            if p.len() != n + 1 || p[n].is_zero() {
                return Err(Error::Pole(format!("recurrence lost degree at n = {n}")));
            }
        }
        Ok(polys)
    }
}

fn int(v: i64) -> Rational {
    Rational::integer(v)
}

fn nat(v: usize) -> Rational {
    Rational::from(v)
}

fn div(numer: Rational, denom: &Rational) -> Result<Rational> {
    numer
        .checked_div(denom)
        .ok_or_else(|| Error::Pole("recurrence denominator vanishes".into()))
}

/// `p_n = 2x p_{n-1} - p_{n-2}` with the given `p_1`.
fn chebyshev(p1: Poly) -> RecurrenceSpec {
    RecurrenceSpec::new(vec![int(1)], p1, |_| Ok((int(2), int(0), int(1))))
}

/// The recurrence for an unshifted family, `None` for bases built otherwise.
pub fn recurrence(basis: &BasisSpec) -> Option<RecurrenceSpec> {
    let one = || vec![int(1)];
    let spec = match basis {
        BasisSpec::ChebyshevT => chebyshev(vec![int(0), int(1)]),
        BasisSpec::ChebyshevU => chebyshev(vec![int(0), int(2)]),
        BasisSpec::ChebyshevV => chebyshev(vec![int(-1), int(2)]),
        BasisSpec::ChebyshevW => chebyshev(vec![int(1), int(2)]),
        BasisSpec::Legendre => RecurrenceSpec::new(one(), vec![int(0), int(1)], |n| {
            let n_r = nat(n);
            Ok((nat(2 * n - 1) / &n_r, int(0), nat(n - 1) / &n_r))
        }),
        BasisSpec::Gegenbauer { lambda } => {
            let lambda = lambda.clone();
            let p1 = vec![int(0), int(2) * &lambda];
            RecurrenceSpec::new(one(), p1, move |n| {
                let n_r = nat(n);
                let a = int(2) * (&n_r + &lambda - int(1)) / &n_r;
                let c = (&n_r + int(2) * &lambda - int(2)) / &n_r;
                Ok((a, int(0), c))
            })
        }
        BasisSpec::HermitePhys => {
            RecurrenceSpec::new(one(), vec![int(0), int(2)], |n| Ok((int(2), int(0), nat(2 * (n - 1)))))
        }
        BasisSpec::HermiteProb => {
            RecurrenceSpec::new(one(), vec![int(0), int(1)], |n| Ok((int(1), int(0), nat(n - 1))))
        }
        BasisSpec::Laguerre { alpha } => {
            let alpha = alpha.clone();
            let p1 = vec![&alpha + int(1), int(-1)];
            RecurrenceSpec::new(one(), p1, move |n| {
                let n_r = nat(n);
                let b = (nat(2 * n - 1) + &alpha) / &n_r;
                let c = (nat(n - 1) + &alpha) / &n_r;
                Ok((int(-1) / &n_r, b, c))
            })
        }
        BasisSpec::Jacobi { alpha, beta } => {
            let (alpha, beta) = (alpha.clone(), beta.clone());
            let ab = &alpha + &beta;
            let p1 = vec![(&alpha - &beta) / int(2), (&ab + int(2)) / int(2)];
            RecurrenceSpec::new(one(), p1, move |n| {
                let n_r = nat(n);
                let s = int(2) * &n_r + &ab;
                let denom = int(2) * &n_r * (&n_r + &ab) * (&s - int(2));
                let a = div((&s - int(1)) * &s * (&s - int(2)), &denom)?;
                let b = div((&s - int(1)) * (&alpha * &alpha - &beta * &beta), &denom)?;
                let c = div(int(2) * (&n_r + &alpha - int(1)) * (&n_r + &beta - int(1)) * &s, &denom)?;
                Ok((a, b, c))
            })
        }
        _ => return None,
    };
    Some(spec)
}

fn poly_mul(lhs: &[Rational], rhs: &[Rational]) -> Poly {
    let mut out = vec![Rational::zero(); lhs.len() + rhs.len() - 1];
    for (i, a) in lhs.iter().enumerate() {
        for (j, b) in rhs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `p(q(x))` by Horner's rule.
fn substitute(p: &[Rational], q: &[Rational]) -> Poly {
    let mut acc: Poly = vec![Rational::zero()];
    for coeff in p.iter().rev() {
        acc = poly_mul(&acc, q);
        acc[0] += coeff;
    }
    acc.truncate((p.len() - 1) * (q.len() - 1) + 1);
    acc
}

fn unshifted(basis: &BasisSpec) -> Option<BasisSpec> {
    match basis {
        BasisSpec::ShiftedT => Some(BasisSpec::ChebyshevT),
        BasisSpec::ShiftedU => Some(BasisSpec::ChebyshevU),
        BasisSpec::ShiftedV => Some(BasisSpec::ChebyshevV),
        BasisSpec::ShiftedW => Some(BasisSpec::ChebyshevW),
        BasisSpec::ShiftedLegendre => Some(BasisSpec::Legendre),
        _ => None,
    }
}

/// Monomial expansions `p_0 .. p_degree` of a basis, ascending coefficients.
pub fn oracle_polynomials(basis: &BasisSpec, degree: usize) -> Result<Vec<Poly>> {
    if let Some(spec) = recurrence(basis) {
        return spec.generate(degree);
    }
    if let Some(base) = unshifted(basis) {
        let line = vec![int(-1), int(2)];
        return Ok(oracle_polynomials(&base, degree)?
            .iter()
            .map(|p| substitute(p, &line))
            .collect());
    }
    let factor = match basis {
        BasisSpec::Monomial => vec![int(0), int(1)],
        BasisSpec::ShiftedMonomial { c, d } => {
            if c.is_zero() {
                return Err(Error::InvalidParameter {
                    basis: basis.to_string(),
                    constraint: "c != 0".into(),
                });
            }
            vec![d.clone(), c.clone()]
        }
        _ => unreachable!("every basis has an oracle construction"),
    };
    let mut polys = vec![vec![int(1)]];
    for n in 1..=degree {
        polys.push(poly_mul(&polys[n - 1], &factor));
    }
    Ok(polys)
}

/// Column `j` holds the monomial coefficients of basis element `j`.
pub fn oracle_to_monomial(basis: &BasisSpec, degree: usize) -> Result<TriangularMatrix> {
    let columns = oracle_polynomials(basis, degree)?
        .into_iter()
        .map(|mut p| {
            p.resize(degree + 1, Rational::zero());
            p
        })
        .collect();
    TriangularMatrix::from_columns(basis.clone(), BasisSpec::Monomial, columns)
}

/// Solves `B X = A` column by column, with `A = from → monomial` and
/// `B = to → monomial`.
pub fn oracle_connection(from: &BasisSpec, to: &BasisSpec, degree: usize) -> Result<TriangularMatrix> {
    let a = oracle_to_monomial(from, degree)?;
    let b = oracle_to_monomial(to, degree)?;
    let size = degree + 1;
    let mut columns = Vec::with_capacity(size);
    for j in 0..size {
        let mut x = vec![Rational::zero(); size];
        for i in (0..=j).rev() {
            let mut acc = a.get(i, j).clone();
            for (s, xs) in x.iter().enumerate().take(j + 1).skip(i + 1) {
                acc -= &(b.get(i, s) * xs);
            }
            x[i] = div(acc, b.get(i, i))?;
        }
        columns.push(x);
    }
    TriangularMatrix::from_columns(from.clone(), to.clone(), columns)
}

/// Values `p_0(x) .. p_degree(x)` of a basis at a rational point.
pub fn oracle_values(basis: &BasisSpec, degree: usize, x: &Rational) -> Result<Vec<Rational>> {
    Ok(oracle_polynomials(basis, degree)?
        .iter()
        .map(|p| p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub formula_value: Rational,
    pub oracle_value: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub from: BasisSpec,
    pub to: BasisSpec,
    pub degree: usize,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub formula: Option<TriangularMatrix>,
    #[serde(skip)]
    pub oracle: Option<TriangularMatrix>,
}

impl VerificationReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Compares the closed-form pipeline with the oracle for one ordered pair.
pub fn verify_pair(from: &BasisSpec, to: &BasisSpec, degree: usize) -> VerificationReport {
    let mut report = VerificationReport {
        from: from.clone(),
        to: to.clone(),
        degree,
        equal: false,
        first_mismatch: None,
        error: None,
        formula: None,
        oracle: None,
    };
    let formula = connection_matrix(from, to, degree);
    let oracle = oracle_connection(from, to, degree);
    match (formula, oracle) {
        (Ok(formula), Ok(oracle)) => {
            match formula.first_difference(&oracle) {
                None => report.equal = true,
                Some((row, col)) => {
                    report.first_mismatch = Some(Mismatch {
                        row,
                        col,
                        formula_value: formula.get(row, col).clone(),
                        oracle_value: oracle.get(row, col).clone(),
                    })
                }
            }
            report.formula = Some(formula);
            report.oracle = Some(oracle);
        }
        (Err(e), _) => report.error = Some(format!("formula path: {e}")),
        (_, Err(e)) => report.error = Some(format!("oracle path: {e}")),
    }
    report
}

/// Runs [`verify_pair`] over many pairs in parallel, preserving order.
pub fn verify_pairs(pairs: &[(BasisSpec, BasisSpec)], degree: usize) -> Vec<VerificationReport> {
    pairs
        .par_iter()
        .map(|(from, to)| verify_pair(from, to, degree))
        .collect()
}

/// The sampled parameterizations used by the full verification sweep.
pub fn sweep_bases() -> Vec<BasisSpec> {
    let mut bases = BasisSpec::parameter_free().to_vec();
    let q = |n, d| Rational::new(n, d);
    bases.extend([
        BasisSpec::jacobi(q(1, 1), q(8, 1)),
        BasisSpec::jacobi(q(2, 1), q(7, 1)),
        BasisSpec::jacobi(q(-1, 2), q(1, 2)),
        BasisSpec::gegenbauer(q(3, 2)),
        BasisSpec::laguerre(q(1, 2)),
        BasisSpec::shifted_monomial(q(1, 3), q(-2, 3)),
    ]);
    bases
}

/// Every ordered pair of the given bases, including `(A, A)`.
pub fn all_pairs(bases: &[BasisSpec]) -> Vec<(BasisSpec, BasisSpec)> {
    bases
        .iter()
        .flat_map(|a| bases.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}
