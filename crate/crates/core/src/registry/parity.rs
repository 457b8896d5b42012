//! Parity-compressed (`β`) maps for the six families of definite parity:
//! Gegenbauer, Chebyshev T and U, Legendre, and both Hermite families.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::error::{Error, Result};
use crate::kernel::{choose, divide, factorial, pochhammer};
use crate::rational::Rational;

use super::{pow2, sign};

fn not_parity(basis: &BasisSpec) -> Error {
    Error::Domain(format!("{basis} has no parity-compressed coefficient function"))
}

fn nonzero_lambda(basis: &BasisSpec, lambda: &Rational) -> Result<()> {
    if lambda.is_zero() {
        Err(Error::InvalidParameter {
            basis: basis.to_string(),
            constraint: "lambda != 0 (lambda = 0 is degenerate; use the Chebyshev T basis instead)".into(),
        })
    } else {
        Ok(())
    }
}

/// `β(n, k)` with `p_n = Σ_k β(n,k) x^{n-2k}`.
pub fn parity_to_monomial(basis: &BasisSpec) -> Result<CoefficientFunction> {
    let beta = |f: fn(usize, usize) -> Rational| {
        CoefficientFunction::new(Form::Beta, basis.clone(), BasisSpec::Monomial, move |n, k| Ok(f(n, k)))
    };
    let cf =
        match basis {
            BasisSpec::Gegenbauer { lambda } => {
                nonzero_lambda(basis, lambda)?;
                let lambda = lambda.clone();
                CoefficientFunction::new(Form::Beta, basis.clone(), BasisSpec::Monomial, move |n, k| {
                    let (n_i, k_i) = (n as i64, k as i64);
                    Ok(sign(k_i) * pow2(n_i - 2 * k_i) * pochhammer(&lambda, n - k)
                        / (factorial(k) * factorial(n - 2 * k)))
                })
            }
            BasisSpec::ChebyshevT => beta(|n, k| {
                if n == 0 {
                    return Rational::one();
                }
                let (n_i, k_i) = (n as i64, k as i64);
                sign(k_i) * pow2(n_i - 2 * k_i) * Rational::new(n_i, 2) * factorial(n - k - 1)
                    / (factorial(k) * factorial(n - 2 * k))
            }),
            BasisSpec::ChebyshevU => beta(|n, k| {
                let (n_i, k_i) = (n as i64, k as i64);
                sign(k_i) * pow2(n_i - 2 * k_i) * choose(n - k, k)
            }),
            BasisSpec::Legendre => {
                beta(|n, k| sign(k as i64) * pow2(-(n as i64)) * choose(n, k) * choose(2 * n - 2 * k, n))
            }
            BasisSpec::HermitePhys => beta(|n, k| {
                let (n_i, k_i) = (n as i64, k as i64);
                sign(k_i) * pow2(n_i - 2 * k_i) * factorial(n) / (factorial(k) * factorial(n - 2 * k))
            }),
            BasisSpec::HermiteProb => beta(|n, k| {
                let k_i = k as i64;
                sign(k_i) * pow2(-k_i) * factorial(n) / (factorial(k) * factorial(n - 2 * k))
            }),
            other => return Err(not_parity(other)),
        };
    Ok(cf)
}

/// `β(n, k)` with `x^n = Σ_k β(n,k) p_{n-2k}`.
pub fn monomial_to_parity(basis: &BasisSpec) -> Result<CoefficientFunction> {
    let beta = |f: fn(usize, usize) -> Rational| {
        CoefficientFunction::new(Form::Beta, BasisSpec::Monomial, basis.clone(), move |n, k| Ok(f(n, k)))
    };
    let cf = match basis {
        BasisSpec::Gegenbauer { lambda } => {
            nonzero_lambda(basis, lambda)?;
            let lambda = lambda.clone();
            CoefficientFunction::new(Form::Beta, BasisSpec::Monomial, basis.clone(), move |n, k| {
                let shifted = &lambda + Rational::one();
                let numer = pow2(-(n as i64)) * (&lambda + Rational::from(n) - Rational::from(2 * k)) * factorial(n);
                let denom = &lambda * pochhammer(&shifted, n - k) * factorial(k);
                divide(&numer, &denom, "lambda (lambda+1)_{n-k}")
            })
        }
        BasisSpec::ChebyshevT => beta(|n, k| {
            let scale = if 2 * k < n { 1 - n as i64 } else { -(n as i64) };
            pow2(scale) * choose(n, k)
        }),
        BasisSpec::ChebyshevU => beta(|n, k| {
            pow2(-(n as i64)) * Rational::from(n - 2 * k + 1) * factorial(n)
                / (pochhammer(&Rational::integer(2), n - k) * factorial(k))
        }),
        BasisSpec::Legendre => beta(|n, k| {
            pow2(-(n as i64)) * Rational::from(2 * (n - 2 * k) + 1) * factorial(n)
                / (pochhammer(&Rational::new(3, 2), n - k) * factorial(k))
        }),
        BasisSpec::HermitePhys => beta(|n, k| pow2(-(n as i64)) * factorial(n) / (factorial(n - 2 * k) * factorial(k))),
        BasisSpec::HermiteProb => beta(|n, k| pow2(-(k as i64)) * factorial(n) / (factorial(n - 2 * k) * factorial(k))),
        other => return Err(not_parity(other)),
    };
    Ok(cf)
}
