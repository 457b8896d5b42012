//! Chebyshev polynomials of the third (`V`) and fourth (`W`) kinds.
//!
//! `V_n` and `W_n` are rescaled Jacobi polynomials with parameters
//! `(-1/2, 1/2)` and `(1/2, -1/2)`; they contain every power of `x`.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::error::{Error, Result};
use crate::kernel::{choose, double_factorial, factorial, pochhammer};
use crate::rational::Rational;

use super::{pow2, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    Third,
    Fourth,
}

impl Kind {
    pub(crate) fn basis(self) -> BasisSpec {
        match self {
            Kind::Third => BasisSpec::ChebyshevV,
            Kind::Fourth => BasisSpec::ChebyshevW,
        }
    }

    /// `1/2 - n` for V, `-1/2 - n` for W.
    pub(crate) fn pochhammer_base(self, n: usize) -> Rational {
        let half = match self {
            Kind::Third => Rational::new(1, 2),
            Kind::Fourth => Rational::new(-1, 2),
        };
        half - Rational::from(n)
    }
}

fn to_monomial(kind: Kind) -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, kind.basis(), BasisSpec::Monomial, move |n, k| {
        let base = kind.pochhammer_base(n);
        let n_plus_one = Rational::from(n + 1);
        let sum: Rational = (0..=k)
            .map(|l| {
                pow2(l as i64) * pochhammer(&n_plus_one, n - l) * pochhammer(&base, l)
                    / (factorial(k - l) * factorial(l))
            })
            .sum();
        Ok(pow2(n as i64) / choose(2 * n, n) * sign(k as i64) / factorial(n - k) * sum)
    })
}

pub fn v_to_monomial() -> CoefficientFunction {
    to_monomial(Kind::Third)
}

pub fn w_to_monomial() -> CoefficientFunction {
    to_monomial(Kind::Fourth)
}

/// `x^n = Σ_k α(n,k) V_{n-k}` with
/// `α(n,k) = n! Σ_l (-1)^l (2(n-l)+1)!! / ((k-l)! (2n-l-k+1)! l!)`.
pub fn monomial_to_v() -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, BasisSpec::Monomial, BasisSpec::ChebyshevV, |n, k| {
        let mut sum = Rational::zero();
        for l in 0..=k {
            sum += sign(l as i64) * double_factorial(2 * (n - l) as i64 + 1)?
                / (factorial(k - l) * factorial(2 * n - l - k + 1) * factorial(l));
        }
        Ok(factorial(n) * sum)
    })
}

/// `x^n = Σ_k α(n,k) W_{n-k}` with
/// `α(n,k) = (2(n-k)+1) n! Σ_l (-1)^l (2(n-l)-1)!! / ((k-l)! (2n-l-k+1)! l!)`.
pub fn monomial_to_w() -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, BasisSpec::Monomial, BasisSpec::ChebyshevW, |n, k| {
        let mut sum = Rational::zero();
        for l in 0..=k {
            sum += sign(l as i64) * double_factorial(2 * (n - l) as i64 - 1)?
                / (factorial(k - l) * factorial(2 * n - l - k + 1) * factorial(l));
        }
        Ok(Rational::from(2 * (n - k) + 1) * factorial(n) * sum)
    })
}

/// Ascending monomial coefficients of `V_n` (or `W_n`) from the explicit sum
/// `Σ_{k=⌈n/2⌉}^{n} C(k, n-k) 2^{2k-n-1} (-1)^{n-k} x^{2k-n-1} (2x ∓ (2k-n)/k)`,
/// stated for `n ≥ 1`.
fn explicit_polynomial(kind: Kind, n: usize) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::Domain("explicit V/W sum is stated for n >= 1".into()));
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in n.div_ceil(2)..=n {
        let (n_i, k_i) = (n as i64, k as i64);
        let common = choose(k, n - k) * pow2(2 * k_i - n_i - 1) * sign(n_i - k_i);
        // 2x · x^{2k-n-1} = 2 x^{2k-n}
        coeffs[2 * k - n] += Rational::integer(2) * &common;
        let tail = Rational::new(2 * k_i - n_i, k_i) * &common;
        if tail.is_zero() {
            continue;
        }
        let power = 2 * k - n - 1;
        match kind {
            Kind::Third => coeffs[power] -= &tail,
            Kind::Fourth => coeffs[power] += &tail,
        }
    }
    Ok(coeffs)
}

pub fn explicit_v_polynomial(n: usize) -> Result<Vec<Rational>> {
    explicit_polynomial(Kind::Third, n)
}

pub fn explicit_w_polynomial(n: usize) -> Result<Vec<Rational>> {
    explicit_polynomial(Kind::Fourth, n)
}

fn explicit(kind: Kind) -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, kind.basis(), BasisSpec::Monomial, move |n, k| {
        if n == 0 {
            return Ok(Rational::one());
        }
        let coeffs = explicit_polynomial(kind, n)?;
        Ok(coeffs[n - k].clone())
    })
}

/// `V → monomial` from the explicit sum; degree 0 is the constant `1`.
pub fn explicit_v() -> CoefficientFunction {
    explicit(Kind::Third)
}

/// `W → monomial` from the explicit sum; degree 0 is the constant `1`.
pub fn explicit_w() -> CoefficientFunction {
    explicit(Kind::Fourth)
}
