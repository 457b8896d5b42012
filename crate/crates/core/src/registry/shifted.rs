//! Shifted families `T*`, `U*`, `V*`, `W*`, `P*`, where `p*_n(x) = p_n(2x-1)`.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::error::{Error, Result};
use crate::kernel::{choose, double_factorial, factorial, pochhammer};
use crate::rational::Rational;

use super::third_fourth::Kind;
use super::{pow2, sign};

fn not_shifted(basis: &BasisSpec) -> Error {
    Error::Domain(format!("{basis} is not a shifted Chebyshev or Legendre basis"))
}

fn to_mono(basis: &BasisSpec, f: fn(usize, usize) -> Result<Rational>) -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, basis.clone(), BasisSpec::Monomial, f)
}

fn from_mono(basis: &BasisSpec, f: fn(usize, usize) -> Result<Rational>) -> CoefficientFunction {
    CoefficientFunction::new(Form::Alpha, BasisSpec::Monomial, basis.clone(), f)
}

/// `α(n,k)` with `p*_n(x) = Σ_k α(n,k) x^{n-k}`.
pub fn shifted_to_monomial(basis: &BasisSpec) -> Result<CoefficientFunction> {
    let cf = match basis {
        BasisSpec::ShiftedT => to_mono(basis, |n, k| {
            if n == 0 {
                return Ok(Rational::one());
            }
            let (n_i, k_i) = (n as i64, k as i64);
            let sum: Rational = (0..=k / 2)
                .map(|v| {
                    let v_i = v as i64;
                    choose(n - 2 * v, k - 2 * v) * sign(k_i - v_i) * pow2(2 * (n_i - v_i) - k_i) * factorial(n - v - 1)
                        / (factorial(v) * factorial(n - 2 * v))
                })
                .sum();
            Ok(Rational::new(n_i, 2) * sum)
        }),
        BasisSpec::ShiftedU => to_mono(basis, |n, k| {
            let (n_i, k_i) = (n as i64, k as i64);
            Ok((0..=k / 2)
                .map(|v| {
                    let v_i = v as i64;
                    choose(n - 2 * v, k - 2 * v) * choose(n - v, v) * sign(k_i - v_i) * pow2(2 * (n_i - v_i) - k_i)
                })
                .sum())
        }),
        BasisSpec::ShiftedV => to_mono(basis, |n, k| Ok(shifted_third_fourth(Kind::Third, n, k))),
        BasisSpec::ShiftedW => to_mono(basis, |n, k| Ok(shifted_third_fourth(Kind::Fourth, n, k))),
        BasisSpec::ShiftedLegendre => to_mono(basis, |n, k| {
            let k_i = k as i64;
            let sum: Rational = (0..=k / 2)
                .map(|v| choose(n - 2 * v, k - 2 * v) * choose(2 * n - 2 * v, n) * choose(n, v) * sign(k_i - v as i64))
                .sum();
            Ok(pow2(-k_i) * sum)
        }),
        other => return Err(not_shifted(other)),
    };
    Ok(cf)
}

/// `(-1)^k 2^{2n-k} / (C(2n,n) (n-k)!) Σ_{v=0}^{k} Σ_{l=0}^{v}
///  2^l (1+n)_{n-l} (±1/2-n)_l / ((k-v)! (v-l)! l!)`
fn shifted_third_fourth(kind: Kind, n: usize, k: usize) -> Rational {
    let (n_i, k_i) = (n as i64, k as i64);
    let base = kind.pochhammer_base(n);
    let n_plus_one = Rational::from(n + 1);
    let mut sum = Rational::zero();
    for v in 0..=k {
        for l in 0..=v {
            sum += pow2(l as i64) * pochhammer(&n_plus_one, n - l) * pochhammer(&base, l)
                / (factorial(k - v) * factorial(v - l) * factorial(l));
        }
    }
    sign(k_i) * pow2(2 * n_i - k_i) / (choose(2 * n, n) * factorial(n - k)) * sum
}

/// `α(n,k)` with `x^n = Σ_k α(n,k) p*_{n-k}(x)`.
pub fn monomial_to_shifted(basis: &BasisSpec) -> Result<CoefficientFunction> {
    let cf = match basis {
        BasisSpec::ShiftedT => from_mono(basis, |n, k| {
            let sum: Rational = (k % 2..=k)
                .step_by(2)
                .map(|v| choose(n - v, (k - v) / 2) * choose(n, v) * pow2(v as i64))
                .sum();
            let scale = if k < n { 1 - 2 * n as i64 } else { -2 * n as i64 };
            Ok(pow2(scale) * sum)
        }),
        BasisSpec::ShiftedU => from_mono(basis, |n, k| {
            let two = Rational::integer(2);
            let sum: Rational = (k % 2..=k)
                .step_by(2)
                .map(|v| pow2(v as i64) / (pochhammer(&two, n - (v + k) / 2) * factorial(v) * factorial((k - v) / 2)))
                .sum();
            Ok(pow2(-2 * n as i64) * Rational::from(n - k + 1) * factorial(n) * sum)
        }),
        BasisSpec::ShiftedV => from_mono(basis, |n, k| {
            let mut sum = Rational::zero();
            for v in 0..=k {
                for l in 0..=k - v {
                    sum += sign(l as i64) * double_factorial(2 * (n - v - l) as i64 + 1)?
                        / (factorial(k - v - l) * factorial(2 * n - v - l - k + 1) * factorial(v) * factorial(l));
                }
            }
            Ok(pow2(-(n as i64)) * factorial(n) * sum)
        }),
        BasisSpec::ShiftedW => from_mono(basis, |n, k| {
            let mut sum = Rational::zero();
            for v in 0..=k {
                for l in 0..=k - v {
                    sum += sign(l as i64) * double_factorial(2 * (n - v - l) as i64 - 1)?
                        / (factorial(k - v - l) * factorial(2 * n - v - l - k + 1) * factorial(v) * factorial(l));
                }
            }
            Ok(pow2(-(n as i64)) * Rational::from(2 * (n - k) + 1) * factorial(n) * sum)
        }),
        BasisSpec::ShiftedLegendre => from_mono(basis, |n, k| {
            let three_halves = Rational::new(3, 2);
            let sum: Rational = (k % 2..=k)
                .step_by(2)
                .map(|v| {
                    pow2(v as i64)
                        / (pochhammer(&three_halves, n - (v + k) / 2) * factorial(v) * factorial((k - v) / 2))
                })
                .sum();
            Ok(pow2(-2 * n as i64) * Rational::from(2 * (n - k) + 1) * factorial(n) * sum)
        }),
        other => return Err(not_shifted(other)),
    };
    Ok(cf)
}
