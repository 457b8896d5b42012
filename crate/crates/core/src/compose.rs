//! Composition of coefficient functions through an exchange basis.
//!
//! With `a2: v → s` and `a1: s → t`, the composite `v → t` is
//! `α3(n,k) = Σ_{v=0}^{k} α1(n-v, k-v) α2(n,v)`, the element formula of the
//! matrix product `M_tv = M_ts M_sv`. The two parity variants skip the terms
//! that are structurally zero and must agree with the general sum.
//!
//! All composites are lazy: they capture their inputs and evaluate the sums
//! on demand, remembering each input value the first time it is needed.

use crate::coefficient::{CoefficientFunction, Form};
use crate::error::{Error, Result};
use crate::rational::Rational;

fn expect_form(cf: &CoefficientFunction, expected: Form) -> Result<()> {
    if cf.form() == expected {
        Ok(())
    } else {
        Err(Error::FormMismatch {
            expected,
            found: cf.form(),
        })
    }
}

/// `outer` must start where `inner` ends.
fn expect_chain(outer: &CoefficientFunction, inner: &CoefficientFunction) -> Result<()> {
    if outer.domain() == inner.range() {
        Ok(())
    } else {
        Err(Error::BasisMismatch {
            expected: inner.range().to_string(),
            found: outer.domain().to_string(),
        })
    }
}

/// `α(n,k) = β(n,k/2)` for even `k`, `0` for odd `k`.
pub fn lift_beta_to_alpha(beta: &CoefficientFunction) -> Result<CoefficientFunction> {
    expect_form(beta, Form::Beta)?;
    let inner = beta.clone();
    Ok(CoefficientFunction::new(
        Form::Alpha,
        beta.domain().clone(),
        beta.range().clone(),
        move |n, k| {
            if k % 2 == 0 {
                inner.eval(n, k / 2)
            } else {
                Ok(Rational::zero())
            }
        },
    ))
}

/// General composition: `a2: v → s`, `a1: s → t` give `v → t`.
pub fn compose(a1: &CoefficientFunction, a2: &CoefficientFunction) -> Result<CoefficientFunction> {
    expect_form(a1, Form::Alpha)?;
    expect_form(a2, Form::Alpha)?;
    expect_chain(a1, a2)?;
    let (outer, inner) = (a1.cached(), a2.cached());
    Ok(CoefficientFunction::new(
        Form::Alpha,
        a2.domain().clone(),
        a1.range().clone(),
        move |n, k| {
            let mut sum = Rational::zero();
            for v in 0..=k {
                let right = inner.eval(n, v)?;
                if right.is_zero() {
                    continue;
                }
                sum += outer.eval(n - v, k - v)? * right;
            }
            Ok(sum)
        },
    ))
}

/// Both sides parity-compressed:
/// `β3(n,k) = Σ_{v=0}^{k} β1(n-2v, k-v) β2(n,v)`.
pub fn compose_parity(b1: &CoefficientFunction, b2: &CoefficientFunction) -> Result<CoefficientFunction> {
    expect_form(b1, Form::Beta)?;
    expect_form(b2, Form::Beta)?;
    expect_chain(b1, b2)?;
    let (outer, inner) = (b1.cached(), b2.cached());
    Ok(CoefficientFunction::new(
        Form::Beta,
        b2.domain().clone(),
        b1.range().clone(),
        move |n, k| {
            let mut sum = Rational::zero();
            for v in 0..=k {
                sum += outer.eval(n - 2 * v, k - v)? * inner.eval(n, v)?;
            }
            Ok(sum)
        },
    ))
}

/// Parity-compressed outer map over a general inner map:
/// `α3(n,k) = Σ_{v ≤ k, k-v even} β1(n-v, (k-v)/2) α2(n,v)`.
pub fn compose_mixed(b1: &CoefficientFunction, a2: &CoefficientFunction) -> Result<CoefficientFunction> {
    expect_form(b1, Form::Beta)?;
    expect_form(a2, Form::Alpha)?;
    expect_chain(b1, a2)?;
    let (outer, inner) = (b1.cached(), a2.cached());
    Ok(CoefficientFunction::new(
        Form::Alpha,
        a2.domain().clone(),
        b1.range().clone(),
        move |n, k| {
            let mut sum = Rational::zero();
            for v in (k % 2..=k).step_by(2) {
                sum += outer.eval(n - v, (k - v) / 2)? * inner.eval(n, v)?;
            }
            Ok(sum)
        },
    ))
}
