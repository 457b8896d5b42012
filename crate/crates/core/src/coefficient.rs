//! Coefficient functions.
//!
//! A coefficient function `α(n, k)` for a map from basis `s` to basis `t`
//! satisfies `s_n = Σ_{k=0}^{n} α(n, k) t_{n-k}`: the offset `k` counts down
//! from the top degree. A parity-compressed `β(n, k)` only lists the terms
//! `t_{n-2k}`, `0 ≤ k ≤ ⌊n/2⌋`, and is lifted to `α` by interleaving zeros.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Form {
    /// Defined for `0 ≤ k ≤ n`.
    Alpha,
    /// Defined for `0 ≤ k ≤ ⌊n/2⌋`; only the nonzero parity terms.
    Beta,
}

type EvalFn = dyn Fn(usize, usize) -> Result<Rational> + Send + Sync;

/// An immutable, lazily evaluated map `(n, k) ↦ connection coefficient`.
#[derive(Clone)]
pub struct CoefficientFunction {
    form: Form,
    domain: BasisSpec,
    range: BasisSpec,
    eval: Arc<EvalFn>,
}

impl CoefficientFunction {
    pub fn new<F>(form: Form, domain: BasisSpec, range: BasisSpec, eval: F) -> Self
    where
        F: Fn(usize, usize) -> Result<Rational> + Send + Sync + 'static,
    {
        CoefficientFunction {
            form,
            domain,
            range,
            eval: Arc::new(eval),
        }
    }

    /// `α(n, 0) = 1`, `α(n, k) = 0` otherwise.
    pub fn identity(basis: BasisSpec) -> Self {
        Self::new(Form::Alpha, basis.clone(), basis, |_, k| {
            Ok(if k == 0 { Rational::one() } else { Rational::zero() })
        })
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn domain(&self) -> &BasisSpec {
        &self.domain
    }

    pub fn range(&self) -> &BasisSpec {
        &self.range
    }

    /// Largest valid offset `k` at degree `n`.
    pub fn max_offset(&self, n: usize) -> usize {
        match self.form {
            Form::Alpha => n,
            Form::Beta => n / 2,
        }
    }

    pub fn eval(&self, n: usize, k: usize) -> Result<Rational> {
        if k > self.max_offset(n) {
            return Err(Error::IndexOutOfRange { n, k });
        }
        (self.eval)(n, k)
    }

    /// All coefficients `α(n, 0..=max_offset(n))`.
    pub fn row(&self, n: usize) -> Result<Vec<Rational>> {
        (0..=self.max_offset(n)).map(|k| self.eval(n, k)).collect()
    }

    /// The same function with successful evaluations remembered. Composite
    /// sums revisit the same `(n, k)` many times, so they wrap their inputs.
    pub fn cached(&self) -> Self {
        let inner = Arc::clone(&self.eval);
        let memo: Mutex<HashMap<(usize, usize), Rational>> = Mutex::new(HashMap::new());
        CoefficientFunction {
            form: self.form,
            domain: self.domain.clone(),
            range: self.range.clone(),
            eval: Arc::new(move |n, k| {
                if let Some(hit) = memo.lock().expect("memo lock").get(&(n, k)) {
                    return Ok(hit.clone());
                }
                let value = inner(n, k)?;
                memo.lock().expect("memo lock").insert((n, k), value.clone());
                Ok(value)
            }),
        }
    }

    /// The same values reinterpreted between two other bases, e.g. the
    /// `U → monomial` coefficients read as `U* → {(2x-1)^n}`.
    pub fn relabel(&self, domain: BasisSpec, range: BasisSpec) -> Self {
        CoefficientFunction {
            form: self.form,
            domain,
            range,
            eval: Arc::clone(&self.eval),
        }
    }
}

impl fmt::Debug for CoefficientFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientFunction")
            .field("form", &self.form)
            .field("domain", &self.domain)
            .field("range", &self.range)
            .finish_non_exhaustive()
    }
}
