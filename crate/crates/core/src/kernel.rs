//! Combinatorial primitives over exact rationals.
//!
//! Gamma functions never appear at runtime. Every ratio `Γ(x+m)/Γ(x)` is
//! rewritten as a rising factorial, with negative counts defined through
//! [`gamma_ratio`].

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Rising factorial `x (x+1) ... (x+m-1)`; `1` when `m = 0`.
pub fn pochhammer(x: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    let one = Rational::one();
    for _ in 0..m {
        if term.is_zero() {
            return Rational::zero();
        }
        acc *= &term;
        term += &one;
    }
    acc
}

/// `Γ(x+m)/Γ(x)` for any signed `m`.
///
/// For `m < 0` this is `1 / (x+m)_{-m}`, a pole when that product vanishes.
pub fn gamma_ratio(x: &Rational, m: i64) -> Result<Rational> {
    if m >= 0 {
        return Ok(pochhammer(x, m as usize));
    }
    let count = m.unsigned_abs() as usize;
    let base = x + Rational::integer(m);
    pochhammer(&base, count)
        .recip()
        .ok_or_else(|| Error::Pole(format!("Γ({x}{m:+})/Γ({x}) has a vanishing denominator")))
}

/// `m!` for non-negative `m`.
pub fn factorial(m: usize) -> Rational {
    (2..=m).map(Rational::from).product()
}

/// `m!! = m (m-2) (m-4) ...`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(m: i64) -> Result<Rational> {
    if m < -1 {
        return Err(Error::Domain(format!("double factorial of {m}")));
    }
    let mut acc = Rational::one();
    let mut k = m;
    while k > 1 {
        acc *= Rational::integer(k);
        k -= 2;
    }
    Ok(acc)
}

/// Generalized binomial `C(x, k) = (x-k+1)_k / k!`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let base = x - Rational::from(k) + Rational::one();
    pochhammer(&base, k) / factorial(k)
}

/// Integer binomial `C(n, k)`, zero when `k > n`.
pub fn choose(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binomial(&Rational::from(n), k)
}

/// `a / b` where `b` may vanish for degenerate parameters.
pub(crate) fn divide(numer: &Rational, denom: &Rational, what: &str) -> Result<Rational> {
    numer
        .checked_div(denom)
        .ok_or_else(|| Error::Pole(format!("{what} vanishes")))
}
