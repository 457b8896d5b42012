//! Jacobi polynomials to and from the monomials.
//!
//! Both maps come from the expansion of `P_n^{(α,β)}` in powers of
//! `(x-1)/2` and of `((1+x)/2)^n` in Jacobi polynomials, pushed through the
//! shifted-monomial change of basis. The Gamma ratios are folded into
//! rising factorials so every coefficient is rational.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::kernel::{choose, divide, factorial, pochhammer};
use crate::rational::Rational;

use super::{pow2, sign};

/// `α(n,k)` with `P_n^{(α,β)}(x) = Σ_k α(n,k) x^{n-k}`.
///
/// `α(n,k) = (-1)^{n-k}/n! Σ_{l=0}^{k} (-2)^{l-n} C(n-l, n-k) C(n, n-l)
///           (α+n-l+1)_l (α+β+n+1)_{n-l}`
pub fn jacobi_to_monomial(alpha: Rational, beta: Rational) -> CoefficientFunction {
    let spec = BasisSpec::jacobi(alpha.clone(), beta.clone());
    let ab = &alpha + &beta;
    CoefficientFunction::new(Form::Alpha, spec, BasisSpec::Monomial, move |n, k| {
        let (n_i, k_i) = (n as i64, k as i64);
        let mut sum = Rational::zero();
        for l in 0..=k {
            let l_i = l as i64;
            let term = sign(l_i - n_i)
                * pow2(l_i - n_i)
                * choose(n - l, n - k)
                * choose(n, n - l)
                * pochhammer(&(&alpha + Rational::from(n - l + 1)), l)
                * pochhammer(&(&ab + Rational::from(n + 1)), n - l);
            sum += term;
        }
        Ok(sign(n_i - k_i) * sum / factorial(n))
    })
}

/// `α(n,k)` with `x^n = Σ_k α(n,k) P_{n-k}^{(α,β)}(x)`.
///
/// The leading factor `(α+β+2(n-k)+1)(α+β+2)_{n-k-1}` is taken as `1` at
/// `k = n`; the `(α+β+2)_{-1} = 1/(α+β+1)` form would otherwise put a
/// removable pole at `α+β = -1`.
pub fn monomial_to_jacobi(alpha: Rational, beta: Rational) -> CoefficientFunction {
    let spec = BasisSpec::jacobi(alpha.clone(), beta.clone());
    let ab = &alpha + &beta;
    CoefficientFunction::new(Form::Alpha, BasisSpec::Monomial, spec, move |n, k| {
        let m = n - k;
        let ab2 = &ab + Rational::integer(2);
        let lead = if m == 0 {
            Rational::one()
        } else {
            (&ab + Rational::from(2 * m + 1)) * pochhammer(&ab2, m - 1)
        };
        let mut sum = Rational::zero();
        for l in 0..=k {
            let numer = pow2((n - l) as i64)
                * choose(n, n - l)
                * sign(l as i64)
                * pochhammer(&(&beta + Rational::from(1 + m)), k - l)
                * pochhammer(&Rational::from(k - l + 1), m);
            let denom = pochhammer(&ab2, n - l) * pochhammer(&(&ab2 + Rational::from(n - l)), m);
            sum += divide(&numer, &denom, "(alpha+beta+2)_{n-l} (n-l+alpha+beta+2)_{n-k}")?;
        }
        Ok(lead * sum)
    })
}
