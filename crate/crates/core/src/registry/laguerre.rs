//! Generalized Laguerre polynomials to and from the monomials.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::kernel::{binomial, factorial, pochhammer};
use crate::rational::Rational;

use super::sign;

/// `α(n,k) = (-1)^{n-k}/(n-k)! · C(n+α, k)`.
pub fn laguerre_to_monomial(alpha: Rational) -> CoefficientFunction {
    let spec = BasisSpec::laguerre(alpha.clone());
    CoefficientFunction::new(Form::Alpha, spec, BasisSpec::Monomial, move |n, k| {
        let top = &alpha + Rational::from(n);
        Ok(sign((n - k) as i64) * binomial(&top, k) / factorial(n - k))
    })
}

/// `α(n,k) = (-n)_{n-k} (α+n-k+1)_k`.
pub fn monomial_to_laguerre(alpha: Rational) -> CoefficientFunction {
    let spec = BasisSpec::laguerre(alpha.clone());
    CoefficientFunction::new(Form::Alpha, BasisSpec::Monomial, spec, move |n, k| {
        let minus_n = -Rational::from(n);
        let base = &alpha + Rational::from(n - k + 1);
        Ok(pochhammer(&minus_n, n - k) * pochhammer(&base, k))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn first_degree() {
        let to = laguerre_to_monomial(q("0"));
        assert_eq!(to.row(1).unwrap(), [q("-1"), q("1")]);
        for a in ["0", "1/2", "-2/3", "5"] {
            let from = monomial_to_laguerre(q(a));
            assert_eq!(from.row(1).unwrap(), [q("-1"), q(a) + q("1")]);
            assert_eq!(from.row(0).unwrap(), [q("1")]);
            assert_eq!(laguerre_to_monomial(q(a)).row(0).unwrap(), [q("1")]);
        }
    }

    #[test]
    fn second_degree() {
        // L_2^{(a)} = x^2/2 - (a+2)x + (a+1)(a+2)/2
        let a = q("1/2");
        let to = laguerre_to_monomial(a.clone());
        let expected = [q("1/2"), -(&a + q("2")), (&a + q("1")) * (&a + q("2")) / q("2")];
        assert_eq!(to.row(2).unwrap(), expected);
    }
}
