//! Maps between the monomials and `{(cx+d)^n}` from the binomial theorem.

use crate::basis::BasisSpec;
use crate::coefficient::{CoefficientFunction, Form};
use crate::error::{Error, Result};
use crate::kernel::choose;
use crate::rational::Rational;

fn require_nonzero(c: &Rational, d: &Rational) -> Result<BasisSpec> {
    let spec = BasisSpec::shifted_monomial(c.clone(), d.clone());
    if c.is_zero() {
        return Err(Error::InvalidParameter {
            basis: spec.to_string(),
            constraint: "c != 0".into(),
        });
    }
    Ok(spec)
}

/// `(cx+d)^n = Σ_k C(n,k) c^{n-k} d^k x^{n-k}`.
pub fn shifted_monomial_to_monomial(c: Rational, d: Rational) -> Result<CoefficientFunction> {
    let spec = require_nonzero(&c, &d)?;
    Ok(CoefficientFunction::new(
        Form::Alpha,
        spec,
        BasisSpec::Monomial,
        move |n, k| {
            let c_pow = c.pow((n - k) as i64).expect("non-negative power");
            let d_pow = d.pow(k as i64).expect("non-negative power");
            Ok(choose(n, k) * c_pow * d_pow)
        },
    ))
}

/// `x^n = Σ_k C(n,k) c^{-n} (-d)^k (cx+d)^{n-k}`.
pub fn monomial_to_shifted_monomial(c: Rational, d: Rational) -> Result<CoefficientFunction> {
    let spec = require_nonzero(&c, &d)?;
    let minus_d = -&d;
    Ok(CoefficientFunction::new(
        Form::Alpha,
        BasisSpec::Monomial,
        spec,
        move |n, k| {
            let c_pow = c.pow(-(n as i64)).expect("c is nonzero");
            let d_pow = minus_d.pow(k as i64).expect("non-negative power");
            Ok(choose(n, k) * c_pow * d_pow)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn row(cf: &CoefficientFunction, n: usize) -> Vec<String> {
        cf.row(n).unwrap().iter().map(Rational::to_string).collect()
    }

    #[test]
    fn third_powers() {
        let to = shifted_monomial_to_monomial(q("1/3"), q("-2/3")).unwrap();
        assert_eq!(row(&to, 3), ["1/27", "-2/9", "4/9", "-8/27"]);
        let from = monomial_to_shifted_monomial(q("1/3"), q("-2/3")).unwrap();
        assert_eq!(row(&from, 3), ["27", "54", "36", "8"]);
        let odd = shifted_monomial_to_monomial(q("2"), q("-1")).unwrap();
        assert_eq!(row(&odd, 3), ["8", "-12", "6", "-1"]);
    }

    #[test]
    fn unit_shift_is_identity() {
        for cf in [
            shifted_monomial_to_monomial(q("1"), q("0")).unwrap(),
            monomial_to_shifted_monomial(q("1"), q("0")).unwrap(),
        ] {
            for n in 0..6 {
                let mut expected = vec!["0".to_string(); n + 1];
                expected[0] = "1".into();
                assert_eq!(row(&cf, n), expected);
            }
        }
    }

    #[test]
    fn rejects_zero_scale() {
        assert!(matches!(
            shifted_monomial_to_monomial(q("0"), q("1")),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(monomial_to_shifted_monomial(q("0"), q("1")).is_err());
    }
}
