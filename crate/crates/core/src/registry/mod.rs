//! Closed-form coefficient functions between every basis and the monomials.
//!
//! Each supported basis has one map to the monomials and one from them. Any
//! other pair is served by composing through the monomials (see
//! [`crate::compose`]). Families of definite parity are stored in their
//! parity-compressed `β` form and lifted on demand; [`to_monomial`] and
//! [`from_monomial`] always return the lifted `α` form.

mod jacobi;
mod laguerre;
mod parity;
mod shifted;
mod shifted_monomial;
mod third_fourth;

pub use jacobi::{jacobi_to_monomial, monomial_to_jacobi};
pub use laguerre::{laguerre_to_monomial, monomial_to_laguerre};
pub use parity::{monomial_to_parity, parity_to_monomial};
pub use shifted::{monomial_to_shifted, shifted_to_monomial};
pub use shifted_monomial::{monomial_to_shifted_monomial, shifted_monomial_to_monomial};
pub use third_fourth::{
    explicit_v, explicit_v_polynomial, explicit_w, explicit_w_polynomial, monomial_to_v, monomial_to_w, v_to_monomial,
    w_to_monomial,
};

use crate::basis::BasisSpec;
use crate::coefficient::CoefficientFunction;
use crate::compose::lift_beta_to_alpha;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub(crate) fn pow2(exp: i64) -> Rational {
    Rational::pow2(exp)
}

pub(crate) fn sign(exp: i64) -> Rational {
    Rational::sign_power(exp)
}

/// Coefficient function of `basis → monomial`, in `α` form.
pub fn to_monomial(basis: &BasisSpec) -> Result<CoefficientFunction> {
    use BasisSpec::*;
    match basis {
        Monomial => Ok(CoefficientFunction::identity(Monomial)),
        ShiftedMonomial { c, d } => shifted_monomial_to_monomial(c.clone(), d.clone()),
        Jacobi { alpha, beta } => Ok(jacobi_to_monomial(alpha.clone(), beta.clone())),
        Gegenbauer { .. } | ChebyshevT | ChebyshevU | Legendre | HermitePhys | HermiteProb => {
            lift_beta_to_alpha(&parity_to_monomial(basis)?)
        }
        ChebyshevV => Ok(v_to_monomial()),
        ChebyshevW => Ok(w_to_monomial()),
        ShiftedT | ShiftedU | ShiftedV | ShiftedW | ShiftedLegendre => shifted_to_monomial(basis),
        Laguerre { alpha } => Ok(laguerre_to_monomial(alpha.clone())),
    }
}

/// Coefficient function of `monomial → basis`, in `α` form.
pub fn from_monomial(basis: &BasisSpec) -> Result<CoefficientFunction> {
    use BasisSpec::*;
    match basis {
        Monomial => Ok(CoefficientFunction::identity(Monomial)),
        ShiftedMonomial { c, d } => monomial_to_shifted_monomial(c.clone(), d.clone()),
        Jacobi { alpha, beta } => Ok(monomial_to_jacobi(alpha.clone(), beta.clone())),
        Gegenbauer { .. } | ChebyshevT | ChebyshevU | Legendre | HermitePhys | HermiteProb => {
            lift_beta_to_alpha(&monomial_to_parity(basis)?)
        }
        ChebyshevV => Ok(monomial_to_v()),
        ChebyshevW => Ok(monomial_to_w()),
        ShiftedT | ShiftedU | ShiftedV | ShiftedW | ShiftedLegendre => monomial_to_shifted(basis),
        Laguerre { alpha } => Ok(monomial_to_laguerre(alpha.clone())),
    }
}

/// Registry lookup for a pair in which one side is the monomial basis.
pub fn lookup(domain: &BasisSpec, range: &BasisSpec) -> Result<CoefficientFunction> {
    match (domain, range) {
        (_, BasisSpec::Monomial) => to_monomial(domain),
        (BasisSpec::Monomial, _) => from_monomial(range),
        _ => Err(Error::Domain(format!(
            "the registry only holds maps to or from the monomials, not {domain} -> {range}"
        ))),
    }
}
