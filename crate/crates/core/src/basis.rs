//! Polynomial basis descriptors.
//!
//! A [`BasisSpec`] names one of fifteen classical orthogonal families, the
//! monomials, or the affinely shifted monomials `{(cx+d)^n}`, together with
//! its rational parameters. The textual token form is `NAME[:p1[,p2]]`, for
//! example `jacobi:2,7`, `gegenbauer:3/2`, `Pstar` or `shiftmono:1/3,-2/3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasisSpec {
    Monomial,
    /// `{1, cx+d, (cx+d)^2, ...}`
    ShiftedMonomial {
        c: Rational,
        d: Rational,
    },
    Jacobi {
        alpha: Rational,
        beta: Rational,
    },
    Gegenbauer {
        lambda: Rational,
    },
    ChebyshevT,
    ChebyshevU,
    ChebyshevV,
    ChebyshevW,
    ShiftedT,
    ShiftedU,
    ShiftedV,
    ShiftedW,
    Legendre,
    ShiftedLegendre,
    Laguerre {
        alpha: Rational,
    },
    HermitePhys,
    HermiteProb,
}

/// How strictly [`BasisSpec::validate`] enforces the orthogonality ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Strict,
    /// Only reject parameters for which the basis is not triangular.
    AllowInvalid,
}

impl BasisSpec {
    pub fn jacobi(alpha: Rational, beta: Rational) -> Self {
        BasisSpec::Jacobi { alpha, beta }
    }

    pub fn gegenbauer(lambda: Rational) -> Self {
        BasisSpec::Gegenbauer { lambda }
    }

    pub fn laguerre(alpha: Rational) -> Self {
        BasisSpec::Laguerre { alpha }
    }

    pub fn shifted_monomial(c: Rational, d: Rational) -> Self {
        BasisSpec::ShiftedMonomial { c, d }
    }

    /// The thirteen bases that carry no parameters.
    pub fn parameter_free() -> [BasisSpec; 13] {
        use BasisSpec::*;
        [
            Monomial,
            ChebyshevT,
            ChebyshevU,
            ChebyshevV,
            ChebyshevW,
            ShiftedT,
            ShiftedU,
            ShiftedV,
            ShiftedW,
            Legendre,
            ShiftedLegendre,
            HermitePhys,
            HermiteProb,
        ]
    }

    /// Token name without parameters.
    pub fn name(&self) -> &'static str {
        use BasisSpec::*;
        match self {
            Monomial => "mono",
            ShiftedMonomial { .. } => "shiftmono",
            Jacobi { .. } => "jacobi",
            Gegenbauer { .. } => "gegenbauer",
            ChebyshevT => "T",
            ChebyshevU => "U",
            ChebyshevV => "V",
            ChebyshevW => "W",
            ShiftedT => "Tstar",
            ShiftedU => "Ustar",
            ShiftedV => "Vstar",
            ShiftedW => "Wstar",
            Legendre => "P",
            ShiftedLegendre => "Pstar",
            Laguerre { .. } => "laguerre",
            HermitePhys => "H",
            HermiteProb => "He",
        }
    }

    pub fn params(&self) -> Vec<Rational> {
        use BasisSpec::*;
        match self {
            ShiftedMonomial { c, d } => vec![c.clone(), d.clone()],
            Jacobi { alpha, beta } => vec![alpha.clone(), beta.clone()],
            Gegenbauer { lambda } => vec![lambda.clone()],
            Laguerre { alpha } => vec![alpha.clone()],
            _ => Vec::new(),
        }
    }

    /// True for bases whose n-th element only contains powers `x^j` with
    /// `j ≡ n (mod 2)`.
    pub fn has_definite_parity(&self) -> bool {
        use BasisSpec::*;
        matches!(
            self,
            Monomial | Gegenbauer { .. } | ChebyshevT | ChebyshevU | Legendre | HermitePhys | HermiteProb
        )
    }

    pub fn validate(&self, mode: Validation) -> Result<()> {
        let minus_half = Rational::new(-1, 2);
        let minus_one = Rational::integer(-1);
        let fail = |constraint: &str| {
            Err(Error::InvalidParameter {
                basis: self.to_string(),
                constraint: constraint.to_string(),
            })
        };
        match self {
            BasisSpec::ShiftedMonomial { c, .. } if c.is_zero() => fail("c != 0"),
            BasisSpec::Gegenbauer { lambda } if lambda.is_zero() => {
                fail("lambda != 0 (lambda = 0 is degenerate; use the Chebyshev T basis instead)")
            }
            _ if mode == Validation::AllowInvalid => Ok(()),
            BasisSpec::Jacobi { alpha, .. } if *alpha <= minus_one => fail("alpha > -1"),
            BasisSpec::Jacobi { beta, .. } if *beta <= minus_one => fail("beta > -1"),
            BasisSpec::Gegenbauer { lambda } if *lambda <= minus_half => fail("lambda > -1/2"),
            BasisSpec::Laguerre { alpha } if *alpha <= minus_one => fail("alpha > -1"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let params = self.params();
        if !params.is_empty() {
            let joined: Vec<String> = params.iter().map(Rational::to_string).collect();
            write!(f, ":{}", joined.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BasisSpec {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let (name, rest) = match token.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (token, None),
        };
        let params = match rest {
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.parse::<Rational>()
                        .map_err(|e| Error::Parse(format!("basis token '{token}': {e}")))
                })
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        let arity = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "basis token '{token}': '{name}' takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "mono" => BasisSpec::Monomial,
            "shiftmono" => {
                arity(2)?;
                BasisSpec::shifted_monomial(params[0].clone(), params[1].clone())
            }
            "jacobi" => {
                arity(2)?;
                BasisSpec::jacobi(params[0].clone(), params[1].clone())
            }
            "gegenbauer" => {
                arity(1)?;
                BasisSpec::gegenbauer(params[0].clone())
            }
            "laguerre" => {
                arity(1)?;
                BasisSpec::laguerre(params[0].clone())
            }
            "T" => BasisSpec::ChebyshevT,
            "U" => BasisSpec::ChebyshevU,
            "V" => BasisSpec::ChebyshevV,
            "W" => BasisSpec::ChebyshevW,
            "Tstar" => BasisSpec::ShiftedT,
            "Ustar" => BasisSpec::ShiftedU,
            "Vstar" => BasisSpec::ShiftedV,
            "Wstar" => BasisSpec::ShiftedW,
            "P" => BasisSpec::Legendre,
            "Pstar" => BasisSpec::ShiftedLegendre,
            "H" => BasisSpec::HermitePhys,
            "He" => BasisSpec::HermiteProb,
            _ => return Err(Error::Parse(format!("unknown basis token '{token}'"))),
        };
        if rest.is_some() && spec.params().is_empty() {
            return Err(Error::Parse(format!(
                "basis token '{token}': '{name}' takes no parameters"
            )));
        }
        Ok(spec)
    }
}

impl Serialize for BasisSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
