//! Upper-triangular change-of-basis matrices.
//!
//! Column `j` of a [`TriangularMatrix`] holds the coordinates of domain
//! basis element `j` in the range basis, so `m[i][j] = α(j, j-i)` for the
//! generating coefficient function. Storage is dense and column-major.

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{BasisSpec, Validation};
use crate::coefficient::{CoefficientFunction, Form};
use crate::compose::{compose, lift_beta_to_alpha};
use crate::error::{Error, Result};
use crate::kernel::{divide, factorial, pochhammer};
use crate::rational::Rational;
use crate::registry;

#[derive(Clone, PartialEq, Eq)]
pub struct TriangularMatrix {
    degree: usize,
    domain: BasisSpec,
    range: BasisSpec,
    entries: Vec<Rational>,
}

impl TriangularMatrix {
    /// Builds from columns; `columns[j]` must have length `degree + 1` with
    /// zeros below the diagonal.
    pub fn from_columns(domain: BasisSpec, range: BasisSpec, columns: Vec<Vec<Rational>>) -> Result<Self> {
        let size = columns.len();
        if size == 0 {
            return Err(Error::DegreeMismatch("a matrix needs at least one column".into()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (j, column) in columns.into_iter().enumerate() {
            if column.len() != size {
                return Err(Error::DegreeMismatch(format!(
                    "column {j} has {} entries, expected {size}",
                    column.len()
                )));
            }
            if let Some(i) = (j + 1..size).find(|&i| !column[i].is_zero()) {
                return Err(Error::Domain(format!("entry ({i}, {j}) lies below the diagonal")));
            }
            entries.extend(column);
        }
        Ok(TriangularMatrix {
            degree: size - 1,
            domain,
            range,
            entries,
        })
    }

    pub fn identity(basis: BasisSpec, degree: usize) -> Self {
        let size = degree + 1;
        let mut entries = vec![Rational::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Rational::one();
        }
        TriangularMatrix {
            degree,
            domain: basis.clone(),
            range: basis,
            entries,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.degree + 1
    }

    pub fn domain(&self) -> &BasisSpec {
        &self.domain
    }

    pub fn range(&self) -> &BasisSpec {
        &self.range
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[col * self.size() + row]
    }

    pub fn column(&self, col: usize) -> &[Rational] {
        let size = self.size();
        &self.entries[col * size..(col + 1) * size]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.size()).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size()).all(|j| {
            (0..self.size()).all(|i| {
                let entry = self.get(i, j);
                if i == j {
                    entry.is_one()
                } else {
                    entry.is_zero()
                }
            })
        })
    }

    /// First `(row, col)` at which the two matrices differ, ignoring tags.
    pub fn first_difference(&self, other: &TriangularMatrix) -> Option<(usize, usize)> {
        if self.degree != other.degree {
            return Some((0, 0));
        }
        (0..self.size())
            .flat_map(|j| (0..=j).map(move |i| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    /// The product `self · rhs`, i.e. `M_ts M_sv = M_tv` with
    /// `self: s → t` and `rhs: v → s`.
    pub fn mul(&self, rhs: &TriangularMatrix) -> Result<TriangularMatrix> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot multiply degree {} by degree {}",
                self.degree, rhs.degree
            )));
        }
        if self.domain != rhs.range {
            return Err(Error::BasisMismatch {
                expected: rhs.range.to_string(),
                found: self.domain.to_string(),
            });
        }
        let size = self.size();
        let columns = (0..size)
            .map(|j| {
                (0..size)
                    .map(|i| {
                        if i > j {
                            Rational::zero()
                        } else {
                            (i..=j).map(|s| self.get(i, s) * rhs.get(s, j)).sum()
                        }
                    })
                    .collect()
            })
            .collect();
        TriangularMatrix::from_columns(rhs.domain.clone(), self.range.clone(), columns)
    }

    /// Exact inverse by back-substitution; domain and range swap.
    pub fn invert(&self) -> Result<TriangularMatrix> {
        let size = self.size();
        if let Some(i) = (0..size).find(|&i| self.get(i, i).is_zero()) {
            return Err(Error::Singular(i));
        }
        let mut columns = Vec::with_capacity(size);
        for j in 0..size {
            // Solve M x = e_j from the bottom up.
            let mut x = vec![Rational::zero(); size];
            for i in (0..=j).rev() {
                let mut rhs = if i == j { Rational::one() } else { Rational::zero() };
                for (s, xs) in x.iter().enumerate().take(j + 1).skip(i + 1) {
                    rhs -= &(self.get(i, s) * xs);
                }
                x[i] = rhs / self.get(i, i);
            }
            columns.push(x);
        }
        TriangularMatrix::from_columns(self.range.clone(), self.domain.clone(), columns)
    }

    /// Matrix-vector product taking coordinates in the domain basis to
    /// coordinates in the range basis.
    pub fn apply(&self, coords: &PolyCoords) -> Result<PolyCoords> {
        if coords.basis != self.domain {
            return Err(Error::BasisMismatch {
                expected: self.domain.to_string(),
                found: coords.basis.to_string(),
            });
        }
        let len = coords.coeffs.len();
        if len == 0 || len > self.size() {
            return Err(Error::DegreeMismatch(format!(
                "vector of length {len} does not fit a degree-{} matrix",
                self.degree
            )));
        }
        let coeffs = (0..len)
            .map(|i| (i..len).map(|j| self.get(i, j) * &coords.coeffs[j]).sum())
            .collect();
        Ok(PolyCoords {
            basis: self.range.clone(),
            coeffs,
        })
    }
}

impl std::fmt::Debug for TriangularMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "TriangularMatrix({} -> {}, degree {})",
            self.domain, self.range, self.degree
        )?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(Rational::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinates of a polynomial in some basis, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyCoords {
    pub basis: BasisSpec,
    pub coeffs: Vec<Rational>,
}

impl PolyCoords {
    pub fn new(basis: BasisSpec, coeffs: Vec<Rational>) -> Self {
        PolyCoords { basis, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

/// Materializes `m[i][j] = α(j, j-i)`; `β` forms are lifted first.
pub fn build_matrix(cf: &CoefficientFunction, degree: usize) -> Result<TriangularMatrix> {
    let lifted;
    let cf = match cf.form() {
        Form::Alpha => cf,
        Form::Beta => {
            lifted = lift_beta_to_alpha(cf)?;
            &lifted
        }
    };
    let columns = (0..=degree)
        .into_par_iter()
        .map(|j| {
            let mut column = Vec::with_capacity(degree + 1);
            for i in 0..=degree {
                column.push(if i <= j { cf.eval(j, j - i)? } else { Rational::zero() });
            }
            Ok(column)
        })
        .collect::<Result<Vec<_>>>()?;
    TriangularMatrix::from_columns(cf.domain().clone(), cf.range().clone(), columns)
}

/// Lazy coefficient function for `from → to`, routed through the monomials.
pub fn connection_function(from: &BasisSpec, to: &BasisSpec) -> Result<CoefficientFunction> {
    if from == to {
        return Ok(CoefficientFunction::identity(from.clone()));
    }
    match (from, to) {
        (_, BasisSpec::Monomial) | (BasisSpec::Monomial, _) => registry::lookup(from, to),
        _ => {
            let outbound = registry::to_monomial(from)?;
            let inbound = registry::from_monomial(to)?;
            compose(&inbound, &outbound)
        }
    }
}

/// Change-of-basis matrix from `from` to `to` up to `degree`, with the
/// default parameter validity checks.
pub fn connection_matrix(from: &BasisSpec, to: &BasisSpec, degree: usize) -> Result<TriangularMatrix> {
    connection_matrix_with(from, to, degree, Validation::Strict)
}

pub fn connection_matrix_with(
    from: &BasisSpec,
    to: &BasisSpec,
    degree: usize,
    validation: Validation,
) -> Result<TriangularMatrix> {
    from.validate(validation)?;
    to.validate(validation)?;
    if from == to {
        return Ok(TriangularMatrix::identity(from.clone(), degree));
    }
    build_matrix(&connection_function(from, to)?, degree)
}

/// Jacobi `(α,β)` expressed in the monomials, in the form with
/// `(1+α+β+n)_{n-l} (-α-n)_l`.
fn jacobi_outbound(n: usize, k: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let top = alpha + beta + Rational::from(n + 1);
    let low = -(alpha + Rational::from(n));
    let sum: Rational = (0..=k)
        .map(|l| {
            Rational::pow2(l as i64 - n as i64) * pochhammer(&top, n - l) * pochhammer(&low, l)
                / (factorial(k - l) * factorial(n - k) * factorial(l))
        })
        .sum();
    Rational::sign_power(k as i64) * sum
}

/// Monomials expressed in Jacobi `(γ,δ)`, written with the explicit
/// `(γ+δ+1)_{n-k} / (γ+δ+1)` ratio, which reduces to `1` at `k = n`.
fn jacobi_inbound(n: usize, k: usize, gamma: &Rational, delta: &Rational) -> Result<Rational> {
    let m = n - k;
    let gd = gamma + delta;
    let gd1 = &gd + Rational::one();
    let gd2 = &gd + Rational::integer(2);
    let delta1 = delta + Rational::one();
    let prefactor = if m == 0 {
        Rational::one()
    } else {
        let ratio = divide(&pochhammer(&gd1, m), &gd1, "gamma + delta + 1")?;
        (&gd + Rational::from(2 * m + 1)) * ratio
    };
    let mut sum = Rational::zero();
    for l in 0..=k {
        let numer = Rational::pow2((n - l) as i64)
            * crate::kernel::choose(n, n - l)
            * Rational::sign_power(l as i64)
            * pochhammer(&delta1, n - l)
            * pochhammer(&Rational::from(k - l + 1), m);
        let denom = pochhammer(&gd2, n - l) * pochhammer(&delta1, m) * pochhammer(&(&gd2 + Rational::from(n - l)), m);
        sum += divide(&numer, &denom, "Jacobi connection denominator")?;
    }
    Ok(prefactor * sum)
}

/// Direct Jacobi-to-Jacobi connection `P^{(α,β)} → P^{(γ,δ)}`:
/// `α3(n,k) = Σ_v inbound(n-v, k-v; γ,δ) · outbound(n, v; α,β)`.
/// Swapping `(α,β)` with `(γ,δ)` gives the inverse matrix.
pub fn jacobi_connection(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    degree: usize,
) -> Result<TriangularMatrix> {
    let from = BasisSpec::jacobi(alpha.clone(), beta.clone());
    let to = BasisSpec::jacobi(gamma.clone(), delta.clone());
    from.validate(Validation::Strict)?;
    to.validate(Validation::Strict)?;
    let mut columns = Vec::with_capacity(degree + 1);
    for j in 0..=degree {
        let mut column = vec![Rational::zero(); degree + 1];
        for k in 0..=j {
            let mut entry = Rational::zero();
            for v in 0..=k {
                entry += jacobi_inbound(j - v, k - v, gamma, delta)? * jacobi_outbound(j, v, alpha, beta);
            }
            column[j - k] = entry;
        }
        columns.push(column);
    }
    TriangularMatrix::from_columns(from, to, columns)
}
