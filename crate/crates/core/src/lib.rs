//! Exact connection coefficients between polynomial bases.
//!
//! The crate covers fifteen classical orthogonal families (Chebyshev of all
//! four kinds and their shifted versions, Legendre and shifted Legendre,
//! Gegenbauer, Jacobi, Laguerre and both Hermite normalizations), the
//! monomials and the shifted monomials `{(cx+d)^n}`. Every pair is connected
//! by composing closed-form coefficient functions through the monomials, and
//! all arithmetic is done over exact rationals.
//!
//! ```
//! use cobasis::{connection_matrix, BasisSpec};
//!
//! // x^4 in the shifted Legendre basis.
//! let m = connection_matrix(&BasisSpec::Monomial, &BasisSpec::ShiftedLegendre, 4).unwrap();
//! let col: Vec<String> = m.column(4).iter().map(|q| q.to_string()).collect();
//! assert_eq!(col, ["1/5", "2/5", "2/7", "1/10", "1/70"]);
//! ```

pub mod basis;
pub mod coefficient;
pub mod compose;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod kernel;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod registry;

pub use basis::{BasisSpec, Validation};
pub use coefficient::{CoefficientFunction, Form};
pub use compose::{compose, compose_mixed, compose_parity, lift_beta_to_alpha};
pub use error::{Error, Result};
pub use export::MatrixFormat;
pub use matrix::{
    build_matrix, connection_function, connection_matrix, connection_matrix_with, jacobi_connection, PolyCoords,
    TriangularMatrix,
};
pub use oracle::{oracle_connection, oracle_to_monomial, verify_pair, VerificationReport};
pub use rational::Rational;
