use thiserror::Error;

use crate::coefficient::Form;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A product in a denominator vanished: a degenerate parameter combination.
    #[error("pole: {0}")]
    Pole(String),

    #[error("invalid parameter for {basis}: requires {constraint}")]
    InvalidParameter { basis: String, constraint: String },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("expected a {expected:?} coefficient function, found {found:?}")]
    FormMismatch { expected: Form, found: Form },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("coefficient function evaluated outside its domain at (n={n}, k={k})")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("matrix is singular: zero diagonal entry at {0}")]
    Singular(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
