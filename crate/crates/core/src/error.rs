//! Crate-wide error type.

use std::fmt;

/// Errors produced by construction, linear algebra, and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, got: usize },
    /// The linear system has no unique solution (determinant is zero).
    Singular,
    /// The vertex set does not span a full-dimensional simplex.
    Degenerate,
    /// Parameters outside the domain of a construction.
    InvalidParameters(String),
    /// The requested flat pattern has more leading than trailing zeros.
    NotRealizable { leading: usize, trailing: usize },
    /// A delta entry came out negative, which means the counts fed in were
    /// not the dilation counts of a lattice polytope.
    NotEhrhart { index: usize },
    /// Enumeration visited more candidates than the budget allows.
    BudgetExceeded { max_candidates: u64 },
    /// A value does not fit the fixed-width wire representation.
    Unrepresentable(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows} rows, {cols} columns")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::Singular => write!(f, "matrix is singular"),
            Error::Degenerate => write!(f, "vertices do not span a full-dimensional simplex"),
            Error::InvalidParameters(reason) => write!(f, "invalid parameters: {reason}"),
            Error::NotRealizable { leading, trailing } => {
                write!(
                    f,
                    "not realizable: k > l ({leading} leading zeros, {trailing} trailing zeros)"
                )
            }
            Error::NotEhrhart { index } => {
                write!(f, "delta entry {index} is negative; counts are not Ehrhart counts")
            }
            Error::BudgetExceeded { max_candidates } => {
                write!(f, "enumeration budget of {max_candidates} candidates exceeded")
            }
            Error::Unrepresentable(what) => write!(f, "value does not fit i64: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
