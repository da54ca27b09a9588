//! Crate-wide error type.
//!
//! Every fallible operation in this crate reports one of the variants
//! below.  The variants are deliberately coarse: they identify *which
//! precondition* was violated, and carry just enough data to print a
//! useful message.

use std::fmt;

/// Errors reported by polynomial construction, certification, and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials were combined but live in rings with different
    /// numbers of variables.
    VarCountMismatch { left: usize, right: usize },
    /// A point had the wrong number of coordinates for the polynomial
    /// it was evaluated at.
    PointLength { expected: usize, got: usize },
    /// A variable index was at least the number of variables.
    VarIndexOutOfRange { index: usize, n: usize },
    /// A split size `k` for a binary restriction was larger than the
    /// number of variables.
    SplitOutOfRange { k: usize, n: usize },
    /// A weight in a zero-set description exceeded the number of
    /// variables.
    WeightOutOfRange { weight: usize, n: usize },
    /// The operation requires a symmetric polynomial.
    NotSymmetric,
    /// The operation requires a homogeneous polynomial.
    NotHomogeneous,
    /// The operation requires a homogeneous polynomial of degree four.
    NotQuartic,
    /// The operation requires more variables than the polynomial has.
    TooFewVariables { n: usize, min: usize },
    /// A family parameter was out of range (e.g. an odd argument where
    /// an even one is required).
    FormParameter(String),
    /// Malformed textual input (polynomial file, form id, point, ...).
    Parse(String),
    /// An underlying file read or write failed.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarCountMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::PointLength { expected, got } => {
                write!(f, "point has {got} coordinates, expected {expected}")
            }
            Error::VarIndexOutOfRange { index, n } => {
                write!(f, "variable index {index} out of range for {n} variables")
            }
            Error::SplitOutOfRange { k, n } => {
                write!(f, "split size {k} out of range for {n} variables")
            }
            Error::WeightOutOfRange { weight, n } => {
                write!(f, "weight {weight} out of range for {n} variables")
            }
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::NotQuartic => {
                write!(f, "polynomial is not homogeneous of degree 4")
            }
            Error::TooFewVariables { n, min } => {
                write!(f, "needs at least {min} variables, got {n}")
            }
            Error::FormParameter(msg) => write!(f, "bad form parameter: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
