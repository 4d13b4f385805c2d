//! Error type shared by the whole crate.

use std::fmt;

/// Everything that can go wrong while constructing numbers, calibrating
/// membership functions, or running the solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A spread parameter (`d_minus` or `d_plus`) was zero or negative.
    NonPositiveRadius { side: &'static str, value: f64 },
    /// An input value was NaN or infinite.
    NonFinite { what: &'static str },
    /// Inversion was requested for an element outside the unit group
    /// (some coordinate is zero within tolerance).
    NotAUnit,
    /// Inversion of the zero element of the crisp subfield.
    ZeroElement,
    /// The element is not a crisp embedding of a real number.
    NotCrisp,
    /// A matrix entry is not a crisp embedding of a real number.
    NotCrispEntry { row: usize, col: usize },
    /// A control point abscissa does not lie strictly inside its branch.
    OutOfBranch { abscissa: f64 },
    /// A membership ordinate was outside the open interval (0, 1).
    BadOrdinate { value: f64 },
    /// Malformed input shape (ragged matrix, bad trapezoid ordering, ...).
    BadShape { reason: String },
    /// Two operands have incompatible dimensions.
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// The coefficient matrix is singular within tolerance.
    SingularMatrix,
    /// The coefficient matrix is not in reduced form with an identity block.
    NotRref,
    /// A row or column index is out of range (or two indices that must
    /// differ coincide).
    BadIndex { index: usize, bound: usize },
    /// Failed to parse a textual representation.
    Parse { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveRadius { side, value } => {
                write!(f, "spread {side} must be positive, got {value}")
            }
            Error::NonFinite { what } => write!(f, "{what} must be finite"),
            Error::NotAUnit => write!(
                f,
                "element is not a unit: some coordinate is zero within tolerance"
            ),
            Error::ZeroElement => write!(f, "the zero element has no inverse"),
            Error::NotCrisp => write!(f, "element is not a crisp (real-valued) embedding"),
            Error::NotCrispEntry { row, col } => {
                write!(f, "entry ({row}, {col}) is not a crisp (real-valued) embedding")
            }
            Error::OutOfBranch { abscissa } => {
                write!(f, "control point abscissa {abscissa} lies outside the open branch")
            }
            Error::BadOrdinate { value } => {
                write!(f, "ordinate {value} must lie strictly between 0 and 1")
            }
            Error::BadShape { reason } => write!(f, "{reason}"),
            Error::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected {expected}, found {found}"),
            Error::SingularMatrix => write!(f, "coefficient matrix is singular within tolerance"),
            Error::NotRref => write!(
                f,
                "matrix is not row-reduced to an identity block; use the coordinate solver"
            ),
            Error::BadIndex { index, bound } => {
                write!(f, "index {index} out of range for {bound} rows")
            }
            Error::Parse { message } => write!(f, "parse error: {message}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
