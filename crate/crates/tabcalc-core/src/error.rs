//! Crate-wide error type and the coarse categories used by callers (such as
//! a command-line front end) to map failures onto exit statuses.

use alloc::string::String;
use core::fmt;

use crate::shapes::Cell;

/// Coarse classification of an [`Error`], stable across variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed textual input.
    Parse,
    /// Structurally valid input that violates an operation's precondition.
    Precondition,
    /// A configurable resource guard (vertex cap, degree guard) tripped.
    Resource,
}

/// Any failure produced by this crate.
///
/// Operations whose contract rules out failure return plain values; partial
/// maps (the raising and lowering operators) return `Option` because an
/// undefined result is an ordinary outcome, not a fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in textual input, with the byte offset of the offence.
    Parse { pos: usize, msg: String },
    /// A filling violates weak row increase or strict column increase.
    NotSemistandard { cell: Cell },
    /// The inner partition of a skew shape is not contained in the outer.
    NotNested,
    /// A sequence of partitions is not a saturated chain.
    NotChain { index: usize },
    /// Dominance test failed; carries the first cell where the running
    /// weight leaves the partition cone.
    NotDominant { cell: Cell },
    /// Two objects that must have equal size or shape do not.
    Mismatch { msg: String },
    /// A slide or complement was requested at an invalid cell.
    InvalidCell { cell: Cell },
    /// A partition does not fit the requested rectangle.
    RectangleTooSmall,
    /// No object satisfies the requested combination of inputs.
    Incompatible { msg: String },
    /// An operator trace does not satisfy the preconditions of the consumer.
    BadTrace { msg: String },
    /// Monomial polynomials over different numbers of indeterminates.
    VariableMismatch { left: usize, right: usize },
    /// A basis conversion was requested for a non-symmetric polynomial.
    NotSymmetric,
    /// A basis conversion was requested for an inhomogeneous polynomial.
    NotHomogeneous,
    /// A guarded computation exceeded its configured limit.
    ResourceExceeded { limit: usize, what: &'static str },
}

impl Error {
    /// The coarse category of this error.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } => ErrorCategory::Parse,
            Error::ResourceExceeded { .. } => ErrorCategory::Resource,
            _ => ErrorCategory::Precondition,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::NotSemistandard { cell } => {
                write!(f, "not semistandard at cell ({}, {})", cell.row, cell.col)
            }
            Error::NotNested => write!(f, "inner partition not contained in outer"),
            Error::NotChain { index } => {
                write!(f, "not a saturated chain at step {index}")
            }
            Error::NotDominant { cell } => write!(
                f,
                "dominance fails at cell ({}, {}): running weight leaves the partition cone",
                cell.row, cell.col
            ),
            Error::Mismatch { msg } => write!(f, "mismatch: {msg}"),
            Error::InvalidCell { cell } => {
                write!(f, "invalid cell ({}, {})", cell.row, cell.col)
            }
            Error::RectangleTooSmall => write!(f, "partition does not fit the rectangle"),
            Error::Incompatible { msg } => write!(f, "incompatible inputs: {msg}"),
            Error::BadTrace { msg } => write!(f, "bad trace: {msg}"),
            Error::VariableMismatch { left, right } => {
                write!(f, "polynomials over {left} and {right} indeterminates")
            }
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::ResourceExceeded { limit, what } => {
                write!(f, "resource cap exceeded: {what} limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
