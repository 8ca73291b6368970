//! Error type shared by the whole crate.

use std::fmt;

use crate::scalar::ExactInt;

/// All failure modes of the library.
///
/// `NonExactDivision` deserves a note: fraction-free elimination only ever
/// divides by quantities that provably divide the dividend, so this variant
/// signals a broken invariant (or a violated hypothesis), never a rounding
/// situation. It carries both operands so the failing division can be
/// reproduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division (or fraction construction) with a zero divisor.
    DivisionByZero,
    /// An integer division left a remainder where exactness was required.
    NonExactDivision {
        dividend: ExactInt,
        divisor: ExactInt,
    },
    /// A row or column index fell outside the matrix.
    IndexOutOfBounds { index: usize, bound: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Cofactor expansion refused a matrix above its size cap.
    TooLarge { size: usize, limit: usize },
    /// Two shapes that had to agree did not.
    DimensionMismatch { detail: String },
    /// The pivot minor at elimination step `k` is zero (strict mode).
    ZeroPivot { step: usize },
    /// No usable pivot exists in column `k` at or below row `k` (row-swap mode).
    StructurallySingular { step: usize },
    /// A square system or inversion target has determinant zero.
    SingularMatrix,
    /// The closed form was asked for an entry it does not cover (`j <= k`).
    InvalidCase { detail: String },
    /// Malformed matrix text or JSON.
    Parse {
        line: usize,
        column: usize,
        detail: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NonExactDivision { dividend, divisor } => write!(
                f,
                "non-exact division: {dividend} is not divisible by {divisor}"
            ),
            Error::IndexOutOfBounds { index, bound } => {
                write!(f, "index {index} out of bounds (1..={bound})")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::TooLarge { size, limit } => {
                write!(f, "matrix size {size} exceeds cofactor-expansion cap {limit}")
            }
            Error::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            Error::ZeroPivot { step } => {
                write!(f, "zero pivot at elimination step {step} (leading principal minor of order {step} vanishes)")
            }
            Error::StructurallySingular { step } => {
                write!(f, "no nonzero pivot in column {step} at or below row {step}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::InvalidCase { detail } => write!(f, "invalid case: {detail}"),
            Error::Parse {
                line,
                column,
                detail,
            } => write!(f, "parse error at line {line}, column {column}: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn parse(line: usize, column: usize, detail: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            detail: detail.into(),
        }
    }

    pub fn dim(detail: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            detail: detail.into(),
        }
    }
}
