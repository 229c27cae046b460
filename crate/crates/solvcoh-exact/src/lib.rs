//! Exact arithmetic kernel: arbitrary-precision rationals, univariate and
//! multivariate polynomials, number fields with a designated embedding,
//! symbolic rational functions, dense linear algebra over any exact field,
//! and Sturm-sequence real root isolation.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.

pub mod factor;
pub mod matrix;
pub mod multipoly;
pub mod numfield;
pub mod ratfunc;
pub mod scalar;
pub mod sturm;
pub mod unipoly;

pub use matrix::{Matrix, RrefResult};
pub use multipoly::{MultiPoly, SymbolTable};
pub use numfield::{NumberField, NumberFieldElement};
pub use ratfunc::RatFunc;
pub use scalar::{Field, Rat};
pub use sturm::{Constraint, ConstraintKind, Isolation, SturmChain};
pub use unipoly::UniPoly;

/// Errors surfaced by the exact kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A square matrix was required.
    NotSquare,
    /// Division by an identically-zero denominator during elimination.
    ZeroDenominator,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// A squarefree polynomial has an irreducible factor of degree >= 3,
    /// outside the supported linear/quadratic splitting.
    UnsupportedFactor { degree: usize },
    /// Mixed elements of two distinct number fields.
    FieldMismatch,
    /// A rational-root denominator bound could not be factored within limits.
    FactorBoundExceeded,
}

impl std::fmt::Display for ExactError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactError::NotSquare => write!(f, "matrix is not square"),
            ExactError::ZeroDenominator => write!(f, "division by identically-zero denominator"),
            ExactError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            ExactError::UnsupportedFactor { degree } => {
                write!(f, "irreducible factor of degree {degree} is not supported")
            }
            ExactError::FieldMismatch => write!(f, "elements belong to different number fields"),
            ExactError::FactorBoundExceeded => {
                write!(f, "integer factorization bound exceeded while searching rational roots")
            }
        }
    }
}

impl std::error::Error for ExactError {}
