//! Lie algebras by structure constants, the Chevalley-Eilenberg complex and
//! its cohomology ring, almost abelian presentations (Jordan-Chevalley
//! parts, compact part, modification, Mostow test, monodromy), lattice
//! integrality criteria, and finite deck-group actions with invariant
//! cohomology.

pub mod action;
pub mod almost_abelian;
pub mod catalog;
pub mod cohomology;
pub mod exterior;
pub mod lattice;
pub mod lie;
pub mod subcomplex;

pub use action::FiniteAction;
pub use almost_abelian::AlmostAbelianPresentation;
pub use cohomology::CohomologyRing;
pub use exterior::{ExteriorBasis, ExteriorForm};
pub use lie::{LieAlgebra, ValidationReport};
pub use subcomplex::SubComplex;

/// Errors of the algebra layer.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraError {
    /// Jacobi identity fails; the offending triple is 1-based.
    JacobiFailure { triple: (usize, usize, usize) },
    /// Bracket coefficients reference indices outside 1..=dim.
    IndexOutOfRange,
    /// No abelian ideal of codimension one spanned by basis vectors.
    NotAlmostAbelian,
    /// An irreducible factor of degree >= 3 in a minimal polynomial where
    /// only linear and quadratic factors are supported.
    UnsupportedFactor { degree: usize },
    /// A monodromy entry e^{t a} with a != 0 has no exact surrogate value.
    TranscendentalEntry { eigenvalue: String },
    /// Rotation frequencies must be rational for this operation.
    IrrationalFrequency,
    /// Unknown catalog name.
    UnknownCatalogEntry { name: String },
    /// Parameter values violate the entry's constraint schema.
    ConstraintViolation { message: String },
    /// The surrogate parameter choice is not generic: its weight-sum
    /// vanishing pattern differs from the declared certificate.
    GenericityFailure { message: String },
    /// Operation needs a unimodular (resp. even-dimensional, ...) algebra.
    Precondition { message: String },
    /// Action does not commute with the differential.
    ActionNotCompatible,
    Exact(solvcoh_exact::ExactError),
}

impl From<solvcoh_exact::ExactError> for AlgebraError {
    fn from(e: solvcoh_exact::ExactError) -> Self {
        AlgebraError::Exact(e)
    }
}

impl std::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraError::JacobiFailure { triple } => {
                write!(f, "Jacobi identity fails on triple {:?}", triple)
            }
            AlgebraError::IndexOutOfRange => write!(f, "basis index out of range"),
            AlgebraError::NotAlmostAbelian => {
                write!(f, "no codimension-one abelian ideal spanned by basis vectors")
            }
            AlgebraError::UnsupportedFactor { degree } => {
                write!(f, "unsupported irreducible factor of degree {degree}")
            }
            AlgebraError::TranscendentalEntry { eigenvalue } => {
                write!(f, "transcendental monodromy entry e^(t*{eigenvalue}) without surrogate")
            }
            AlgebraError::IrrationalFrequency => write!(f, "irrational rotation frequency"),
            AlgebraError::UnknownCatalogEntry { name } => write!(f, "unknown catalog entry {name}"),
            AlgebraError::ConstraintViolation { message } => write!(f, "{message}"),
            AlgebraError::GenericityFailure { message } => write!(f, "{message}"),
            AlgebraError::Precondition { message } => write!(f, "{message}"),
            AlgebraError::ActionNotCompatible => {
                write!(f, "action does not commute with the differential")
            }
            AlgebraError::Exact(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for AlgebraError {}
