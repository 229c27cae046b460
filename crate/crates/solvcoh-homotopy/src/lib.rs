//! Sullivan models and formality: free graded-commutative differential
//! algebras, minimal model construction up to a degree cap, triple Massey
//! products with indeterminacy, formality certificates and obstructions,
//! and the nilpotent monodromy submodule of a fibration.

pub mod formality;
pub mod freecdga;
pub mod massey;
pub mod minimal;
pub mod umodule;

pub use formality::{formality_of_complex, formality_verdict, FormalityVerdict};
pub use freecdga::{CdgaElement, CdgaMonomial, FreeCdga};
pub use massey::{massey_triple, MasseyTriple};
pub use minimal::{minimal_model, MinimalModel, ModelError};
pub use umodule::nilpotent_submodule;
