//! Symplectic structures and Lefschetz properties on six dimensional Lie
//! algebras and their invariant subcomplexes, plus verification of
//! user-supplied SU(3) half-flat candidates.

pub mod halfflat;
pub mod lefschetz;
pub mod symplectic;

pub use halfflat::{half_flat_verify, HalfFlatReport, Su3Candidate};
pub use lefschetz::{hard_lefschetz, lefschetz_degree, LefschetzReport};
pub use symplectic::{symplectic_exists, SymplecticVerdict, TwoFormFamily};
