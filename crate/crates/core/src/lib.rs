//! Combinatorics on words for binary morphisms.
//!
//! * [`word`]: finite words and prefixes of infinite words.
//! * [`algebra`]: commutation and primitive roots.
//! * [`morphism`]: application, injectivity and unique decoding of binary
//!   morphisms.
//! * [`periodicity`]: fitting and normalising `y·z^ω` decompositions.
//! * [`witness`]: phase traces of a morphism against a periodic candidate,
//!   and a randomised falsification harness.
//!
//! With the default `parallel` feature the heavier loops run on rayon;
//! [`par::Exec`] selects the mode per call.

pub mod algebra;
pub mod morphism;
pub mod par;
pub mod periodicity;
pub mod witness;
pub mod word;

#[cfg(test)]
mod testutil;

pub use algebra::{commutes, common_root, primitive_root, RootDecomposition};
pub use morphism::{BinaryMorphism, DecodeError, MorphismReport};
pub use par::Exec;
pub use periodicity::{search_min_up, SearchBounds, UpDecomposition};
pub use witness::{classify_trace, extract_phases, PhaseTrace, TraceVerdict};
pub use word::{Word, WordStream};
