//! Exact finite matroids with minors, duality, direct sums, morphisms,
//! isomorphism testing, canonical forms, and exhaustive enumeration of small
//! ground sets.
//!
//! Matroids are stored as an explicit list of independent sets over a ground
//! set of up to 32 positive integer labels, so every operation is exact and
//! every derived matroid can be re-validated against the independence
//! axioms. This representation is deliberately dense: the intended scale is
//! small ground sets where exhaustive checks are cheap, not large instances.

mod canonical;
mod element;
mod enumerate;
mod error;
mod graph;
mod iso;
mod matroid;
mod minors;
mod morphism;
mod multiset;

pub use canonical::{canonical_form, CanonicalKey};
pub use element::{eid, format_set, ElementId, ElementSet};
pub use enumerate::{
    all_labeled_matroids, all_matroids, all_matroids_up_to, connected_graphical, free_loop_sum,
    uniform,
};
pub use error::{AxiomFailure, MatroidError, MorphismError};
pub use graph::from_graph;
pub use iso::is_isomorphic;
pub use matroid::{Matroid, MAX_ELEMENTS};
pub use minors::{relabel_set, Relabeling};
pub use morphism::MatroidMorphism;
pub use multiset::MatroidMultiset;
