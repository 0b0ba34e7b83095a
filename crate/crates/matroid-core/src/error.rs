use crate::element::{format_set, ElementId, ElementSet};
use std::fmt;
use thiserror::Error;

/// Which independence axiom failed, with the witnessing sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// The empty set is missing from the family.
    EmptySetNotIndependent,
    /// `member` is in the family but its subset `missing` is not.
    NotDownwardClosed {
        member: ElementSet,
        missing: ElementSet,
    },
    /// `smaller` cannot be augmented from `larger` although it has fewer
    /// elements; no element of `larger - smaller` extends it independently.
    AugmentationFails {
        larger: ElementSet,
        smaller: ElementSet,
    },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::EmptySetNotIndependent => {
                write!(f, "the empty set is not in the family")
            }
            AxiomFailure::NotDownwardClosed { member, missing } => write!(
                f,
                "family contains {} but not its subset {}",
                format_set(member),
                format_set(missing)
            ),
            AxiomFailure::AugmentationFails { larger, smaller } => write!(
                f,
                "{} cannot be augmented by any element of {}",
                format_set(smaller),
                format_set(larger)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("independence axiom violated: {0}")]
    AxiomViolation(AxiomFailure),
    #[error("basis family is empty")]
    EmptyBasisFamily,
    #[error("element {0} is not in the ground set")]
    ElementNotInGroundSet(ElementId),
    #[error("cannot delete isthmus {0}")]
    IsthmusDeletion(ElementId),
    #[error("cannot contract loop {0}")]
    LoopContraction(ElementId),
    #[error("duplicate edge label {0}")]
    DuplicateEdgeLabel(ElementId),
    #[error("vertex index {index} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { index: usize, vertex_count: usize },
    #[error("element {0} listed more than once in the ground set")]
    DuplicateElement(ElementId),
    #[error("ground set has {size} elements; at most 32 are supported")]
    GroundSetTooLarge { size: usize },
    #[error("ground sets overlap at element {0}")]
    GroundSetsOverlap(ElementId),
    #[error("relabeling does not cover element {0}")]
    RelabelingIncomplete(ElementId),
    #[error("relabeling maps two elements to {0}")]
    RelabelingNotInjective(ElementId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map is not defined on element {0}")]
    NotDefinedOn(ElementId),
    #[error("map is defined on {0}, which is not in the source ground set")]
    MapsUnknownElement(ElementId),
    #[error("element {element} maps to {image}, which is outside the target ground set")]
    ImageOutsideTarget { element: ElementId, image: ElementId },
    #[error("elements {first} and {second} both map to {image}")]
    NotInjective {
        first: ElementId,
        second: ElementId,
        image: ElementId,
    },
    #[error("independent set {} maps to a dependent set", format_set(.set))]
    IndependenceNotPreserved { set: ElementSet },
    #[error("inner target and outer source differ; morphisms do not compose")]
    ComposeMismatch,
}
