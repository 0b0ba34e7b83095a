use matroid_core::{ElementId, MatroidError, MorphismError};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitSide {
    Contraction,
    Deletion,
}

impl fmt::Display for SplitSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitSide::Contraction => write!(f, "contraction"),
            SplitSide::Deletion => write!(f, "deletion"),
        }
    }
}

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("split element {0} is degenerate in its node's matroid")]
    SplitElementDegenerate(ElementId),
    #[error("the {side} child at split element {element} does not equal the {side} minor")]
    SplitChildMismatch { element: ElementId, side: SplitSide },
    #[error("iso-link morphism is not an isomorphism from the child matroid onto the node matroid")]
    IsoLinkNotIsomorphism,
    #[error("path does not address a node of this tree")]
    PathNotFound,
    #[error("path addresses an internal node where a leaf is required")]
    PathNotALeaf,
    #[error("subtree root matroid differs from the leaf it would replace")]
    LeafMatroidMismatch,
    #[error("leaf matroid has non-degenerate element {0}")]
    LeafNotIndecomposable(ElementId),
    #[error("covering leg {index} does not target the covering's matroid")]
    LegTargetMismatch { index: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegistryError {
    #[error("unknown name {requested:?}; available: {available}")]
    UnknownName { requested: String, available: String },
    #[error("bad parameter for {scheme:?}: {detail}")]
    BadParameter { scheme: String, detail: String },
}
