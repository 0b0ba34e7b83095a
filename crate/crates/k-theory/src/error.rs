use matroid_core::{MatroidError, MorphismError};
use thiserror::Error;
use tutte_engine::TreeError;

#[derive(Debug, Error)]
pub enum KError {
    #[error("witness tree root does not match the covering target")]
    WitnessRootMismatch,

    #[error("outer covering has {expected} legs but {got} inner coverings were given")]
    ArityMismatch { expected: usize, got: usize },

    #[error("inner covering {index} does not target the source of the outer leg it composes with")]
    TargetMismatch { index: usize },

    #[error(transparent)]
    Tree(#[from] TreeError),

    #[error(transparent)]
    Matroid(#[from] MatroidError),

    #[error(transparent)]
    Morphism(#[from] MorphismError),
}
