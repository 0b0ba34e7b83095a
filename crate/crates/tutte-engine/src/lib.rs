//! Deletion-contraction machinery over exact matroids: bivariate polynomials
//! with arbitrary-precision coefficients, validated deletion-contraction
//! trees whose leaves cover the root, and two independent Tutte polynomial
//! strategies selectable by name at runtime.

mod build;
mod covering;
mod error;
mod picker;
mod poly;
mod strategy;
mod tree;

pub use build::build_indecomposable_tree;
pub use covering::Covering;
pub use error::{RegistryError, SplitSide, TreeError};
pub use picker::{
    default_picker, ElementPicker, MaxIdPicker, MinIdPicker, PickerRegistry, SeededRandomPicker,
};
pub use poly::BivariatePolynomial;
pub use strategy::{
    tutte, tutte_oracle, CorankNullity, DeletionContraction, StrategyRegistry, TutteStrategy,
    DEFAULT_MEMO_CAP,
};
pub use tree::{DcNode, DcNodeKind, DcTree, DisplayOrder, PathStep, TreePath};
