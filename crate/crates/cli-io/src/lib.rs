//! File formats and renderings behind the `matk` binary: JSON matroid
//! documents, corpus generation, and DOT export of deletion-contraction
//! trees.

pub mod corpus;
pub mod document;
pub mod dot;
