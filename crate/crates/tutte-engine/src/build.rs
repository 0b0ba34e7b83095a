//! Construction of full deletion-contraction trees.

use crate::picker::ElementPicker;
use crate::tree::{DcNode, DcTree, DisplayOrder};
use matroid_core::Matroid;

/// Splits repeatedly, choosing each split element with `picker`, until every
/// leaf is free of non-degenerate elements. The result always validates.
pub fn build_indecomposable_tree(matroid: &Matroid, picker: &dyn ElementPicker) -> DcTree {
    DcTree::new(build_node(matroid, picker)).expect("construction splits only at valid elements")
}

fn build_node(matroid: &Matroid, picker: &dyn ElementPicker) -> DcNode {
    let candidates = matroid.nondegenerate_elements();
    if candidates.is_empty() {
        return DcNode::leaf(matroid.clone());
    }
    let element = picker.pick(matroid, &candidates);
    let contraction = matroid.contract(element).expect("candidate is not a loop");
    let deletion = matroid.delete(element).expect("candidate is not an isthmus");
    DcNode::split(
        matroid.clone(),
        element,
        build_node(&contraction, picker),
        build_node(&deletion, picker),
        DisplayOrder::ContractionFirst,
    )
}
