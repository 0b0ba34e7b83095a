//! Deletion-contraction trees as validated first-class values.
//!
//! A tree node carries its matroid. Internal nodes either split at a
//! non-degenerate element, with the contraction and deletion minors as
//! children stored as literal data, or link to a single child through an
//! isomorphism. Trees are immutable; `attach` returns a new tree.

use crate::covering::Covering;
use crate::error::{SplitSide, TreeError};
use matroid_core::{Matroid, MatroidMorphism};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Which child a split presents first when the tree is listed or rendered.
/// Purely presentational: both orders describe the same split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplayOrder {
    ContractionFirst,
    DeletionFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStep {
    Contraction,
    Deletion,
    IsoChild,
}

/// Address of a node: the child selectors on the walk down from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreePath(pub Vec<PathStep>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcNode {
    matroid: Matroid,
    kind: DcNodeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DcNodeKind {
    Leaf,
    Split {
        element: matroid_core::ElementId,
        contraction: Box<DcNode>,
        deletion: Box<DcNode>,
        order: DisplayOrder,
    },
    IsoLink {
        /// Isomorphism from the child's matroid onto this node's matroid.
        morphism: MatroidMorphism,
        child: Box<DcNode>,
    },
}

impl DcNode {
    pub fn leaf(matroid: Matroid) -> DcNode {
        DcNode {
            matroid,
            kind: DcNodeKind::Leaf,
        }
    }

    pub fn split(
        matroid: Matroid,
        element: matroid_core::ElementId,
        contraction: DcNode,
        deletion: DcNode,
        order: DisplayOrder,
    ) -> DcNode {
        DcNode {
            matroid,
            kind: DcNodeKind::Split {
                element,
                contraction: Box::new(contraction),
                deletion: Box::new(deletion),
                order,
            },
        }
    }

    pub fn iso_link(matroid: Matroid, morphism: MatroidMorphism, child: DcNode) -> DcNode {
        DcNode {
            matroid,
            kind: DcNodeKind::IsoLink {
                morphism,
                child: Box::new(child),
            },
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn kind(&self) -> &DcNodeKind {
        &self.kind
    }

    fn child(&self, step: PathStep) -> Option<&DcNode> {
        match (&self.kind, step) {
            (DcNodeKind::Split { contraction, .. }, PathStep::Contraction) => Some(contraction),
            (DcNodeKind::Split { deletion, .. }, PathStep::Deletion) => Some(deletion),
            (DcNodeKind::IsoLink { child, .. }, PathStep::IsoChild) => Some(child),
            _ => None,
        }
    }

    /// Children in display order, paired with the step that reaches each.
    fn children_in_order(&self) -> Vec<(PathStep, &DcNode)> {
        match &self.kind {
            DcNodeKind::Leaf => Vec::new(),
            DcNodeKind::Split {
                contraction,
                deletion,
                order,
                ..
            } => match order {
                DisplayOrder::ContractionFirst => vec![
                    (PathStep::Contraction, contraction.as_ref()),
                    (PathStep::Deletion, deletion.as_ref()),
                ],
                DisplayOrder::DeletionFirst => vec![
                    (PathStep::Deletion, deletion.as_ref()),
                    (PathStep::Contraction, contraction.as_ref()),
                ],
            },
            DcNodeKind::IsoLink { child, .. } => vec![(PathStep::IsoChild, child.as_ref())],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcTree {
    root: DcNode,
}

impl DcTree {
    /// Validates the whole structure: split elements non-degenerate, split
    /// children equal to the corresponding minors as literal data, iso-link
    /// morphisms isomorphisms from child onto parent.
    pub fn new(root: DcNode) -> Result<DcTree, TreeError> {
        validate_node(&root)?;
        Ok(DcTree { root })
    }

    pub fn leaf_only(matroid: Matroid) -> DcTree {
        DcTree {
            root: DcNode::leaf(matroid),
        }
    }

    pub fn root(&self) -> &DcNode {
        &self.root
    }

    pub fn root_matroid(&self) -> &Matroid {
        &self.root.matroid
    }

    pub fn node_at(&self, path: &TreePath) -> Option<&DcNode> {
        let mut node = &self.root;
        for &step in &path.0 {
            node = node.child(step)?;
        }
        Some(node)
    }

    /// Paths to all leaves, ordered by each split's display order.
    pub fn leaf_paths(&self) -> Vec<TreePath> {
        let mut paths = Vec::new();
        collect_leaf_paths(&self.root, &mut Vec::new(), &mut paths);
        paths
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_paths().len()
    }

    pub fn node_count(&self) -> usize {
        fn count(node: &DcNode) -> usize {
            1 + node
                .children_in_order()
                .iter()
                .map(|(_, c)| count(c))
                .sum::<usize>()
        }
        count(&self.root)
    }

    /// The composite morphism from the node at `path` up to the root:
    /// standard inclusions across splits, the stored isomorphisms across
    /// iso links.
    pub fn morphism_to_root(&self, path: &TreePath) -> Result<MatroidMorphism, TreeError> {
        morphism_from(&self.root, &path.0)
    }

    /// The covering of the root by all leaf-to-root morphisms, legs listed
    /// in `leaf_paths` order.
    pub fn leaf_to_root(&self) -> Covering {
        let legs = self
            .leaf_paths()
            .iter()
            .map(|p| {
                self.morphism_to_root(p)
                    .expect("paths from leaf_paths address nodes of a validated tree")
            })
            .collect();
        Covering::of_matroid(self.root.matroid.clone(), legs)
            .expect("leaf-to-root morphisms target the root")
    }

    /// Replace the leaf at `path` with `sub`, whose root matroid must equal
    /// the leaf's matroid as literal data. Returns the new tree.
    pub fn attach(&self, path: &TreePath, sub: &DcTree) -> Result<DcTree, TreeError> {
        let root = attach_node(&self.root, &path.0, &sub.root)?;
        DcTree::new(root)
    }

    /// Multiplicity of each (isthmus count, loop count) signature among the
    /// leaf matroids. Every leaf must be free of non-degenerate elements.
    pub fn leaf_profile(&self) -> Result<BTreeMap<(u32, u32), BigInt>, TreeError> {
        let mut profile: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for path in self.leaf_paths() {
            let leaf = self.node_at(&path).expect("leaf paths address nodes");
            let m = leaf.matroid();
            if let Some(&e) = m.nondegenerate_elements().first() {
                return Err(TreeError::LeafNotIndecomposable(e));
            }
            let key = (m.isthmuses().len() as u32, m.loops().len() as u32);
            *profile.entry(key).or_default() += BigInt::one();
        }
        Ok(profile)
    }
}

fn validate_node(node: &DcNode) -> Result<(), TreeError> {
    match &node.kind {
        DcNodeKind::Leaf => Ok(()),
        DcNodeKind::Split {
            element,
            contraction,
            deletion,
            ..
        } => {
            if !node.matroid.is_nondegenerate(*element)? {
                return Err(TreeError::SplitElementDegenerate(*element));
            }
            if contraction.matroid != node.matroid.contract(*element)? {
                return Err(TreeError::SplitChildMismatch {
                    element: *element,
                    side: SplitSide::Contraction,
                });
            }
            if deletion.matroid != node.matroid.delete(*element)? {
                return Err(TreeError::SplitChildMismatch {
                    element: *element,
                    side: SplitSide::Deletion,
                });
            }
            validate_node(contraction)?;
            validate_node(deletion)
        }
        DcNodeKind::IsoLink { morphism, child } => {
            if morphism.source() != &child.matroid
                || morphism.target() != &node.matroid
                || !morphism.is_isomorphism()
            {
                return Err(TreeError::IsoLinkNotIsomorphism);
            }
            validate_node(child)
        }
    }
}

fn collect_leaf_paths(node: &DcNode, prefix: &mut Vec<PathStep>, out: &mut Vec<TreePath>) {
    let children = node.children_in_order();
    if children.is_empty() {
        out.push(TreePath(prefix.clone()));
        return;
    }
    for (step, child) in children {
        prefix.push(step);
        collect_leaf_paths(child, prefix, out);
        prefix.pop();
    }
}

fn morphism_from(node: &DcNode, path: &[PathStep]) -> Result<MatroidMorphism, TreeError> {
    let Some((&step, rest)) = path.split_first() else {
        return Ok(MatroidMorphism::identity(&node.matroid));
    };
    let child = node.child(step).ok_or(TreeError::PathNotFound)?;
    let step_morphism = match (&node.kind, step) {
        (DcNodeKind::IsoLink { morphism, .. }, PathStep::IsoChild) => morphism.clone(),
        _ => MatroidMorphism::inclusion(&child.matroid, &node.matroid)?,
    };
    let inner = morphism_from(child, rest)?;
    Ok(step_morphism.compose(&inner)?)
}

fn attach_node(node: &DcNode, path: &[PathStep], sub: &DcNode) -> Result<DcNode, TreeError> {
    let Some((&step, rest)) = path.split_first() else {
        return match &node.kind {
            DcNodeKind::Leaf => {
                if node.matroid == sub.matroid {
                    Ok(sub.clone())
                } else {
                    Err(TreeError::LeafMatroidMismatch)
                }
            }
            _ => Err(TreeError::PathNotALeaf),
        };
    };
    if node.child(step).is_none() {
        return Err(TreeError::PathNotFound);
    }
    let mut out = node.clone();
    match (&mut out.kind, step) {
        (DcNodeKind::Split { contraction, .. }, PathStep::Contraction) => {
            **contraction = attach_node(contraction, rest, sub)?;
        }
        (DcNodeKind::Split { deletion, .. }, PathStep::Deletion) => {
            **deletion = attach_node(deletion, rest, sub)?;
        }
        (DcNodeKind::IsoLink { child, .. }, PathStep::IsoChild) => {
            **child = attach_node(child, rest, sub)?;
        }
        _ => unreachable!("child presence checked above"),
    }
    Ok(out)
}
