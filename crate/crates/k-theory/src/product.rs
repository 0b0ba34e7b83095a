//! Direct sums of coverings and of their witness trees.
//!
//! The right-hand factor is relabeled once, past the highest label of the
//! left target, and that single shift is used throughout; this keeps every
//! constructed split child literally equal to the corresponding minor, so
//! the results revalidate. Sources whose labels stray outside their
//! target's range (possible only through iso links) surface as overlap
//! errors rather than silent relabeling.

use crate::error::KError;
use matroid_core::{Matroid, MatroidMorphism, Relabeling};
use tutte_engine::{Covering, DcNode, DcNodeKind, DcTree};

fn shift_of(m: &Matroid) -> u32 {
    m.ground_set().last().map(|e| e.get()).unwrap_or(0)
}

fn shift_matroid(m: &Matroid, shift: u32) -> Result<Matroid, KError> {
    let map: Relabeling = m
        .ground_set()
        .iter()
        .map(|&e| (e, e.offset(shift)))
        .collect();
    Ok(m.relabel(&map)?)
}

/// The covering of the direct sum by all pairwise sums of legs. A family
/// over the base point on either side absorbs the other into a base-point
/// family of product multiplicity.
pub fn direct_sum_covering(c1: &Covering, c2: &Covering) -> Result<Covering, KError> {
    let (Some(m1), Some(m2)) = (c1.target(), c2.target()) else {
        return Ok(Covering::base_point_family(c1.len() * c2.len()));
    };
    let shift = shift_of(m1);
    let (target, _) = m1.direct_sum(m2);

    let mut legs = Vec::new();
    for f in c1.legs() {
        for g in c2.legs() {
            let shifted_source = shift_matroid(g.source(), shift)?;
            let source = f.source().direct_sum_disjoint(&shifted_source)?;
            let mut map = f.map().clone();
            for (&a, &b) in g.map() {
                map.insert(a.offset(shift), b.offset(shift));
            }
            legs.push(MatroidMorphism::new(source, target.clone(), map)?);
        }
    }
    Ok(Covering::of_matroid(target, legs)?)
}

/// The witness tree for the direct sum of two witnessed coverings: the left
/// tree with every node summed with the (shifted) right root, and a copy of
/// the summed right tree grafted at each left leaf.
pub fn direct_sum_witness(t1: &DcTree, t2: &DcTree) -> Result<DcTree, KError> {
    let shift = shift_of(t1.root_matroid());
    let right_root = shift_matroid(t2.root_matroid(), shift)?;
    let root = combine_left(t1.root(), t2, &right_root, shift)?;
    Ok(DcTree::new(root)?)
}

fn combine_left(
    node: &DcNode,
    t2: &DcTree,
    right_root: &Matroid,
    shift: u32,
) -> Result<DcNode, KError> {
    let summed = node.matroid().direct_sum_disjoint(right_root)?;
    Ok(match node.kind() {
        DcNodeKind::Leaf => graft_right(node.matroid(), t2.root(), shift)?,
        DcNodeKind::Split {
            element,
            contraction,
            deletion,
            order,
        } => DcNode::split(
            summed,
            *element,
            combine_left(contraction, t2, right_root, shift)?,
            combine_left(deletion, t2, right_root, shift)?,
            *order,
        ),
        DcNodeKind::IsoLink { morphism, child } => {
            let child_summed = combine_left(child, t2, right_root, shift)?;
            let mut map = morphism.map().clone();
            for &e in right_root.ground_set() {
                map.insert(e, e);
            }
            let extended =
                MatroidMorphism::new(child_summed.matroid().clone(), summed.clone(), map)?;
            DcNode::iso_link(summed, extended, child_summed)
        }
    })
}

fn graft_right(left_leaf: &Matroid, node: &DcNode, shift: u32) -> Result<DcNode, KError> {
    let shifted = shift_matroid(node.matroid(), shift)?;
    let summed = left_leaf.direct_sum_disjoint(&shifted)?;
    Ok(match node.kind() {
        DcNodeKind::Leaf => DcNode::leaf(summed),
        DcNodeKind::Split {
            element,
            contraction,
            deletion,
            order,
        } => DcNode::split(
            summed,
            element.offset(shift),
            graft_right(left_leaf, contraction, shift)?,
            graft_right(left_leaf, deletion, shift)?,
            *order,
        ),
        DcNodeKind::IsoLink { morphism, child } => {
            let child_summed = graft_right(left_leaf, child, shift)?;
            let mut map: Relabeling = left_leaf.ground_set().iter().map(|&e| (e, e)).collect();
            for (&a, &b) in morphism.map() {
                map.insert(a.offset(shift), b.offset(shift));
            }
            let extended =
                MatroidMorphism::new(child_summed.matroid().clone(), summed.clone(), map)?;
            DcNode::iso_link(summed, extended, child_summed)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::{free_loop_sum, uniform};
    use tutte_engine::{build_indecomposable_tree, MinIdPicker};

    #[test]
    fn base_point_families_absorb() {
        let c = Covering::identity(&uniform(1, 2));
        let left = direct_sum_covering(&Covering::base_point_family(3), &c).unwrap();
        assert!(left.target().is_none());
        assert_eq!(left.len(), 3);
        let right = direct_sum_covering(&c, &Covering::base_point_family(0)).unwrap();
        assert_eq!(right.len(), 0);
    }

    #[test]
    fn identity_coverings_sum_to_the_identity() {
        let a = uniform(1, 2);
        let b = free_loop_sum(1, 0);
        let summed =
            direct_sum_covering(&Covering::identity(&a), &Covering::identity(&b)).unwrap();
        let expected = Covering::identity(&a.direct_sum(&b).0);
        assert!(summed.same_covering(&expected));
    }

    #[test]
    fn witness_product_covers_the_pairwise_sum() {
        let a = uniform(1, 2);
        let b = uniform(2, 3);
        let ta = build_indecomposable_tree(&a, &MinIdPicker);
        let tb = build_indecomposable_tree(&b, &MinIdPicker);
        let witness = direct_sum_witness(&ta, &tb).unwrap();
        assert_eq!(witness.root_matroid(), &a.direct_sum(&b).0);
        assert_eq!(witness.leaf_count(), ta.leaf_count() * tb.leaf_count());

        let pairwise = direct_sum_covering(&ta.leaf_to_root(), &tb.leaf_to_root()).unwrap();
        assert!(witness.leaf_to_root().same_covering(&pairwise));
    }

    #[test]
    fn empty_left_factor_reduces_to_a_relabeling_free_graft() {
        let empty = free_loop_sum(0, 0);
        let b = uniform(1, 2);
        let te = DcTree::leaf_only(empty.clone());
        let tb = build_indecomposable_tree(&b, &MinIdPicker);
        let witness = direct_sum_witness(&te, &tb).unwrap();
        assert_eq!(witness.root_matroid(), &b);
        assert_eq!(witness.leaf_count(), tb.leaf_count());
    }

    #[test]
    fn product_profile_multiplies_coordinatewise() {
        let a = uniform(1, 2);
        let b = free_loop_sum(1, 1);
        let ta = build_indecomposable_tree(&a, &MinIdPicker);
        let tb = build_indecomposable_tree(&b, &MinIdPicker);
        let witness = direct_sum_witness(&ta, &tb).unwrap();
        let profile = witness.leaf_profile().unwrap();
        for ((ia, la), ca) in ta.leaf_profile().unwrap() {
            for ((ib, lb), cb) in tb.leaf_profile().unwrap() {
                assert_eq!(profile[&(ia + ib, la + lb)], &ca * &cb);
            }
        }
    }
}
