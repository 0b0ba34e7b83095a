//! Membership decisions for the two covering structures, and composition
//! of coverings with their tree witnesses.

use crate::error::KError;
use matroid_core::{Matroid, MatroidMorphism};
use tutte_engine::{Covering, DcNode, DcTree, DisplayOrder};

/// Which covering structure a query is asked against: families generated by
/// isomorphisms alone, or families realized by deletion-contraction trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringStructureTag {
    Iso,
    Tc,
}

/// Outcome of a membership query. `Inconclusive` appears only for the
/// tree-based structure when the bounded search ran out of depth; it is
/// deliberately distinct from a refutation.
#[derive(Clone, Debug)]
pub enum CoveringVerdict {
    Covering { witness: Option<DcTree> },
    NotCovering { reason: String },
    Inconclusive { depth: usize },
}

impl CoveringVerdict {
    pub fn is_covering(&self) -> bool {
        matches!(self, CoveringVerdict::Covering { .. })
    }
}

/// Decides whether `c` belongs to the covering structure named by `tag`.
///
/// A supplied witness tree must root at the covering's target. For the
/// tree-based structure the witness is checked by comparing its leaf-to-root
/// family with `c`; if they differ the query falls back to the bounded
/// search, since a wrong witness proves nothing about `c` itself. Without a
/// witness, trees of split depth at most `search_depth` are searched; a
/// verdict of `Inconclusive` is returned only when the bound was actually
/// hit, so at sufficient depth every answer is conclusive.
pub fn is_covering(
    tag: CoveringStructureTag,
    c: &Covering,
    witness: Option<&DcTree>,
    search_depth: usize,
) -> Result<CoveringVerdict, KError> {
    if let Some(w) = witness {
        match c.target() {
            None => return Err(KError::WitnessRootMismatch),
            Some(t) if w.root_matroid() != t => return Err(KError::WitnessRootMismatch),
            Some(_) => {}
        }
        if tag == CoveringStructureTag::Tc && w.leaf_to_root().same_covering(c) {
            return Ok(CoveringVerdict::Covering {
                witness: Some(w.clone()),
            });
        }
    }

    let Some(target) = c.target() else {
        // Families over the base point are coverings in both structures,
        // whatever their multiplicity.
        return Ok(CoveringVerdict::Covering { witness: None });
    };

    match tag {
        CoveringStructureTag::Iso => {
            let legs = c.legs();
            if legs.len() == 1 && legs[0].is_isomorphism() {
                Ok(CoveringVerdict::Covering { witness: None })
            } else {
                Ok(CoveringVerdict::NotCovering {
                    reason: "only singleton isomorphisms cover a matroid here".into(),
                })
            }
        }
        CoveringStructureTag::Tc => Ok(match search(target, c.legs(), search_depth) {
            SearchOutcome::True(tree) => CoveringVerdict::Covering {
                witness: Some(tree),
            },
            SearchOutcome::False(reason) => CoveringVerdict::NotCovering { reason },
            SearchOutcome::Truncated => CoveringVerdict::Inconclusive {
                depth: search_depth,
            },
        }),
    }
}

enum SearchOutcome {
    True(DcTree),
    False(String),
    Truncated,
}

/// Decides whether `legs` is the leaf-to-root family of some tree over `m`,
/// searching splits to the given depth.
///
/// Singletons are conclusive at any depth: a one-leaf tree is a chain of
/// isomorphisms, so the leg must itself be an isomorphism. A multi-leg
/// family can only arise from a root split at an element no leg's image
/// touches, with the legs distributed over the two minors; every such
/// split and distribution is tried. Iso links above a split never enlarge
/// the reachable families, because the isomorphism can be pushed into the
/// split's children, so searching bare splits is complete.
fn search(m: &Matroid, legs: &[MatroidMorphism], depth: usize) -> SearchOutcome {
    match legs.len() {
        0 => SearchOutcome::False("every tree has at least one leaf".into()),
        1 => {
            let leg = &legs[0];
            if !leg.is_isomorphism() {
                return SearchOutcome::False(
                    "a singleton covering must be an isomorphism".into(),
                );
            }
            let witness = if leg == &MatroidMorphism::identity(m) {
                DcTree::leaf_only(m.clone())
            } else {
                DcTree::new(DcNode::iso_link(
                    m.clone(),
                    leg.clone(),
                    DcNode::leaf(leg.source().clone()),
                ))
                .expect("an isomorphism onto the root is a valid link")
            };
            SearchOutcome::True(witness)
        }
        _ => search_splits(m, legs, depth),
    }
}

fn search_splits(m: &Matroid, legs: &[MatroidMorphism], depth: usize) -> SearchOutcome {
    if depth == 0 {
        return SearchOutcome::Truncated;
    }
    let mut truncated = false;
    for e in m.nondegenerate_elements() {
        if legs.iter().any(|leg| leg.map().values().any(|&v| v == e)) {
            continue;
        }
        let contraction = m.contract(e).expect("candidate is not a loop");
        let deletion = m.delete(e).expect("candidate is not an isthmus");

        // A leg avoiding e always restricts to the deletion; restriction to
        // the contraction needs its independence re-checked.
        let to_contraction: Vec<Option<MatroidMorphism>> = legs
            .iter()
            .map(|leg| {
                MatroidMorphism::new(leg.source().clone(), contraction.clone(), leg.map().clone())
                    .ok()
            })
            .collect();
        let to_deletion: Vec<MatroidMorphism> = legs
            .iter()
            .map(|leg| {
                MatroidMorphism::new(leg.source().clone(), deletion.clone(), leg.map().clone())
                    .expect("a morphism avoiding e restricts to the deletion")
            })
            .collect();

        let k = legs.len();
        for bits in 1..(1u32 << k) - 1 {
            let contraction_part: Vec<MatroidMorphism> = (0..k)
                .filter(|i| bits >> i & 1 == 1)
                .filter_map(|i| to_contraction[i].clone())
                .collect();
            if contraction_part.len() != (bits.count_ones() as usize) {
                continue;
            }
            let deletion_part: Vec<MatroidMorphism> = (0..k)
                .filter(|i| bits >> i & 1 == 0)
                .map(|i| to_deletion[i].clone())
                .collect();

            let left = search(&contraction, &contraction_part, depth - 1);
            if matches!(left, SearchOutcome::Truncated) {
                truncated = true;
            }
            let SearchOutcome::True(left_tree) = left else {
                continue;
            };
            let right = search(&deletion, &deletion_part, depth - 1);
            if matches!(right, SearchOutcome::Truncated) {
                truncated = true;
            }
            let SearchOutcome::True(right_tree) = right else {
                continue;
            };
            let tree = DcTree::new(DcNode::split(
                m.clone(),
                e,
                left_tree.root().clone(),
                right_tree.root().clone(),
                DisplayOrder::ContractionFirst,
            ))
            .expect("split at a checked non-degenerate element");
            return SearchOutcome::True(tree);
        }
    }
    if truncated {
        SearchOutcome::Truncated
    } else {
        SearchOutcome::False(
            "no split of the target realizes these legs as a leaf family".into(),
        )
    }
}

/// Composes a covering of the target with one covering of each leg source,
/// yielding the covering by all pairwise composites.
pub fn compose_coverings(outer: &Covering, inners: &[Covering]) -> Result<Covering, KError> {
    match outer.target() {
        None => {
            if inners.len() != outer.len() {
                return Err(KError::ArityMismatch {
                    expected: outer.len(),
                    got: inners.len(),
                });
            }
            let mut total = 0;
            for (index, inner) in inners.iter().enumerate() {
                if inner.target().is_some() {
                    return Err(KError::TargetMismatch { index });
                }
                total += inner.len();
            }
            Ok(Covering::base_point_family(total))
        }
        Some(target) => {
            let legs = outer.legs();
            if inners.len() != legs.len() {
                return Err(KError::ArityMismatch {
                    expected: legs.len(),
                    got: inners.len(),
                });
            }
            let mut composed = Vec::new();
            for (index, (leg, inner)) in legs.iter().zip(inners).enumerate() {
                if inner.target() != Some(leg.source()) {
                    return Err(KError::TargetMismatch { index });
                }
                for inner_leg in inner.legs() {
                    composed.push(leg.compose(inner_leg)?);
                }
            }
            Ok(Covering::of_matroid(target.clone(), composed)?)
        }
    }
}

/// The tree witnessing a composed covering: each leaf of `outer` is replaced
/// by the corresponding inner tree, in leaf order.
pub fn compose_covering_witnesses(
    outer: &DcTree,
    inners: &[DcTree],
) -> Result<DcTree, KError> {
    let paths = outer.leaf_paths();
    if inners.len() != paths.len() {
        return Err(KError::ArityMismatch {
            expected: paths.len(),
            got: inners.len(),
        });
    }
    let mut tree = outer.clone();
    for (path, inner) in paths.iter().zip(inners) {
        tree = tree.attach(path, inner)?;
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::{eid, uniform, Relabeling};
    use tutte_engine::{build_indecomposable_tree, MinIdPicker};

    fn split_covering(m: &Matroid, e: matroid_core::ElementId) -> Covering {
        Covering::of_matroid(
            m.clone(),
            vec![
                MatroidMorphism::inclusion(&m.contract(e).unwrap(), m).unwrap(),
                MatroidMorphism::inclusion(&m.delete(e).unwrap(), m).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn base_point_families_cover_in_both_structures() {
        for tag in [CoveringStructureTag::Iso, CoveringStructureTag::Tc] {
            for size in 0..3 {
                let verdict =
                    is_covering(tag, &Covering::base_point_family(size), None, 3).unwrap();
                assert!(verdict.is_covering());
            }
        }
    }

    #[test]
    fn identity_singletons_cover() {
        let m = uniform(1, 2);
        for tag in [CoveringStructureTag::Iso, CoveringStructureTag::Tc] {
            let verdict = is_covering(tag, &Covering::identity(&m), None, 3).unwrap();
            assert!(verdict.is_covering());
        }
    }

    #[test]
    fn split_coverings_are_found_with_a_witness_tree() {
        let m = uniform(1, 2);
        let c = split_covering(&m, eid(1));
        let verdict = is_covering(CoveringStructureTag::Tc, &c, None, 3).unwrap();
        let CoveringVerdict::Covering { witness: Some(tree) } = verdict else {
            panic!("expected a covering with a witness");
        };
        assert!(tree.leaf_to_root().same_covering(&c));

        let iso_verdict = is_covering(CoveringStructureTag::Iso, &c, None, 3).unwrap();
        assert!(!iso_verdict.is_covering());
    }

    #[test]
    fn one_missing_leg_is_refuted() {
        let m = uniform(1, 2);
        let lone = Covering::of_matroid(
            m.clone(),
            vec![MatroidMorphism::inclusion(&m.contract(eid(1)).unwrap(), &m).unwrap()],
        )
        .unwrap();
        let verdict = is_covering(CoveringStructureTag::Tc, &lone, None, 3).unwrap();
        assert!(matches!(verdict, CoveringVerdict::NotCovering { .. }));
    }

    #[test]
    fn doubled_identities_are_refuted_on_indecomposables() {
        let m = matroid_core::free_loop_sum(1, 1);
        let doubled = Covering::of_matroid(
            m.clone(),
            vec![MatroidMorphism::identity(&m), MatroidMorphism::identity(&m)],
        )
        .unwrap();
        let verdict = is_covering(CoveringStructureTag::Tc, &doubled, None, 3).unwrap();
        assert!(matches!(verdict, CoveringVerdict::NotCovering { .. }));
    }

    #[test]
    fn depth_zero_multi_leg_queries_are_inconclusive() {
        let m = uniform(1, 2);
        let c = split_covering(&m, eid(1));
        let verdict = is_covering(CoveringStructureTag::Tc, &c, None, 0).unwrap();
        assert!(matches!(verdict, CoveringVerdict::Inconclusive { depth: 0 }));
    }

    #[test]
    fn matching_witness_short_circuits() {
        let m = uniform(2, 3);
        let tree = build_indecomposable_tree(&m, &MinIdPicker);
        let c = tree.leaf_to_root();
        let verdict = is_covering(CoveringStructureTag::Tc, &c, Some(&tree), 0).unwrap();
        assert!(verdict.is_covering());
    }

    #[test]
    fn wrong_rooted_witness_is_an_error() {
        let m = uniform(1, 2);
        let other = DcTree::leaf_only(uniform(1, 1));
        let c = Covering::identity(&m);
        assert!(matches!(
            is_covering(CoveringStructureTag::Tc, &c, Some(&other), 3),
            Err(KError::WitnessRootMismatch)
        ));
        assert!(matches!(
            is_covering(
                CoveringStructureTag::Tc,
                &Covering::base_point_family(1),
                Some(&other),
                3
            ),
            Err(KError::WitnessRootMismatch)
        ));
    }

    #[test]
    fn relabeling_isomorphisms_cover_in_the_iso_structure() {
        let m = uniform(1, 2);
        let map: Relabeling = [(eid(1), eid(3)), (eid(2), eid(8))].into_iter().collect();
        let relabeled = m.relabel(&map).unwrap();
        let back: Relabeling = map.iter().map(|(&a, &b)| (b, a)).collect();
        let iso = MatroidMorphism::new(relabeled, m.clone(), back).unwrap();
        let c = Covering::of_matroid(m, vec![iso]).unwrap();
        assert!(is_covering(CoveringStructureTag::Iso, &c, None, 0)
            .unwrap()
            .is_covering());
        assert!(is_covering(CoveringStructureTag::Tc, &c, None, 0)
            .unwrap()
            .is_covering());
    }

    #[test]
    fn composition_composes_legs_pairwise() {
        let m = uniform(2, 3);
        let e = eid(1);
        let outer = split_covering(&m, e);
        let inners: Vec<Covering> = outer
            .legs()
            .iter()
            .map(|leg| {
                build_indecomposable_tree(leg.source(), &MinIdPicker).leaf_to_root()
            })
            .collect();
        let composed = compose_coverings(&outer, &inners).unwrap();
        assert_eq!(
            composed.len(),
            inners.iter().map(Covering::len).sum::<usize>()
        );

        let full = build_indecomposable_tree(&m, &MinIdPicker).leaf_to_root();
        assert!(composed.same_covering(&full));
    }

    #[test]
    fn composition_checks_arity_and_targets() {
        let m = uniform(1, 2);
        let outer = split_covering(&m, eid(1));
        assert!(matches!(
            compose_coverings(&outer, &[]),
            Err(KError::ArityMismatch { expected: 2, got: 0 })
        ));
        let wrong = Covering::identity(&uniform(2, 3));
        let id_c = Covering::identity(&m.contract(eid(1)).unwrap());
        assert!(matches!(
            compose_coverings(&outer, &[id_c, wrong]),
            Err(KError::TargetMismatch { index: 1 })
        ));
    }

    #[test]
    fn base_point_composition_sums_multiplicities() {
        let outer = Covering::base_point_family(2);
        let inners = [
            Covering::base_point_family(3),
            Covering::base_point_family(0),
        ];
        let composed = compose_coverings(&outer, &inners).unwrap();
        assert_eq!(composed.len(), 3);
        assert!(composed.target().is_none());

        assert!(matches!(
            compose_coverings(&outer, &[Covering::base_point_family(1)]),
            Err(KError::ArityMismatch { .. })
        ));
        assert!(matches!(
            compose_coverings(
                &outer,
                &[
                    Covering::base_point_family(1),
                    Covering::identity(&uniform(1, 1))
                ]
            ),
            Err(KError::TargetMismatch { index: 1 })
        ));
    }

    #[test]
    fn witness_composition_matches_covering_composition() {
        let m = uniform(2, 3);
        let e = eid(1);
        let contraction = m.contract(e).unwrap();
        let deletion = m.delete(e).unwrap();
        let outer_tree = DcTree::new(DcNode::split(
            m.clone(),
            e,
            DcNode::leaf(contraction.clone()),
            DcNode::leaf(deletion.clone()),
            DisplayOrder::ContractionFirst,
        ))
        .unwrap();
        let inner_trees = [
            build_indecomposable_tree(&contraction, &MinIdPicker),
            build_indecomposable_tree(&deletion, &MinIdPicker),
        ];
        let composite = compose_covering_witnesses(&outer_tree, &inner_trees).unwrap();

        let inners: Vec<Covering> = inner_trees.iter().map(DcTree::leaf_to_root).collect();
        let composed = compose_coverings(&outer_tree.leaf_to_root(), &inners).unwrap();
        assert!(composite.leaf_to_root().same_covering(&composed));
    }
}
