//! Machine checks of the covering-structure laws on a finite sample:
//! base-point families of every small size are coverings, identity
//! singletons are coverings, and composites of coverings are coverings.

use crate::coverings::{
    compose_covering_witnesses, compose_coverings, is_covering, CoveringStructureTag,
};
use crate::error::KError;
use matroid_core::{Matroid, MatroidMorphism, Relabeling};
use tutte_engine::{
    build_indecomposable_tree, Covering, DcNode, DcTree, DisplayOrder, MinIdPicker,
};

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub description: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct CoveringAxiomReport {
    pub tag: CoveringStructureTag,
    pub checks: Vec<AxiomCheck>,
    pub counterexamples: Vec<String>,
}

impl CoveringAxiomReport {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the three covering-structure laws against every matroid in the
/// sample. `depth` bounds both the base-point family sizes tried and the
/// search depth used when a verdict needs one.
pub fn verify_covering_axioms(
    tag: CoveringStructureTag,
    sample: &[Matroid],
    depth: usize,
) -> Result<CoveringAxiomReport, KError> {
    let mut report = CoveringAxiomReport {
        tag,
        checks: Vec::new(),
        counterexamples: Vec::new(),
    };

    for size in 0..=depth {
        let c = Covering::base_point_family(size);
        let ok = is_covering(tag, &c, None, depth)?.is_covering();
        record(
            &mut report,
            format!("base-point family of size {size} is a covering"),
            ok,
            || format!("base-point family of size {size} rejected"),
        );
    }

    for (index, m) in sample.iter().enumerate() {
        let identity_ok = is_covering(tag, &Covering::identity(m), None, depth)?.is_covering();
        record(
            &mut report,
            format!("sample {index}: identity singleton is a covering"),
            identity_ok,
            || format!("sample {index}: identity singleton rejected"),
        );

        let composition_ok = match tag {
            CoveringStructureTag::Iso => iso_composition_closes(m, depth)?,
            CoveringStructureTag::Tc => tc_composition_closes(m, depth)?,
        };
        record(
            &mut report,
            format!("sample {index}: composite of coverings is a covering"),
            composition_ok,
            || format!("sample {index}: composite covering rejected"),
        );
    }

    Ok(report)
}

fn record(
    report: &mut CoveringAxiomReport,
    description: String,
    passed: bool,
    counterexample: impl FnOnce() -> String,
) {
    if !passed {
        report.counterexamples.push(counterexample());
    }
    report.checks.push(AxiomCheck {
        description,
        passed,
    });
}

/// Composes two relabeling isomorphisms onto `m` and checks that the
/// composite singleton is still accepted.
fn iso_composition_closes(m: &Matroid, depth: usize) -> Result<bool, KError> {
    let shift = m
        .ground_set()
        .last()
        .map(|e| e.get())
        .unwrap_or(0);
    let once: Relabeling = m
        .ground_set()
        .iter()
        .map(|&e| (e, e.offset(shift)))
        .collect();
    let shifted = m.relabel(&once)?;
    let back: Relabeling = once.iter().map(|(&a, &b)| (b, a)).collect();
    let outer_leg = MatroidMorphism::new(shifted.clone(), m.clone(), back)?;
    let outer = Covering::of_matroid(m.clone(), vec![outer_leg])?;

    let twice: Relabeling = shifted
        .ground_set()
        .iter()
        .map(|&e| (e, e.offset(shift)))
        .collect();
    let double_shifted = shifted.relabel(&twice)?;
    let back_once: Relabeling = twice.iter().map(|(&a, &b)| (b, a)).collect();
    let inner_leg = MatroidMorphism::new(double_shifted, shifted.clone(), back_once)?;
    let inner = Covering::of_matroid(shifted, vec![inner_leg])?;

    let composed = compose_coverings(&outer, &[inner])?;
    Ok(is_covering(CoveringStructureTag::Iso, &composed, None, depth)?.is_covering())
}

/// Builds an outer covering with a tree witness (a single split when one is
/// available, the identity otherwise), covers each leg source by its full
/// tree, composes, and checks the composite against its composite witness.
fn tc_composition_closes(m: &Matroid, depth: usize) -> Result<bool, KError> {
    let outer_tree = match m.nondegenerate_elements().first() {
        Some(&e) => DcTree::new(DcNode::split(
            m.clone(),
            e,
            DcNode::leaf(m.contract(e)?),
            DcNode::leaf(m.delete(e)?),
            DisplayOrder::ContractionFirst,
        ))?,
        None => DcTree::leaf_only(m.clone()),
    };
    let outer = outer_tree.leaf_to_root();

    let inner_trees: Vec<DcTree> = outer
        .legs()
        .iter()
        .map(|leg| build_indecomposable_tree(leg.source(), &MinIdPicker))
        .collect();
    let inners: Vec<Covering> = inner_trees.iter().map(DcTree::leaf_to_root).collect();

    let composed = compose_coverings(&outer, &inners)?;
    let witness = compose_covering_witnesses(&outer_tree, &inner_trees)?;
    Ok(is_covering(CoveringStructureTag::Tc, &composed, Some(&witness), depth)?.is_covering())
}
