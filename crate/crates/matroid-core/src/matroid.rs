//! Finite matroids given by their full independence family.
//!
//! The ground set is a strictly ascending list of element ids; the family is
//! stored as a sorted list of bitmasks over ground-set positions. Everything
//! in scope is small (ten-ish elements), so exhaustive subset work is cheap
//! and exactness beats cleverness.

use crate::element::{ElementId, ElementSet};
use crate::error::{AxiomFailure, MatroidError};

pub const MAX_ELEMENTS: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    ground: Vec<ElementId>,
    /// Sorted, deduplicated masks; bit k refers to `ground[k]`.
    indep: Vec<u32>,
}

impl Matroid {
    /// Builds a matroid from an explicitly listed independence family,
    /// checking all three independence axioms exhaustively.
    pub fn from_independent_sets<G, S>(ground: G, sets: S) -> Result<Matroid, MatroidError>
    where
        G: IntoIterator<Item = ElementId>,
        S: IntoIterator<Item = ElementSet>,
    {
        let ground = normalize_ground(ground)?;
        let mut indep = Vec::new();
        for set in sets {
            indep.push(mask_of(&ground, &set)?);
        }
        indep.sort_unstable();
        indep.dedup();
        validate_family(&ground, &indep)?;
        Ok(Matroid { ground, indep })
    }

    /// Builds a matroid whose independent sets are exactly the subsets of the
    /// given bases, then validates the axioms on the expanded family.
    pub fn from_bases<G, S>(ground: G, bases: S) -> Result<Matroid, MatroidError>
    where
        G: IntoIterator<Item = ElementId>,
        S: IntoIterator<Item = ElementSet>,
    {
        let ground = normalize_ground(ground)?;
        let mut base_masks = Vec::new();
        for basis in bases {
            base_masks.push(mask_of(&ground, &basis)?);
        }
        if base_masks.is_empty() {
            return Err(MatroidError::EmptyBasisFamily);
        }
        let mut indep = Vec::new();
        for &b in &base_masks {
            // Standard submask walk, including the empty set.
            let mut sub = b;
            loop {
                indep.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & b;
            }
        }
        indep.sort_unstable();
        indep.dedup();
        validate_family(&ground, &indep)?;
        Ok(Matroid { ground, indep })
    }

    /// Construction path for operations whose output is a matroid by theorem
    /// (minors, duals, sums, graphic families). Masks may arrive unsorted.
    pub(crate) fn from_parts_unchecked(ground: Vec<ElementId>, mut indep: Vec<u32>) -> Matroid {
        indep.sort_unstable();
        indep.dedup();
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indep.contains(&0));
        Matroid { ground, indep }
    }

    pub fn ground_set(&self) -> &[ElementId] {
        &self.ground
    }

    pub fn element_count(&self) -> usize {
        self.ground.len()
    }

    pub fn contains_element(&self, e: ElementId) -> bool {
        self.position(e).is_some()
    }

    /// All independent sets, smallest first, ties broken by element order.
    pub fn independent_sets(&self) -> Vec<ElementSet> {
        let mut sets: Vec<ElementSet> = self.indep.iter().map(|&m| self.set_of(m)).collect();
        sort_family(&mut sets);
        sets
    }

    pub fn independence_size(&self) -> usize {
        self.indep.len()
    }

    pub fn is_independent(&self, set: &ElementSet) -> Result<bool, MatroidError> {
        let mask = mask_of(&self.ground, set)?;
        Ok(self.indep.binary_search(&mask).is_ok())
    }

    /// Rank of a subset: size of its largest independent subset.
    pub fn rank(&self, subset: &ElementSet) -> Result<usize, MatroidError> {
        let mask = mask_of(&self.ground, subset)?;
        Ok(self.rank_of_mask(mask))
    }

    pub fn full_rank(&self) -> usize {
        self.rank_of_mask(self.full_mask())
    }

    /// Maximal independent sets. By the augmentation axiom these all have
    /// full rank, so maximality and maximum cardinality coincide.
    pub fn bases(&self) -> Vec<ElementSet> {
        let r = self.full_rank() as u32;
        let mut out: Vec<ElementSet> = self
            .indep
            .iter()
            .filter(|&&m| m.count_ones() == r)
            .map(|&m| self.set_of(m))
            .collect();
        sort_family(&mut out);
        out
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let mask = mask as u32;
            if self.indep.binary_search(&mask).is_ok() {
                continue;
            }
            let mut minimal = true;
            let mut bits = mask;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                if self.indep.binary_search(&(mask & !bit)).is_err() {
                    minimal = false;
                    break;
                }
                bits &= !bit;
            }
            if minimal {
                out.push(self.set_of(mask));
            }
        }
        sort_family(&mut out);
        out
    }

    pub fn is_loop(&self, e: ElementId) -> Result<bool, MatroidError> {
        let p = self
            .position(e)
            .ok_or(MatroidError::ElementNotInGroundSet(e))?;
        Ok(self.indep.binary_search(&(1 << p)).is_err())
    }

    /// An isthmus belongs to every basis.
    pub fn is_isthmus(&self, e: ElementId) -> Result<bool, MatroidError> {
        let p = self
            .position(e)
            .ok_or(MatroidError::ElementNotInGroundSet(e))?;
        Ok(self.basis_intersection() & (1 << p) != 0)
    }

    pub fn is_nondegenerate(&self, e: ElementId) -> Result<bool, MatroidError> {
        Ok(!self.is_loop(e)? && !self.is_isthmus(e)?)
    }

    pub fn loops(&self) -> Vec<ElementId> {
        self.ground
            .iter()
            .copied()
            .filter(|&e| self.is_loop(e).unwrap())
            .collect()
    }

    pub fn isthmuses(&self) -> Vec<ElementId> {
        let common = self.basis_intersection();
        self.ground
            .iter()
            .enumerate()
            .filter(|(p, _)| common & (1 << p) != 0)
            .map(|(_, &e)| e)
            .collect()
    }

    pub fn nondegenerate_elements(&self) -> Vec<ElementId> {
        let common = self.basis_intersection();
        self.ground
            .iter()
            .enumerate()
            .filter(|(p, _)| {
                let bit = 1u32 << p;
                common & bit == 0 && self.indep.binary_search(&bit).is_ok()
            })
            .map(|(_, &e)| e)
            .collect()
    }

    // Internal mask plumbing, shared with the sibling modules.

    pub(crate) fn position(&self, e: ElementId) -> Option<usize> {
        self.ground.binary_search(&e).ok()
    }

    pub(crate) fn masks(&self) -> &[u32] {
        &self.indep
    }

    pub(crate) fn contains_mask(&self, mask: u32) -> bool {
        self.indep.binary_search(&mask).is_ok()
    }

    pub(crate) fn full_mask(&self) -> u32 {
        if self.ground.is_empty() {
            0
        } else {
            ((1u64 << self.ground.len()) - 1) as u32
        }
    }

    pub(crate) fn rank_of_mask(&self, mask: u32) -> usize {
        self.indep
            .iter()
            .filter(|&&m| m & !mask == 0)
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn set_of(&self, mask: u32) -> ElementSet {
        self.ground
            .iter()
            .enumerate()
            .filter(|(p, _)| mask & (1 << p) != 0)
            .map(|(_, &e)| e)
            .collect()
    }

    fn basis_intersection(&self) -> u32 {
        let r = self.full_rank() as u32;
        self.indep
            .iter()
            .filter(|&&m| m.count_ones() == r)
            .fold(self.full_mask(), |acc, &m| acc & m)
    }
}

fn normalize_ground<G>(ground: G) -> Result<Vec<ElementId>, MatroidError>
where
    G: IntoIterator<Item = ElementId>,
{
    let mut g: Vec<ElementId> = ground.into_iter().collect();
    g.sort_unstable();
    for w in g.windows(2) {
        if w[0] == w[1] {
            return Err(MatroidError::DuplicateElement(w[0]));
        }
    }
    if g.len() > MAX_ELEMENTS {
        return Err(MatroidError::GroundSetTooLarge { size: g.len() });
    }
    Ok(g)
}

fn mask_of(ground: &[ElementId], set: &ElementSet) -> Result<u32, MatroidError> {
    let mut mask = 0u32;
    for &e in set {
        let p = ground
            .binary_search(&e)
            .map_err(|_| MatroidError::ElementNotInGroundSet(e))?;
        mask |= 1 << p;
    }
    Ok(mask)
}

/// Deterministic family order used everywhere sets are listed: by size, then
/// by the sorted element sequence.
pub(crate) fn sort_family(sets: &mut [ElementSet]) {
    sets.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().cmp(b.iter()))
    });
}

fn validate_family(ground: &[ElementId], indep: &[u32]) -> Result<(), MatroidError> {
    let set_of = |mask: u32| -> ElementSet {
        ground
            .iter()
            .enumerate()
            .filter(|(p, _)| mask & (1 << p) != 0)
            .map(|(_, &e)| e)
            .collect()
    };
    // I1: the empty set belongs to the family.
    if indep.binary_search(&0).is_err() {
        return Err(MatroidError::AxiomViolation(
            AxiomFailure::EmptySetNotIndependent,
        ));
    }
    // I2: closed downward. Dropping single elements suffices by induction.
    for &m in indep {
        let mut bits = m;
        while bits != 0 {
            let bit = bits & bits.wrapping_neg();
            if indep.binary_search(&(m & !bit)).is_err() {
                return Err(MatroidError::AxiomViolation(
                    AxiomFailure::NotDownwardClosed {
                        member: set_of(m),
                        missing: set_of(m & !bit),
                    },
                ));
            }
            bits &= !bit;
        }
    }
    // I3: augmentation, checked over all ordered pairs.
    for &larger in indep {
        for &smaller in indep {
            if smaller.count_ones() >= larger.count_ones() {
                continue;
            }
            let mut candidates = larger & !smaller;
            let mut augmented = false;
            while candidates != 0 {
                let bit = candidates & candidates.wrapping_neg();
                if indep.binary_search(&(smaller | bit)).is_ok() {
                    augmented = true;
                    break;
                }
                candidates &= !bit;
            }
            if !augmented {
                return Err(MatroidError::AxiomViolation(
                    AxiomFailure::AugmentationFails {
                        larger: set_of(larger),
                        smaller: set_of(smaller),
                    },
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::eid;

    fn set(ids: &[u32]) -> ElementSet {
        ids.iter().map(|&i| eid(i)).collect()
    }

    fn family(sets: &[&[u32]]) -> Vec<ElementSet> {
        sets.iter().map(|s| set(s)).collect()
    }

    #[test]
    fn explicit_family_with_a_loop() {
        let m = Matroid::from_independent_sets(
            [eid(1), eid(2), eid(3)],
            family(&[&[], &[1], &[2], &[1, 2]]),
        )
        .unwrap();
        assert_eq!(m.full_rank(), 2);
        assert!(m.is_loop(eid(3)).unwrap());
        assert_eq!(m.bases(), family(&[&[1, 2]]));
    }

    #[test]
    fn missing_empty_set_is_i1() {
        let err = Matroid::from_independent_sets([eid(1)], family(&[&[1]])).unwrap_err();
        assert_eq!(
            err,
            MatroidError::AxiomViolation(AxiomFailure::EmptySetNotIndependent)
        );
    }

    #[test]
    fn downward_closure_violation_reports_witness() {
        let err =
            Matroid::from_independent_sets([eid(1), eid(2)], family(&[&[], &[1, 2]])).unwrap_err();
        match err {
            MatroidError::AxiomViolation(AxiomFailure::NotDownwardClosed { member, missing }) => {
                assert_eq!(member, set(&[1, 2]));
                assert!(missing == set(&[1]) || missing == set(&[2]));
            }
            other => panic!("expected I2 violation, got {other:?}"),
        }
    }

    #[test]
    fn augmentation_violation_reports_witness() {
        // {1,3} has two elements, {2} has one, but neither {1,2} nor {2,3}
        // is independent.
        let err = Matroid::from_independent_sets(
            [eid(1), eid(2), eid(3)],
            family(&[&[], &[1], &[2], &[3], &[1, 3]]),
        )
        .unwrap_err();
        match err {
            MatroidError::AxiomViolation(AxiomFailure::AugmentationFails { larger, smaller }) => {
                assert_eq!(larger, set(&[1, 3]));
                assert_eq!(smaller, set(&[2]));
            }
            other => panic!("expected I3 violation, got {other:?}"),
        }
    }

    #[test]
    fn bases_constructor_expands_downward() {
        let m = Matroid::from_bases([eid(1), eid(2)], family(&[&[1], &[2]])).unwrap();
        assert_eq!(
            m.independent_sets(),
            family(&[&[], &[1], &[2]]),
        );
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.circuits(), family(&[&[1, 2]]));
    }

    #[test]
    fn bases_constructor_rejects_unequal_bases() {
        let err =
            Matroid::from_bases([eid(1), eid(2), eid(3)], family(&[&[1], &[2, 3]])).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::AxiomViolation(AxiomFailure::AugmentationFails { .. })
        ));
    }

    #[test]
    fn bases_constructor_rejects_empty_family() {
        let err = Matroid::from_bases([eid(1)], family(&[])).unwrap_err();
        assert_eq!(err, MatroidError::EmptyBasisFamily);
    }

    #[test]
    fn empty_matroid_is_legal() {
        let m = Matroid::from_independent_sets([], family(&[&[]])).unwrap();
        assert_eq!(m.element_count(), 0);
        assert_eq!(m.full_rank(), 0);
        assert_eq!(m.bases(), family(&[&[]]));
        assert!(m.circuits().is_empty());
    }

    #[test]
    fn rank_of_subsets() {
        let m = Matroid::from_bases(
            [eid(1), eid(2), eid(3)],
            family(&[&[1, 2], &[1, 3], &[2, 3]]),
        )
        .unwrap();
        assert_eq!(m.rank(&set(&[])).unwrap(), 0);
        assert_eq!(m.rank(&set(&[1])).unwrap(), 1);
        assert_eq!(m.rank(&set(&[1, 2])).unwrap(), 2);
        assert_eq!(m.rank(&set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(
            m.rank(&set(&[4])).unwrap_err(),
            MatroidError::ElementNotInGroundSet(eid(4))
        );
    }

    #[test]
    fn degeneracy_classification() {
        // 1 is an isthmus, 4 a loop, 2 and 3 are parallel.
        let m = Matroid::from_bases(
            [eid(1), eid(2), eid(3), eid(4)],
            family(&[&[1, 2], &[1, 3]]),
        )
        .unwrap();
        assert!(m.is_isthmus(eid(1)).unwrap());
        assert!(m.is_loop(eid(4)).unwrap());
        assert!(m.is_nondegenerate(eid(2)).unwrap());
        assert_eq!(m.loops(), vec![eid(4)]);
        assert_eq!(m.isthmuses(), vec![eid(1)]);
        assert_eq!(m.nondegenerate_elements(), vec![eid(2), eid(3)]);
    }

    #[test]
    fn family_order_is_size_then_lex() {
        let m = Matroid::from_bases(
            [eid(1), eid(2), eid(3)],
            family(&[&[1, 2], &[1, 3], &[2, 3]]),
        )
        .unwrap();
        assert_eq!(
            m.independent_sets(),
            family(&[&[], &[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]])
        );
    }

    #[test]
    fn oversized_ground_set_is_rejected() {
        let ground: Vec<ElementId> = (1..=33).map(eid).collect();
        let err = Matroid::from_independent_sets(ground, family(&[&[]])).unwrap_err();
        assert_eq!(err, MatroidError::GroundSetTooLarge { size: 33 });
    }
}
