//! Duality, deletion, contraction, direct sums, relabelings.
//!
//! Deletion of an isthmus and contraction of a loop are rejected rather than
//! being given a convention; every caller in this workspace relies on the
//! two operations strictly shrinking the non-degenerate part.

use crate::element::{ElementId, ElementSet};
use crate::error::MatroidError;
use crate::matroid::Matroid;
use std::collections::BTreeMap;

pub type Relabeling = BTreeMap<ElementId, ElementId>;

impl Matroid {
    /// Dual matroid: bases are the complements of bases.
    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        let r = self.full_rank() as u32;
        let mut indep = Vec::new();
        for &m in self.masks() {
            if m.count_ones() != r {
                continue;
            }
            let cobasis = full & !m;
            let mut sub = cobasis;
            loop {
                indep.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & cobasis;
            }
        }
        Matroid::from_parts_unchecked(self.ground_set().to_vec(), indep)
    }

    /// Restriction to `E - {e}`. Rejects isthmuses.
    pub fn delete(&self, e: ElementId) -> Result<Matroid, MatroidError> {
        let p = self
            .position(e)
            .ok_or(MatroidError::ElementNotInGroundSet(e))?;
        if self.is_isthmus(e)? {
            return Err(MatroidError::IsthmusDeletion(e));
        }
        let bit = 1u32 << p;
        let indep: Vec<u32> = self
            .masks()
            .iter()
            .filter(|&&m| m & bit == 0)
            .map(|&m| drop_bit(m, p))
            .collect();
        Ok(Matroid::from_parts_unchecked(self.ground_without(p), indep))
    }

    /// Contraction: independent sets are those whose union with `e` was
    /// independent. Rejects loops.
    pub fn contract(&self, e: ElementId) -> Result<Matroid, MatroidError> {
        let p = self
            .position(e)
            .ok_or(MatroidError::ElementNotInGroundSet(e))?;
        if self.is_loop(e)? {
            return Err(MatroidError::LoopContraction(e));
        }
        let bit = 1u32 << p;
        let indep: Vec<u32> = self
            .masks()
            .iter()
            .filter(|&&m| m & bit != 0)
            .map(|&m| drop_bit(m & !bit, p))
            .collect();
        Ok(Matroid::from_parts_unchecked(self.ground_without(p), indep))
    }

    /// Direct sum. The right summand is relabeled by adding the maximum id of
    /// the left ground set, which keeps the union disjoint; the applied
    /// relabeling is returned so callers can track elements of `other`.
    pub fn direct_sum(&self, other: &Matroid) -> (Matroid, Relabeling) {
        let shift = self.ground_set().last().map_or(0, |e| e.get());
        let relabeling: Relabeling = other
            .ground_set()
            .iter()
            .map(|&e| (e, e.offset(shift)))
            .collect();
        let shifted = other
            .relabel(&relabeling)
            .expect("shift relabeling is injective and total");
        let sum = self
            .direct_sum_disjoint(&shifted)
            .expect("shifted ground set is disjoint");
        (sum, relabeling)
    }

    /// Direct sum of matroids that already have disjoint ground sets, with no
    /// relabeling. Independent sets are unions of one from each side.
    pub fn direct_sum_disjoint(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        if let Some(&e) = self
            .ground_set()
            .iter()
            .find(|&&e| other.contains_element(e))
        {
            return Err(MatroidError::GroundSetsOverlap(e));
        }
        let mut ground: Vec<ElementId> = self.ground_set().to_vec();
        ground.extend_from_slice(other.ground_set());
        ground.sort_unstable();
        // Positions of each summand's elements inside the merged ground set.
        let left_pos: Vec<usize> = self
            .ground_set()
            .iter()
            .map(|e| ground.binary_search(e).unwrap())
            .collect();
        let right_pos: Vec<usize> = other
            .ground_set()
            .iter()
            .map(|e| ground.binary_search(e).unwrap())
            .collect();
        let mut indep = Vec::with_capacity(self.masks().len() * other.masks().len());
        for &a in self.masks() {
            let scattered_a = scatter(a, &left_pos);
            for &b in other.masks() {
                indep.push(scattered_a | scatter(b, &right_pos));
            }
        }
        Ok(Matroid::from_parts_unchecked(ground, indep))
    }

    /// Applies an injective relabeling to the whole ground set.
    pub fn relabel(&self, map: &Relabeling) -> Result<Matroid, MatroidError> {
        let mut images: Vec<ElementId> = Vec::with_capacity(self.element_count());
        for &e in self.ground_set() {
            let &img = map.get(&e).ok_or(MatroidError::RelabelingIncomplete(e))?;
            images.push(img);
        }
        let mut ground = images.clone();
        ground.sort_unstable();
        for w in ground.windows(2) {
            if w[0] == w[1] {
                return Err(MatroidError::RelabelingNotInjective(w[0]));
            }
        }
        // Old position -> new position.
        let new_pos: Vec<usize> = images
            .iter()
            .map(|img| ground.binary_search(img).unwrap())
            .collect();
        let indep: Vec<u32> = self
            .masks()
            .iter()
            .map(|&m| scatter(m, &new_pos))
            .collect();
        Ok(Matroid::from_parts_unchecked(ground, indep))
    }

    fn ground_without(&self, position: usize) -> Vec<ElementId> {
        let mut g = self.ground_set().to_vec();
        g.remove(position);
        g
    }
}

/// Removes bit `p` from the mask, shifting higher bits down.
fn drop_bit(mask: u32, p: usize) -> u32 {
    let low = mask & ((1u32 << p) - 1);
    ((mask >> (p + 1)) << p) | low
}

/// Maps bit `k` of `mask` to bit `positions[k]`.
fn scatter(mask: u32, positions: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        out |= 1 << positions[k];
        bits &= bits - 1;
    }
    out
}

/// Convenience set: which elements relabel to which under a recorded
/// relabeling, applied to a whole set.
pub fn relabel_set(set: &ElementSet, map: &Relabeling) -> ElementSet {
    set.iter().map(|e| *map.get(e).unwrap_or(e)).collect()
}
