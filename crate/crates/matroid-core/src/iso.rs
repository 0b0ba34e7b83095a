//! Isomorphism testing by backtracking over ground-set bijections.
//!
//! Deliberately independent of the canonical-form machinery: the two are
//! checked against each other, so neither may be defined in terms of the
//! other.

use crate::element::ElementId;
use crate::matroid::Matroid;
use std::collections::BTreeMap;

/// Searches for an independence-preserving bijection and returns it as a
/// witness, or `None` when the matroids are not isomorphic.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Option<BTreeMap<ElementId, ElementId>> {
    let n = a.element_count();
    if n != b.element_count()
        || a.independence_size() != b.independence_size()
        || a.full_rank() != b.full_rank()
        || a.loops().len() != b.loops().len()
        || a.isthmuses().len() != b.isthmuses().len()
        || circuit_size_histogram(a) != circuit_size_histogram(b)
    {
        return None;
    }
    let deg_a = degrees(a);
    let deg_b = degrees(b);
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    // Assign source positions in order of ascending degree class size is not
    // worth the bookkeeping at this scale; plain index order with degree
    // filtering prunes well enough.
    let mut assignment: Vec<usize> = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(a, b, &deg_a, &deg_b, 0, &mut assignment, &mut used) {
        let map = a
            .ground_set()
            .iter()
            .enumerate()
            .map(|(p, &e)| (e, b.ground_set()[assignment[p]]))
            .collect();
        Some(map)
    } else {
        None
    }
}

fn search(
    a: &Matroid,
    b: &Matroid,
    deg_a: &[u32],
    deg_b: &[u32],
    level: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.element_count();
    if level == n {
        return true;
    }
    for candidate in 0..n {
        if used[candidate] || deg_b[candidate] != deg_a[level] {
            continue;
        }
        assignment[level] = candidate;
        if consistent_so_far(a, b, level, assignment) {
            used[candidate] = true;
            if search(a, b, deg_a, deg_b, level + 1, assignment, used) {
                return true;
            }
            used[candidate] = false;
        }
        assignment[level] = usize::MAX;
    }
    false
}

/// Checks every subset of the assigned source positions that involves the
/// newest one: independence must agree on both sides.
fn consistent_so_far(a: &Matroid, b: &Matroid, level: usize, assignment: &[usize]) -> bool {
    let newest = 1u32 << level;
    let assigned: u32 = if level == 31 {
        u32::MAX
    } else {
        (1u32 << (level + 1)) - 1
    };
    // Enumerate submasks of `assigned` containing `newest`.
    let rest = assigned & !newest;
    let mut sub = rest;
    loop {
        let m = sub | newest;
        let mut image = 0u32;
        let mut bits = m;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            image |= 1 << assignment[k];
        }
        if a.contains_mask(m) != b.contains_mask(image) {
            return false;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    true
}

fn degrees(m: &Matroid) -> Vec<u32> {
    let n = m.element_count();
    let mut deg = vec![0u32; n];
    for &mask in m.masks() {
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            deg[k] += 1;
        }
    }
    deg
}

fn circuit_size_histogram(m: &Matroid) -> Vec<usize> {
    let mut sizes: Vec<usize> = m.circuits().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{eid, ElementSet};

    fn set(ids: &[u32]) -> ElementSet {
        ids.iter().map(|&i| eid(i)).collect()
    }

    fn family(sets: &[&[u32]]) -> Vec<ElementSet> {
        sets.iter().map(|s| set(s)).collect()
    }

    #[test]
    fn relabeled_matroids_are_isomorphic_with_witness() {
        let m = Matroid::from_bases([eid(1), eid(2)], family(&[&[1], &[2]])).unwrap();
        let r = Matroid::from_bases([eid(5), eid(9)], family(&[&[5], &[9]])).unwrap();
        let witness = is_isomorphic(&m, &r).expect("isomorphic");
        // The witness must itself preserve independence both ways.
        let relabeled = m.relabel(&witness).unwrap();
        assert_eq!(relabeled, r);
    }

    #[test]
    fn loop_count_distinguishes() {
        // One isthmus plus one loop vs two parallel elements: same size,
        // same rank, same family size is false here, but loop count already
        // separates them.
        let a = Matroid::from_independent_sets([eid(1), eid(2)], family(&[&[], &[1]])).unwrap();
        let b = Matroid::from_bases([eid(1), eid(2)], family(&[&[1], &[2]])).unwrap();
        assert!(is_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn degree_structure_distinguishes_within_same_counts() {
        // Rank 2 on four elements: isthmus + triangle vs two independent
        // parallel pairs. Same size, rank, no loops/isthmuses on the second;
        // the first has an isthmus, so counts differ; use a sharper pair
        // instead: U_{2,4} vs parallel pairs, which agree on loops (0) and
        // isthmuses (0) and rank, but differ in family size and circuits.
        let u24 = Matroid::from_bases(
            [eid(1), eid(2), eid(3), eid(4)],
            family(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
        )
        .unwrap();
        let pairs = Matroid::from_bases(
            [eid(1), eid(2), eid(3), eid(4)],
            family(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]),
        )
        .unwrap();
        assert!(is_isomorphic(&u24, &pairs).is_none());
    }

    #[test]
    fn empty_matroids_are_isomorphic() {
        let a = Matroid::from_independent_sets([], family(&[&[]])).unwrap();
        let b = Matroid::from_independent_sets([], family(&[&[]])).unwrap();
        assert_eq!(is_isomorphic(&a, &b), Some(BTreeMap::new()));
    }
}
