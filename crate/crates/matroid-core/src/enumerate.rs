//! Exhaustive and parametric families of small matroids.
//!
//! The exhaustive enumeration goes rank by rank over candidate basis
//! families: a recursive include/exclude scan over the r-subsets filters by
//! basis exchange, survivors are rebuilt through the validating constructor,
//! and isomorphism classes are deduplicated by canonical form. Practical
//! through n = 6 (3807 labeled matroids); the candidate space is
//! 2^C(n,r) per rank, so expect n = 7 to take minutes and larger n to be
//! out of reach.

use crate::element::{eid, ElementId, ElementSet};
use crate::graph::from_graph;
use crate::matroid::Matroid;
use std::collections::BTreeMap;

/// All matroids on ground set {1..n}, labeled (no isomorphism dedup),
/// ordered by rank, then by the scan's visit order.
pub fn all_labeled_matroids(n: usize) -> Vec<Matroid> {
    let ground: Vec<ElementId> = (1..=n as u32).map(eid).collect();
    let mut out = Vec::new();
    for r in 0..=n {
        let rsets: Vec<u32> = (0u64..(1u64 << n))
            .map(|m| m as u32)
            .filter(|m| m.count_ones() as usize == r)
            .collect();
        let mut members: Vec<u32> = Vec::new();
        let mut member_bits = vec![false; 1 << n];
        scan_families(&rsets, 0, &mut members, &mut member_bits, &mut |bases| {
            let sets: Vec<ElementSet> = bases.iter().map(|&b| mask_to_set(b, &ground)).collect();
            let m = Matroid::from_bases(ground.clone(), sets)
                .expect("exchange-closed family passed full validation");
            out.push(m);
        });
    }
    out
}

fn scan_families(
    rsets: &[u32],
    k: usize,
    members: &mut Vec<u32>,
    member_bits: &mut Vec<bool>,
    emit: &mut impl FnMut(&[u32]),
) {
    if k == rsets.len() {
        if !members.is_empty() && satisfies_exchange(members, member_bits) {
            emit(members);
        }
        return;
    }
    scan_families(rsets, k + 1, members, member_bits, emit);
    members.push(rsets[k]);
    member_bits[rsets[k] as usize] = true;
    scan_families(rsets, k + 1, members, member_bits, emit);
    members.pop();
    member_bits[rsets[k] as usize] = false;
}

/// Basis exchange: for bases A, B and x in A - B there is y in B - A with
/// A - x + y again a basis.
fn satisfies_exchange(members: &[u32], member_bits: &[bool]) -> bool {
    for &a in members {
        for &b in members {
            if a == b {
                continue;
            }
            let mut leaving = a & !b;
            while leaving != 0 {
                let x = leaving & leaving.wrapping_neg();
                leaving &= !x;
                let mut entering = b & !a;
                let mut exchanged = false;
                while entering != 0 {
                    let y = entering & entering.wrapping_neg();
                    entering &= !y;
                    if member_bits[((a & !x) | y) as usize] {
                        exchanged = true;
                        break;
                    }
                }
                if !exchanged {
                    return false;
                }
            }
        }
    }
    true
}

/// One representative per isomorphism class on exactly n elements, sorted by
/// canonical key.
pub fn all_matroids(n: usize) -> Vec<Matroid> {
    let mut classes: BTreeMap<crate::canonical::CanonicalKey, Matroid> = BTreeMap::new();
    for m in all_labeled_matroids(n) {
        classes.entry(m.canonical_form()).or_insert(m);
    }
    classes.into_values().collect()
}

/// Isomorphism-class representatives on zero through `max` elements.
pub fn all_matroids_up_to(max: usize) -> Vec<Matroid> {
    (0..=max).flat_map(all_matroids).collect()
}

/// The uniform matroid U_{r,n} on {1..n}: independent sets are all subsets
/// of size at most r.
pub fn uniform(rank: usize, n: usize) -> Matroid {
    assert!(rank <= n && n <= 32);
    let ground: Vec<ElementId> = (1..=n as u32).map(eid).collect();
    let indep: Vec<u32> = (0u64..(1u64 << n))
        .map(|m| m as u32)
        .filter(|m| (m.count_ones() as usize) <= rank)
        .collect();
    Matroid::from_parts_unchecked(ground, indep)
}

/// Direct sum of `isthmuses` free elements and `loops` loops: elements
/// 1..=isthmuses are isthmuses, the rest are loops.
pub fn free_loop_sum(isthmuses: usize, loops: usize) -> Matroid {
    let n = isthmuses + loops;
    assert!(n <= 32);
    let ground: Vec<ElementId> = (1..=n as u32).map(eid).collect();
    let free_part = if isthmuses == 0 {
        0u32
    } else {
        ((1u64 << isthmuses) - 1) as u32
    };
    let mut indep = Vec::new();
    let mut sub = free_part;
    loop {
        indep.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free_part;
    }
    Matroid::from_parts_unchecked(ground, indep)
}

/// Cycle matroids of connected multigraphs with at most `max_edges` edges
/// (self-loops and parallel edges included), one representative per matroid
/// isomorphism class, sorted by canonical key.
pub fn connected_graphical(max_edges: usize) -> Vec<Matroid> {
    let mut classes: BTreeMap<crate::canonical::CanonicalKey, Matroid> = BTreeMap::new();
    for edge_count in 0..=max_edges {
        let max_vertices = edge_count + 1;
        for v in 1..=max_vertices {
            let slots: Vec<(usize, usize)> = (0..v)
                .flat_map(|i| (i..v).map(move |j| (i, j)))
                .collect();
            let mut combo = vec![0usize; edge_count];
            enumerate_multisets(&slots, &mut combo, 0, 0, &mut |combo| {
                if !connected(v, combo, &slots) {
                    return;
                }
                let edges: Vec<(usize, usize, ElementId)> = combo
                    .iter()
                    .enumerate()
                    .map(|(k, &s)| (slots[s].0, slots[s].1, eid(k as u32 + 1)))
                    .collect();
                let m = from_graph(v, &edges).expect("labels 1..e are distinct and in range");
                classes.entry(m.canonical_form()).or_insert(m);
            });
        }
    }
    classes.into_values().collect()
}

fn enumerate_multisets(
    slots: &[(usize, usize)],
    combo: &mut Vec<usize>,
    depth: usize,
    start: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == combo.len() {
        visit(combo);
        return;
    }
    for s in start..slots.len() {
        combo[depth] = s;
        enumerate_multisets(slots, combo, depth + 1, s, visit);
    }
}

fn connected(v: usize, combo: &[usize], slots: &[(usize, usize)]) -> bool {
    if v <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = v;
    for &s in combo {
        let (a, b) = slots[s];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

fn mask_to_set(mask: u32, ground: &[ElementId]) -> ElementSet {
    ground
        .iter()
        .enumerate()
        .filter(|(p, _)| mask & (1 << p) != 0)
        .map(|(_, &e)| e)
        .collect()
}
