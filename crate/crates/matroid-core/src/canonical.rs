//! Canonical forms: a byte encoding that is equal for two matroids exactly
//! when they are isomorphic.
//!
//! The encoding of a labeled matroid on positions 0..n is the sorted list of
//! its independence bitmasks; the canonical form is the lexicographically
//! least encoding over all ways of assigning the original elements to
//! positions. The search assigns positions one at a time. After k positions
//! are fixed, the masks that fit entirely inside them are precisely the
//! encoding entries below 2^k, so they form an exact leading segment of every
//! completed encoding; only candidates minimizing that segment can reach the
//! global minimum, and candidates related by a transposition that fixes the
//! independence family are interchangeable. Highly symmetric matroids (free
//! matroids, loop bouquets, their sums) collapse to a single branch per
//! level.

use crate::matroid::Matroid;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Matroid {
    pub fn canonical_form(&self) -> CanonicalKey {
        canonical_form(self)
    }
}

pub fn canonical_form(m: &Matroid) -> CanonicalKey {
    let n = m.element_count();
    if n == 0 {
        return encode(0, &[0]);
    }
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    explore(m, &mut perm, &mut best);
    encode(n, &best.expect("at least one assignment exists"))
}

fn explore(m: &Matroid, perm: &mut Vec<usize>, best: &mut Option<Vec<u32>>) {
    let n = m.element_count();
    if perm.len() == n {
        let encoding = relabeled_within(m, perm, u32::MAX);
        if best.as_ref().map_or(true, |b| encoding < *b) {
            *best = Some(encoding);
        }
        return;
    }
    let assigned: u32 = perm.iter().fold(0, |acc, &p| acc | (1 << p));
    let mut candidates: Vec<(Vec<u32>, usize)> = (0..n)
        .filter(|p| assigned & (1 << p) == 0)
        .map(|p| {
            perm.push(p);
            let prefix = relabeled_within(m, perm, assigned | (1 << p));
            perm.pop();
            (prefix, p)
        })
        .collect();
    candidates.sort_by(|a, b| cmp_prefix(&a.0, &b.0).then(a.1.cmp(&b.1)));
    let minimal = candidates[0].0.clone();
    let mut representatives: Vec<usize> = Vec::new();
    for (prefix, p) in candidates {
        if prefix != minimal {
            break;
        }
        if representatives
            .iter()
            .any(|&q| transposition_fixes_family(m, p, q))
        {
            continue;
        }
        representatives.push(p);
    }
    for p in representatives {
        perm.push(p);
        explore(m, perm, best);
        perm.pop();
    }
}

/// Relabeled masks of the independent sets contained in `within`, sorted.
/// `perm[k]` is the original position assigned to new position k.
fn relabeled_within(m: &Matroid, perm: &[usize], within: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for &mask in m.masks() {
        if mask & !within != 0 {
            continue;
        }
        let mut relabeled = 0u32;
        for (k, &p) in perm.iter().enumerate() {
            if mask & (1 << p) != 0 {
                relabeled |= 1 << k;
            }
        }
        out.push(relabeled);
    }
    out.sort_unstable();
    out
}

/// Compares candidate leading segments. Where one segment ends while the
/// other continues, the longer one is smaller: the shorter branch's next
/// encoding entry necessarily lies in a higher mask range.
fn cmp_prefix(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    b.len().cmp(&a.len())
}

/// True when swapping two ground positions maps the independence family to
/// itself, i.e. the transposition is an automorphism.
fn transposition_fixes_family(m: &Matroid, p: usize, q: usize) -> bool {
    let bits = (1u32 << p) | (1u32 << q);
    m.masks().iter().all(|&mask| {
        let swapped = if (mask & (1 << p) != 0) == (mask & (1 << q) != 0) {
            mask
        } else {
            mask ^ bits
        };
        m.contains_mask(swapped)
    })
}

fn encode(n: usize, masks: &[u32]) -> CanonicalKey {
    let width = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + masks.len() * width);
    bytes.push(n as u8);
    for &mask in masks {
        for i in 0..width {
            bytes.push((mask >> (8 * i)) as u8);
        }
    }
    CanonicalKey(bytes)
}
