//! Cycle matroids of finite multigraphs. Self-loops and parallel edges are
//! allowed; a self-loop becomes a matroid loop, parallel edges a 2-circuit.

use crate::element::ElementId;
use crate::error::MatroidError;
use crate::matroid::Matroid;

/// An edge `(u, v, label)` between vertex indices `u` and `v` (0-based,
/// `u == v` for a self-loop). Labels become the ground set; they must be
/// pairwise distinct.
pub fn from_graph(
    vertex_count: usize,
    edges: &[(usize, usize, ElementId)],
) -> Result<Matroid, MatroidError> {
    for &(u, v, _) in edges {
        for &ix in &[u, v] {
            if ix >= vertex_count {
                return Err(MatroidError::VertexOutOfRange {
                    index: ix,
                    vertex_count,
                });
            }
        }
    }
    let mut sorted: Vec<(usize, usize, ElementId)> = edges.to_vec();
    sorted.sort_by_key(|&(_, _, label)| label);
    for w in sorted.windows(2) {
        if w[0].2 == w[1].2 {
            return Err(MatroidError::DuplicateEdgeLabel(w[0].2));
        }
    }
    if sorted.len() > crate::matroid::MAX_ELEMENTS {
        return Err(MatroidError::GroundSetTooLarge { size: sorted.len() });
    }
    let ground: Vec<ElementId> = sorted.iter().map(|&(_, _, label)| label).collect();
    let n = sorted.len();
    let mut indep = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if forms_forest(mask as u32, &sorted, vertex_count) {
            indep.push(mask as u32);
        }
    }
    Ok(Matroid::from_parts_unchecked(ground, indep))
}

fn forms_forest(mask: u32, edges: &[(usize, usize, ElementId)], vertex_count: usize) -> bool {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v, _) = edges[k];
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru == rv {
            // Joining a component to itself closes a cycle; self-loops land
            // here immediately.
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{eid, ElementSet};

    fn set(ids: &[u32]) -> ElementSet {
        ids.iter().map(|&i| eid(i)).collect()
    }

    #[test]
    fn triangle_is_rank_two() {
        let m = from_graph(3, &[(0, 1, eid(1)), (1, 2, eid(2)), (2, 0, eid(3))]).unwrap();
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.circuits(), vec![set(&[1, 2, 3])]);
        assert_eq!(m.bases().len(), 3);
    }

    #[test]
    fn self_loop_becomes_a_loop() {
        let m = from_graph(2, &[(0, 1, eid(1)), (1, 1, eid(2))]).unwrap();
        assert!(m.is_isthmus(eid(1)).unwrap());
        assert!(m.is_loop(eid(2)).unwrap());
    }

    #[test]
    fn parallel_edges_form_a_two_circuit() {
        let m = from_graph(2, &[(0, 1, eid(1)), (0, 1, eid(2))]).unwrap();
        assert_eq!(m.circuits(), vec![set(&[1, 2])]);
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let err = from_graph(2, &[(0, 1, eid(1)), (1, 0, eid(1))]).unwrap_err();
        assert_eq!(err, MatroidError::DuplicateEdgeLabel(eid(1)));
    }

    #[test]
    fn vertex_bounds_are_checked() {
        let err = from_graph(2, &[(0, 2, eid(1))]).unwrap_err();
        assert_eq!(
            err,
            MatroidError::VertexOutOfRange {
                index: 2,
                vertex_count: 2
            }
        );
    }

    #[test]
    fn edgeless_graph_gives_the_empty_matroid() {
        let m = from_graph(3, &[]).unwrap();
        assert_eq!(m.element_count(), 0);
        assert_eq!(m.full_rank(), 0);
    }
}
