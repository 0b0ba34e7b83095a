//! The on-disk matroid document: one JSON object in one of three
//! self-describing shapes, detected by key presence and mutually exclusive.

use matroid_core::{from_graph, ElementId, ElementSet, Matroid};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(
        "document must have exactly one shape: independent_sets, bases, or vertices with edges"
    )]
    AmbiguousShape,

    #[error("independence and bases documents require a ground_set")]
    MissingGroundSet,

    #[error("graph documents require both vertices and edges")]
    IncompleteGraph,

    #[error("element ids must be positive integers, found {found}")]
    BadElementId { found: u64 },

    #[error("edge {index} must be a triple [u, v, label]")]
    MalformedEdge { index: usize },

    #[error(transparent)]
    Matroid(#[from] matroid_core::MatroidError),
}

/// Raw mirror of the JSON object; shape keys are all optional here and
/// resolved into one of the three document kinds afterwards.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    ground_set: Option<Vec<u64>>,
    independent_sets: Option<Vec<Vec<u64>>>,
    bases: Option<Vec<Vec<u64>>>,
    vertices: Option<usize>,
    edges: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidDocument {
    Independence {
        ground_set: Vec<ElementId>,
        independent_sets: Vec<ElementSet>,
    },
    Bases {
        ground_set: Vec<ElementId>,
        bases: Vec<ElementSet>,
    },
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize, ElementId)>,
    },
}

fn element(found: u64) -> Result<ElementId, DocumentError> {
    u32::try_from(found)
        .ok()
        .and_then(ElementId::new)
        .ok_or(DocumentError::BadElementId { found })
}

fn element_list(raw: &[u64]) -> Result<Vec<ElementId>, DocumentError> {
    raw.iter().map(|&v| element(v)).collect()
}

fn element_sets(raw: &[Vec<u64>]) -> Result<Vec<ElementSet>, DocumentError> {
    raw.iter()
        .map(|set| set.iter().map(|&v| element(v)).collect())
        .collect()
}

impl MatroidDocument {
    pub fn parse(text: &str) -> Result<MatroidDocument, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let family = raw.independent_sets.is_some();
        let basis = raw.bases.is_some();
        let graph = raw.vertices.is_some() || raw.edges.is_some();
        match (family, basis, graph) {
            (true, false, false) => {
                let ground = raw.ground_set.ok_or(DocumentError::MissingGroundSet)?;
                Ok(MatroidDocument::Independence {
                    ground_set: element_list(&ground)?,
                    independent_sets: element_sets(&raw.independent_sets.unwrap())?,
                })
            }
            (false, true, false) => {
                let ground = raw.ground_set.ok_or(DocumentError::MissingGroundSet)?;
                Ok(MatroidDocument::Bases {
                    ground_set: element_list(&ground)?,
                    bases: element_sets(&raw.bases.unwrap())?,
                })
            }
            (false, false, true) => {
                let (Some(vertices), Some(raw_edges)) = (raw.vertices, raw.edges) else {
                    return Err(DocumentError::IncompleteGraph);
                };
                let mut edges = Vec::new();
                for (index, triple) in raw_edges.iter().enumerate() {
                    let [u, v, label] = triple.as_slice() else {
                        return Err(DocumentError::MalformedEdge { index });
                    };
                    let (u, v) = (
                        usize::try_from(*u).map_err(|_| DocumentError::MalformedEdge { index })?,
                        usize::try_from(*v).map_err(|_| DocumentError::MalformedEdge { index })?,
                    );
                    edges.push((u, v, element(*label)?));
                }
                Ok(MatroidDocument::Graph { vertices, edges })
            }
            _ => Err(DocumentError::AmbiguousShape),
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid, DocumentError> {
        match self {
            MatroidDocument::Independence {
                ground_set,
                independent_sets,
            } => Ok(Matroid::from_independent_sets(
                ground_set.iter().copied(),
                independent_sets.iter().cloned(),
            )?),
            MatroidDocument::Bases { ground_set, bases } => Ok(Matroid::from_bases(
                ground_set.iter().copied(),
                bases.iter().cloned(),
            )?),
            MatroidDocument::Graph { vertices, edges } => Ok(from_graph(*vertices, edges)?),
        }
    }

    /// Canonical layout: sorted ground sets, families ordered by size then
    /// lexicographically, graph edges with low vertex first and ordered by
    /// label. Parsing then serializing a normalized document is an identity.
    pub fn normalize(&self) -> MatroidDocument {
        fn sort_family(sets: &[ElementSet]) -> Vec<ElementSet> {
            let mut out: Vec<ElementSet> = sets.to_vec();
            out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
            out.dedup();
            out
        }
        match self {
            MatroidDocument::Independence {
                ground_set,
                independent_sets,
            } => {
                let mut ground = ground_set.clone();
                ground.sort_unstable();
                ground.dedup();
                MatroidDocument::Independence {
                    ground_set: ground,
                    independent_sets: sort_family(independent_sets),
                }
            }
            MatroidDocument::Bases { ground_set, bases } => {
                let mut ground = ground_set.clone();
                ground.sort_unstable();
                ground.dedup();
                MatroidDocument::Bases {
                    ground_set: ground,
                    bases: sort_family(bases),
                }
            }
            MatroidDocument::Graph { vertices, edges } => {
                let mut ordered: Vec<(usize, usize, ElementId)> = edges
                    .iter()
                    .map(|&(u, v, label)| (u.min(v), u.max(v), label))
                    .collect();
                ordered.sort_by_key(|&(_, _, label)| label);
                MatroidDocument::Graph {
                    vertices: *vertices,
                    edges: ordered,
                }
            }
        }
    }

    /// Serializes with alphabetically ordered keys, so equal documents have
    /// equal bytes.
    pub fn to_json(&self) -> String {
        fn ids(list: &[ElementId]) -> Value {
            json!(list.iter().map(|e| e.get()).collect::<Vec<u32>>())
        }
        fn sets(family: &[ElementSet]) -> Value {
            json!(family
                .iter()
                .map(|s| s.iter().map(|e| e.get()).collect::<Vec<u32>>())
                .collect::<Vec<_>>())
        }
        let value = match self {
            MatroidDocument::Independence {
                ground_set,
                independent_sets,
            } => json!({
                "ground_set": ids(ground_set),
                "independent_sets": sets(independent_sets),
            }),
            MatroidDocument::Bases { ground_set, bases } => json!({
                "ground_set": ids(ground_set),
                "bases": sets(bases),
            }),
            MatroidDocument::Graph { vertices, edges } => json!({
                "vertices": vertices,
                "edges": edges
                    .iter()
                    .map(|&(u, v, label)| json!([u, v, label.get()]))
                    .collect::<Vec<_>>(),
            }),
        };
        format!("{value:#}")
    }

    /// The compact interchange form of a computed matroid: its bases.
    pub fn from_matroid_bases(m: &Matroid) -> MatroidDocument {
        MatroidDocument::Bases {
            ground_set: m.ground_set().to_vec(),
            bases: m.bases(),
        }
        .normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::{eid, uniform};

    fn chorded_cycle_json() -> &'static str {
        r#"{"vertices": 4, "edges": [[0,3,1],[3,2,2],[2,1,3],[1,0,4],[3,1,5]]}"#
    }

    #[test]
    fn graph_documents_parse_and_build() {
        let doc = MatroidDocument::parse(chorded_cycle_json()).unwrap();
        let m = doc.to_matroid().unwrap();
        assert_eq!(m.element_count(), 5);
        assert_eq!(m.full_rank(), 3);
        assert_eq!(m.bases().len(), 8);
    }

    #[test]
    fn independence_documents_parse_and_build() {
        let text = r#"{"ground_set": [1, 2], "independent_sets": [[], [1], [2]]}"#;
        let m = MatroidDocument::parse(text).unwrap().to_matroid().unwrap();
        assert_eq!(m.full_rank(), 1);
        assert_eq!(m.bases().len(), 2);
    }

    #[test]
    fn bases_documents_parse_and_build() {
        let text = r#"{"ground_set": [1, 2, 3], "bases": [[1, 2], [1, 3], [2, 3]]}"#;
        let m = MatroidDocument::parse(text).unwrap().to_matroid().unwrap();
        assert_eq!(m, uniform(2, 3));
    }

    #[test]
    fn shape_detection_is_strict() {
        let mixed = r#"{"ground_set": [1], "bases": [[1]], "independent_sets": [[]]}"#;
        assert!(matches!(
            MatroidDocument::parse(mixed),
            Err(DocumentError::AmbiguousShape)
        ));
        let none = r#"{"ground_set": [1]}"#;
        assert!(matches!(
            MatroidDocument::parse(none),
            Err(DocumentError::AmbiguousShape)
        ));
        let unknown = r#"{"ground_set": [1], "bases": [[1]], "color": "red"}"#;
        assert!(matches!(
            MatroidDocument::parse(unknown),
            Err(DocumentError::Json(_))
        ));
        let half_graph = r#"{"vertices": 3}"#;
        assert!(matches!(
            MatroidDocument::parse(half_graph),
            Err(DocumentError::IncompleteGraph)
        ));
    }

    #[test]
    fn zero_labels_are_rejected() {
        let text = r#"{"ground_set": [0, 1], "bases": [[1]]}"#;
        assert!(matches!(
            MatroidDocument::parse(text),
            Err(DocumentError::BadElementId { found: 0 })
        ));
        let graph = r#"{"vertices": 2, "edges": [[0, 1, 0]]}"#;
        assert!(matches!(
            MatroidDocument::parse(graph),
            Err(DocumentError::BadElementId { found: 0 })
        ));
    }

    #[test]
    fn malformed_edges_are_rejected() {
        let text = r#"{"vertices": 2, "edges": [[0, 1]]}"#;
        assert!(matches!(
            MatroidDocument::parse(text),
            Err(DocumentError::MalformedEdge { index: 0 })
        ));
    }

    #[test]
    fn normalization_then_serialization_round_trips() {
        let scrambled = r#"{"ground_set": [3, 1, 2], "bases": [[3, 1], [2, 1], [2, 3]]}"#;
        let normalized = MatroidDocument::parse(scrambled).unwrap().normalize();
        let text = normalized.to_json();
        let reparsed = MatroidDocument::parse(&text).unwrap();
        assert_eq!(reparsed, normalized);
        assert_eq!(reparsed.normalize(), reparsed);
        assert_eq!(reparsed.to_json(), text);
    }

    #[test]
    fn graph_normalization_orders_edges() {
        let doc = MatroidDocument::parse(
            r#"{"vertices": 3, "edges": [[2, 0, 5], [1, 0, 2]]}"#,
        )
        .unwrap()
        .normalize();
        let MatroidDocument::Graph { edges, .. } = &doc else {
            panic!("graph shape expected")
        };
        assert_eq!(edges, &[(0, 1, eid(2)), (0, 2, eid(5))]);
    }

    #[test]
    fn computed_matroids_export_their_bases() {
        let m = uniform(1, 2);
        let doc = MatroidDocument::from_matroid_bases(&m);
        assert_eq!(doc.to_matroid().unwrap(), m);
    }

    #[test]
    fn axiom_violations_surface_from_construction() {
        let text = r#"{"ground_set": [1, 2], "independent_sets": [[], [1, 2]]}"#;
        let doc = MatroidDocument::parse(text).unwrap();
        assert!(matches!(
            doc.to_matroid(),
            Err(DocumentError::Matroid(_))
        ));
    }
}
