//! Deterministic corpus generation: families of small matroids written as
//! basis documents plus a tab-separated manifest of canonical keys.

use std::collections::BTreeSet;

use matroid_core::{all_matroids_up_to, connected_graphical, free_loop_sum, uniform, Matroid};
use thiserror::Error;

use crate::document::MatroidDocument;

/// Exhaustive enumeration doubles per element; past this many elements a run
/// would not finish in reasonable time.
pub const EXHAUSTIVE_HARD_LIMIT: usize = 10;

/// Above this many elements the exhaustive family still runs but takes long
/// enough to deserve a notice.
pub const EXHAUSTIVE_WARN_LIMIT: usize = 6;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(
        "exhaustive enumeration on {requested} elements exceeds the size limit of {limit}"
    )]
    SizeLimitExceeded { requested: usize, limit: usize },

    #[error("unknown family {requested:?}; known families are {known}")]
    UnknownFamily { requested: String, known: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    Exhaustive,
    Uniform,
    GraphicalSmall,
    DirectSums,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Exhaustive,
        FamilyKind::Uniform,
        FamilyKind::GraphicalSmall,
        FamilyKind::DirectSums,
    ];

    pub fn token(self) -> &'static str {
        match self {
            FamilyKind::Exhaustive => "all-matroids-exhaustive",
            FamilyKind::Uniform => "uniform",
            FamilyKind::GraphicalSmall => "graphical-small",
            FamilyKind::DirectSums => "direct-sums-of-eps-sigma",
        }
    }

    pub fn parse(token: &str) -> Result<FamilyKind, CorpusError> {
        match token {
            "all-matroids-exhaustive" => Ok(FamilyKind::Exhaustive),
            "uniform" => Ok(FamilyKind::Uniform),
            "graphical-small" => Ok(FamilyKind::GraphicalSmall),
            "direct-sums-of-eps-sigma" | "direct-sums-of-ε-σ" => Ok(FamilyKind::DirectSums),
            other => Err(CorpusError::UnknownFamily {
                requested: other.to_string(),
                known: FamilyKind::ALL
                    .iter()
                    .map(|f| f.token())
                    .collect::<Vec<_>>()
                    .join(", "),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub max_elements: usize,
    pub families: BTreeSet<FamilyKind>,
    /// Recorded in the manifest header for reproducibility bookkeeping. The
    /// current families are all exhaustive or parameter-swept, so the seed
    /// does not change their contents; a sampled family would consume it.
    pub seed: u64,
}

pub struct GeneratedCorpus {
    /// `(file name, file contents)`, sorted by name.
    pub files: Vec<(String, String)>,
    /// One line per file: `name<TAB>canonical-key-hex`, sorted by name, plus
    /// a leading `# seed <n>` comment line.
    pub manifest: String,
    pub warnings: Vec<String>,
}

fn family_members(kind: FamilyKind, max_elements: usize) -> Vec<Matroid> {
    match kind {
        FamilyKind::Exhaustive => all_matroids_up_to(max_elements),
        FamilyKind::Uniform => {
            let mut out = Vec::new();
            for n in 0..=max_elements {
                for r in 0..=n {
                    out.push(uniform(r, n));
                }
            }
            out
        }
        FamilyKind::GraphicalSmall => connected_graphical(max_elements.min(5)),
        FamilyKind::DirectSums => {
            let mut out = Vec::new();
            for total in 0..=max_elements {
                for isthmuses in 0..=total {
                    out.push(free_loop_sum(isthmuses, total - isthmuses));
                }
            }
            out
        }
    }
}

pub fn size_warnings(spec: &CorpusSpec) -> Vec<String> {
    let mut warnings = Vec::new();
    if spec.families.contains(&FamilyKind::Exhaustive)
        && (EXHAUSTIVE_WARN_LIMIT + 1..=EXHAUSTIVE_HARD_LIMIT).contains(&spec.max_elements)
    {
        warnings.push(format!(
            "exhaustive enumeration on {} elements may take a long time",
            spec.max_elements
        ));
    }
    warnings
}

pub fn generate(spec: &CorpusSpec) -> Result<GeneratedCorpus, CorpusError> {
    if spec.families.contains(&FamilyKind::Exhaustive)
        && spec.max_elements > EXHAUSTIVE_HARD_LIMIT
    {
        return Err(CorpusError::SizeLimitExceeded {
            requested: spec.max_elements,
            limit: EXHAUSTIVE_HARD_LIMIT,
        });
    }
    let mut files = Vec::new();
    let mut manifest_lines = Vec::new();
    for &kind in &spec.families {
        for (index, m) in family_members(kind, spec.max_elements).iter().enumerate() {
            let name = format!(
                "{}-{:04}-{}elt.json",
                kind.token(),
                index,
                m.element_count()
            );
            let contents = MatroidDocument::from_matroid_bases(m).to_json();
            manifest_lines.push(format!("{name}\t{}", m.canonical_form().to_hex()));
            files.push((name, contents));
        }
    }
    files.sort();
    manifest_lines.sort();
    let mut manifest = format!("# seed {}\n", spec.seed);
    for line in &manifest_lines {
        manifest.push_str(line);
        manifest.push('\n');
    }
    Ok(GeneratedCorpus {
        files,
        manifest,
        warnings: size_warnings(spec),
    })
}
