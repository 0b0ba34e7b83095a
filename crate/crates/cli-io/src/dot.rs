//! DOT rendering of deletion-contraction trees, plus a small shape parser
//! used to confirm that a rendering faithfully mirrors its tree.

use std::fmt::Write;

use tutte_engine::{DcNode, DcNodeKind, DcTree, DisplayOrder};

/// Renders the tree as a digraph. Node labels carry ground-set sizes; split
/// edges are annotated `/e` (contraction) and `\e` (deletion), iso-link
/// edges `iso`.
pub fn tree_to_dot(tree: &DcTree) -> String {
    let mut out = String::from("digraph dctree {\n");
    let mut counter = 0usize;
    render(tree.root(), &mut counter, &mut out);
    out.push_str("}\n");
    out
}

fn render(node: &DcNode, counter: &mut usize, out: &mut String) -> usize {
    let id = *counter;
    *counter += 1;
    writeln!(
        out,
        "  n{id} [label=\"|E|={}\"];",
        node.matroid().element_count()
    )
    .unwrap();
    match node.kind() {
        DcNodeKind::Leaf => {}
        DcNodeKind::Split {
            element,
            contraction,
            deletion,
            order,
        } => {
            let emit_contraction = |counter: &mut usize, out: &mut String| {
                let child = render(contraction, counter, out);
                writeln!(out, "  n{id} -> n{child} [label=\"/{element}\"];").unwrap();
            };
            let emit_deletion = |counter: &mut usize, out: &mut String| {
                let child = render(deletion, counter, out);
                // A backslash must itself be escaped inside a DOT string.
                writeln!(out, "  n{id} -> n{child} [label=\"\\\\{element}\"];").unwrap();
            };
            match order {
                DisplayOrder::ContractionFirst => {
                    emit_contraction(counter, out);
                    emit_deletion(counter, out);
                }
                DisplayOrder::DeletionFirst => {
                    emit_deletion(counter, out);
                    emit_contraction(counter, out);
                }
            }
        }
        DcNodeKind::IsoLink { child, .. } => {
            let child = render(child, counter, out);
            writeln!(out, "  n{id} -> n{child} [label=\"iso\"];").unwrap();
        }
    }
    id
}

#[derive(Debug, PartialEq, Eq)]
pub struct DotShape {
    pub nodes: usize,
    pub edges: usize,
    pub edge_labels: Vec<String>,
}

/// Counts node and edge statements in a rendering and collects edge labels
/// in file order. Only understands the subset of DOT that `tree_to_dot`
/// emits.
pub fn parse_dot_shape(text: &str) -> DotShape {
    let mut nodes = 0;
    let mut edges = 0;
    let mut edge_labels = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.contains("->") {
            edges += 1;
            if let Some(label) = label_of(line) {
                edge_labels.push(label.replace("\\\\", "\\"));
            }
        } else if line.contains("[label=") {
            nodes += 1;
        }
    }
    DotShape {
        nodes,
        edges,
        edge_labels,
    }
}

fn label_of(line: &str) -> Option<&str> {
    let start = line.find("[label=\"")? + "[label=\"".len();
    let end = line[start..].find('"')? + start;
    Some(&line[start..end])
}
