//! Graphviz export of Hasse diagrams.

use std::fmt::Write as _;

/// One cluster of a DOT drawing: labelled nodes and covering edges
/// `(lower, upper)`, given as positions in `labels`.
pub struct HasseCluster {
    pub name: String,
    pub title: String,
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A digraph with one subgraph cluster per diagram, edges pointing upwards.
pub fn render(graph_name: &str, clusters: &[HasseCluster]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(graph_name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for c in clusters {
        writeln!(
            out,
            "  subgraph {} {{",
            quote(&format!("cluster_{}", c.name))
        )
        .unwrap();
        writeln!(out, "    label={};", quote(&c.title)).unwrap();
        for (i, label) in c.labels.iter().enumerate() {
            writeln!(
                out,
                "    {} [label={}];",
                quote(&format!("{}_{i}", c.name)),
                quote(label)
            )
            .unwrap();
        }
        for &(lo, hi) in &c.covers {
            writeln!(
                out,
                "    {} -> {};",
                quote(&format!("{}_{lo}", c.name)),
                quote(&format!("{}_{hi}", c.name))
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
