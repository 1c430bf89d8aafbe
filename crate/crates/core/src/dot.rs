//! Graphviz rendering of Hasse diagrams.

use std::fmt::Write;

use crate::galois::HasseDiagram;

/// Node label: merged generator labels, then the group order.
pub fn node_label(d: &HasseDiagram, i: usize) -> String {
    let node = &d.nodes[i];
    format!("{} | order={}", node.labels.join(", "), node.order())
}

/// Renders the diagram with edges pointing from the lower space to the
/// upper one. Output is a pure function of the diagram.
pub fn to_dot(d: &HasseDiagram, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for i in 0..d.nodes.len() {
        let label = node_label(d, i).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    let mut edges = d.edges.clone();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
