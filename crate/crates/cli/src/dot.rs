//! Graphviz export of web graphs.

use std::fmt::Write;

use starplan_core::web::{WebEdge, WebNode};
use starplan_core::{StarGraph, WebGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Centers are labelled by their vertex and circle vertices by their
/// half-edge. Spokes are dotted, rim edges dashed and colored.
pub fn web_dot(g: &StarGraph, w: &WebGraph) -> String {
    let mut out = String::from("graph web {\n");
    for x in 0..w.graph.vertex_count() {
        let line = match w.node_kind(x) {
            WebNode::Center(v) => format!("  n{x} [label={}, shape=circle];\n", quote(g.vertex_name(v))),
            WebNode::Circle(v, p) => {
                format!("  n{x} [label={}, shape=box];\n", quote(g.half_edge_name(g.rotation(v)[p])))
            }
        };
        out.push_str(&line);
    }
    for (e, &(a, b)) in w.graph.edge_list().iter().enumerate() {
        let style = match w.edge_kind(e) {
            WebEdge::Through(_) => "",
            WebEdge::Spoke { .. } => " [style=dotted]",
            WebEdge::Circle { .. } => " [style=dashed, color=blue]",
        };
        writeln!(out, "  n{a} -- n{b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
