//! Graphviz rendering of an analysed graph.

use std::fmt::Write as _;

use crate::depth::{BranchCounts, DepthProfile};

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per vertex labelled `id w=.. s=.. m=..`; central vertices are
/// double circles and central arcs bold.
pub fn export_dot(depths: &DepthProfile, counts: &BranchCounts) -> String {
    let g = depths.graph();
    let mut out = String::from("graph resolution {\n  node [shape=circle];\n");
    for v in 0..g.len() {
        let label = format!("{} w={} s={} m={}", g.id(v), g.weight(v), depths.depth(v), counts.m[v]);
        let shape = if depths.is_central(v) {
            " shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(out, "  {} [label={}{shape}];", quoted(g.id(v)), quoted(&label));
    }
    for &(a, b) in g.edges() {
        let bold = depths.depth(a) == depths.depth(b);
        let style = if bold { " [style=bold]" } else { "" };
        let _ = writeln!(out, "  {} -- {}{style};", quoted(g.id(a)), quoted(g.id(b)));
    }
    out.push_str("}\n");
    out
}
