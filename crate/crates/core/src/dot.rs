//! Graphviz rendering of a graph with a pseudoflower drawn on it.

use std::fmt::Write;

use crate::flower::PseudoFlower;
use crate::graph::Graph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Each petal becomes a cluster `cluster_petal_<n>`, the residual set `X`
/// the dashed cluster `cluster_X`, and cutpoint vertices are drawn with a
/// double border and their cutpoint label.
pub fn render_dot(g: &Graph, f: &PseudoFlower) -> String {
    let mut out = String::from("graph pseudoflower {\n  node [shape=circle];\n");
    for (n, p) in f.index_positions().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_petal_{n} {{");
        let _ = writeln!(out, "    label={};", quote(f.label(p)));
        for v in f.set_at(p).iter() {
            let _ = writeln!(out, "    {v};");
        }
        out.push_str("  }\n");
    }
    out.push_str("  subgraph cluster_X {\n    label=\"X\";\n    style=dashed;\n");
    for v in f.x().iter() {
        let _ = writeln!(out, "    {v};");
    }
    out.push_str("  }\n");
    for p in f.cutpoint_positions() {
        for v in f.set_at(p).iter() {
            let _ = writeln!(out, "  {v} [peripheries=2, xlabel={}];", quote(f.label(p)));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
