//! Plain-text edge lists and DOT export.
//!
//! Edge-list format, one item per line:
//!
//! ```text
//! # comment
//! a b        an edge
//! v c        declares vertex c (needed only for isolated vertices)
//! ```
//!
//! Tokens are separated by whitespace and `#` starts a comment anywhere on a
//! line. A line whose first token is `v` is always a declaration, so the
//! writer puts a vertex named `v` second on its edge lines.

use std::fmt::Write as _;

use crate::decomposition::DecompositionTree;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    let mut seen_any = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            ["v", label] => {
                b.add_vertex(label);
            }
            [x, y] => b.add_edge(x, y).map_err(|e| Error::Parse { line, msg: e.to_string() })?,
            ["v"] => return Err(Error::Parse { line, msg: "vertex declaration without a label".into() }),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two labels, found {} tokens", tokens.len()),
                })
            }
        }
        seen_any = true;
    }
    if !seen_any {
        return Err(Error::Parse { line: 0, msg: "no vertices or edges".into() });
    }
    Ok(b.build())
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let (x, y) = if g.label(u) == "v" { (v, u) } else { (u, v) };
        let _ = writeln!(out, "{} {}", g.label(x), g.label(y));
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "v {}", g.label(v));
    }
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text for `g`, isolated vertices included.
pub fn graph_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(v)));
    }
    out.push_str("}\n");
    out
}

/// DOT text for a decomposition tree: blocks as boxes listing their
/// vertices, separation vertices as circles.
pub fn tree_dot(g: &Graph, tree: &DecompositionTree) -> String {
    let mut out = String::from("graph \"decomposition\" {\n");
    for (b, block) in tree.blocks.iter().enumerate() {
        let members = g.sorted_labels(&block.vertices).join(" ");
        let _ = writeln!(out, "  b{b} [shape=box, label={}];", quote(&members));
    }
    for (s, &v) in tree.separations.iter().enumerate() {
        let _ = writeln!(out, "  s{s} [shape=circle, label={}];", quote(g.label(v)));
    }
    for (b, s) in tree.tree_edges() {
        let _ = writeln!(out, "  b{b} -- s{s};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::build_decomposition_tree;
    use crate::fixtures;

    #[test]
    fn parses_comments_declarations_and_edges() {
        let g = parse_edge_list("# header\n\na b\nb c  # trailing\nv d\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(g.id("d").unwrap()), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(parse_edge_list("").unwrap_err(), Error::Parse { line: 0, msg: "no vertices or edges".into() });
        assert!(matches!(parse_edge_list("# only\n\n"), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(parse_edge_list("a b\na b c\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("a b\nc c\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn round_trip_keeps_edges() {
        for g in [fixtures::eight_vertex_example(), fixtures::grid(3, 4), fixtures::seven_block_example()] {
            let h = parse_edge_list(&write_edge_list(&g)).unwrap();
            let mut a = g.labelled_edges();
            let mut b = h.labelled_edges();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
        let g = Graph::from_edge_list(&[("v", "w"), ("x", "v")]).unwrap();
        let h = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn dot_output() {
        let c6 = fixtures::cycle(6);
        let sr = crate::srgraph::strong_resolving_graph(&c6).unwrap();
        let dot = graph_dot(&sr, "sr");
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";") && !l.contains("--")).count(), 6);

        let g = fixtures::bowtie();
        let t = build_decomposition_tree(&g).unwrap();
        let dot = tree_dot(&g, &t);
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert_eq!(dot.matches("shape=circle").count(), 1);
        assert_eq!(dot.matches(" -- ").count(), 2);
    }
}
