//! Named graph families and the small hand-built instances used across the
//! test suites and the CLI examples.

use crate::graph::{Graph, GraphBuilder};

fn build(vertices: &[String], edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new();
    for v in vertices {
        b.add_vertex(v);
    }
    for &(u, v) in edges {
        b.add_edge_ids(u, v).expect("fixture edges are loop-free");
    }
    b.build()
}

/// Path `p0 - p1 - ... - p{n-1}`.
pub fn path(n: usize) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(&labels, &edges)
}

/// Cycle `x0 .. x{n-1}`.
pub fn cycle(n: usize) -> Graph {
    cycle_with_prefix("x", n)
}

pub fn cycle_with_prefix(prefix: &str, n: usize) -> Graph {
    assert!(n >= 3);
    let labels: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(&labels, &edges)
}

/// Complete graph on `k0 .. k{n-1}`.
pub fn complete(n: usize) -> Graph {
    let labels: Vec<String> = (0..n).map(|i| format!("k{i}")).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(&labels, &edges)
}

/// Star with centre `c` and leaves `l0 .. l{leaves-1}`.
pub fn star(leaves: usize) -> Graph {
    let mut labels = vec!["c".to_owned()];
    labels.extend((0..leaves).map(|i| format!("l{i}")));
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(&labels, &edges)
}

/// `rows x cols` grid; vertex `x{i}_{j}` sits in row `i`, column `j`, both 1-based.
pub fn grid(rows: usize, cols: usize) -> Graph {
    grid_with_prefix("x", rows, cols)
}

pub fn grid_with_prefix(prefix: &str, rows: usize, cols: usize) -> Graph {
    let mut labels = Vec::with_capacity(rows * cols);
    for i in 1..=rows {
        for j in 1..=cols {
            labels.push(format!("{prefix}{i}_{j}"));
        }
    }
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    build(&labels, &edges)
}

/// Two triangles sharing `v`.
pub fn bowtie() -> Graph {
    Graph::from_edge_list(&[
        ("a", "b"),
        ("b", "v"),
        ("v", "a"),
        ("v", "c"),
        ("c", "d"),
        ("d", "v"),
    ])
    .unwrap()
}

/// Eight-vertex graph whose minimum strong resolving set is `{a, b, g}`.
pub fn eight_vertex_example() -> Graph {
    Graph::from_edge_list(&[
        ("a", "d"),
        ("a", "f"),
        ("a", "g"),
        ("b", "f"),
        ("c", "d"),
        ("c", "f"),
        ("c", "h"),
        ("d", "e"),
        ("d", "g"),
        ("d", "h"),
        ("e", "h"),
    ])
    .unwrap()
}

/// Five graphs that merge into `composed_example`:
/// children `G1..G4` with their merge vertices `u1..u4`, the host `H`, and
/// the attachment vertices `v1, v2, v2, v3` in `H` (by label).
pub struct CompositionParts {
    pub children: Vec<(Graph, &'static str)>,
    pub host: Graph,
    pub attach: Vec<&'static str>,
}

pub fn composition_parts() -> CompositionParts {
    let g1 = Graph::from_edge_list(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
    let g2 = Graph::from_edge_list(&[("e", "f")]).unwrap();
    let g3 = Graph::from_edge_list(&[("g", "h")]).unwrap();
    let g4 = Graph::from_edge_list(&[("p", "q"), ("q", "r"), ("q", "s"), ("q", "t")]).unwrap();
    let host = Graph::from_edge_list(&[
        ("i", "j"),
        ("j", "k"),
        ("k", "l"),
        ("l", "m"),
        ("m", "n"),
        ("n", "o"),
        ("o", "i"),
    ])
    .unwrap();
    CompositionParts {
        children: vec![(g1, "c"), (g2, "f"), (g3, "h"), (g4, "p")],
        host,
        attach: vec!["i", "n", "n", "m"],
    }
}

/// What `composition_parts` merges into, with the child labels left unprefixed.
pub fn composed_example() -> Graph {
    Graph::from_edge_list(&[
        ("a", "b"),
        ("b", "i"),
        ("i", "d"),
        ("d", "a"),
        ("e", "n"),
        ("g", "n"),
        ("m", "q"),
        ("q", "r"),
        ("q", "s"),
        ("q", "t"),
        ("i", "j"),
        ("j", "k"),
        ("k", "l"),
        ("l", "m"),
        ("m", "n"),
        ("n", "o"),
        ("o", "i"),
    ])
    .unwrap()
}

/// A graph with seven blocks around the 4-cycle `h i j m`.
pub fn seven_block_example() -> Graph {
    Graph::from_edge_list(&[
        ("h", "i"),
        ("i", "j"),
        ("j", "m"),
        ("m", "h"),
        ("h", "a"),
        ("a", "b"),
        ("b", "h"),
        ("a", "c"),
        ("c", "d"),
        ("d", "e"),
        ("e", "f"),
        ("f", "c"),
        ("i", "g"),
        ("j", "k"),
        ("k", "l"),
        ("l", "j"),
        ("l", "n"),
    ])
    .unwrap()
}

/// Thirteen-vertex co-graph with canonical co-tree
/// `join(a, c, union(d, f), union(join(e, h, union(g, j)), join(i, union(b, k), union(l, m))))`.
pub fn thirteen_vertex_cograph() -> Graph {
    let mut b = GraphBuilder::new();
    for l in ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"] {
        b.add_vertex(l);
    }
    let mut join = |xs: &[&str], ys: &[&str]| {
        for x in xs {
            for y in ys {
                b.add_edge(x, y).unwrap();
            }
        }
    };
    // root join: a, c, {d,f}, P ∪ Q
    let parts: [&[&str]; 4] = [&["a"], &["c"], &["d", "f"], &["e", "h", "g", "j", "i", "b", "k", "l", "m"]];
    for x in 0..parts.len() {
        for y in x + 1..parts.len() {
            join(parts[x], parts[y]);
        }
    }
    // P = join(e, h, union(g, j))
    join(&["e"], &["h"]);
    join(&["e", "h"], &["g", "j"]);
    // Q = join(i, union(b, k), union(l, m))
    join(&["i"], &["b", "k", "l", "m"]);
    join(&["b", "k"], &["l", "m"]);
    b.build()
}
