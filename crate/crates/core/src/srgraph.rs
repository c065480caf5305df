//! Maximally distant sets and the strong resolving graph, computed directly
//! from BFS distances. Everything compositional is checked against this.

use crate::error::Result;
use crate::graph::{DistanceVector, Graph, VertexId};

/// Vertices of `g` with no neighbour strictly farther from the BFS source.
pub(crate) fn md_from_distances(g: &Graph, d: &DistanceVector) -> Vec<VertexId> {
    g.vertices()
        .filter(|&u| g.neighbors(u).iter().all(|&v| d[v] <= d[u]))
        .collect()
}

/// `MD(G, w)`: the vertices maximally distant from `w`, sorted by id.
pub fn maximally_distant_set(g: &Graph, w: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(w)?;
    g.require_connected()?;
    Ok(md_from_distances(g, &g.bfs(w)))
}

pub fn is_mutually_maximally_distant(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()?;
    if u == v {
        return Ok(false);
    }
    let du = g.bfs(u);
    let dv = g.bfs(v);
    let farther = |x: VertexId, d: &DistanceVector| g.neighbors(x).iter().any(|&y| d[y] > d[x]);
    Ok(!farther(v, &du) && !farther(u, &dv))
}

/// `MD(G, w)` for every `w`, as a dense membership matrix.
pub(crate) fn md_matrix(g: &Graph) -> Vec<Vec<bool>> {
    g.vertices()
        .map(|w| {
            let d = g.bfs(w);
            g.vertices()
                .map(|u| g.neighbors(u).iter().all(|&v| d[v] <= d[u]))
                .collect()
        })
        .collect()
}

/// The strong resolving graph: same vertices, an edge for every mutually
/// maximally distant pair. One BFS per vertex.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph> {
    g.require_connected()?;
    let md = md_matrix(g);
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if md[u][v] && md[v][u] {
                edges.push((u, v));
            }
        }
    }
    Ok(g.with_edges(edges))
}
