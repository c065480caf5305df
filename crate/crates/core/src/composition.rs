//! Attaching child graphs to a host graph by merging single vertices, and
//! the strong resolving graph of the result assembled from its parts.
//!
//! Child `i` (1-based) contributes its vertices relabelled `"{i}.{label}"`;
//! host labels are kept. The merge vertex `u_i` of child `i` disappears and
//! its neighbours are joined to the host vertex `v_i`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId};
use crate::srgraph::{maximally_distant_set, strong_resolving_graph};

/// Where a vertex of the merged graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Host(VertexId),
    Child { index: usize, vertex: VertexId },
}

#[derive(Clone, Debug)]
pub struct Composition {
    pub children: Vec<(Graph, VertexId)>,
    pub host: Graph,
    pub attach: Vec<VertexId>,
    merged: Graph,
    origin: Vec<Origin>,
    /// `child_ids[i][x]` is the merged id of vertex `x` of child `i`; the
    /// merge vertex maps to its host attachment vertex.
    child_ids: Vec<Vec<VertexId>>,
}

/// Merges `children` into `host`; see [`Composition::new`].
pub fn merge(children: &[(Graph, VertexId)], host: &Graph, attach: &[VertexId]) -> Result<Graph> {
    Composition::new(children.to_vec(), host.clone(), attach.to_vec()).map(|c| c.merged)
}

fn check_part(g: &Graph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(Error::SizeTooSmall);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

impl Composition {
    pub fn new(children: Vec<(Graph, VertexId)>, host: Graph, attach: Vec<VertexId>) -> Result<Self> {
        if children.len() != attach.len() {
            return Err(Error::BadComposition(format!(
                "{} children but {} attachment vertices",
                children.len(),
                attach.len()
            )));
        }
        check_part(&host)?;
        for &v in &attach {
            host.check_vertex(v)?;
        }
        for (g, u) in &children {
            check_part(g)?;
            g.check_vertex(*u)?;
        }

        let mut b = GraphBuilder::new();
        let mut origin = Vec::new();
        let mut taken: HashSet<String> = HashSet::new();
        for v in host.vertices() {
            b.add_vertex(host.label(v));
            taken.insert(host.label(v).to_owned());
            origin.push(Origin::Host(v));
        }
        let mut child_ids = Vec::with_capacity(children.len());
        for (i, (g, u)) in children.iter().enumerate() {
            let mut ids = vec![attach[i]; g.vertex_count()];
            for x in g.vertices().filter(|x| x != u) {
                let label = format!("{}.{}", i + 1, g.label(x));
                if !taken.insert(label.clone()) {
                    return Err(Error::LabelCollision(label));
                }
                ids[x] = b.add_vertex(&label);
                origin.push(Origin::Child { index: i, vertex: x });
            }
            child_ids.push(ids);
        }
        for (x, y) in host.edges() {
            b.add_edge_ids(x, y)?;
        }
        for (i, (g, _)) in children.iter().enumerate() {
            for (x, y) in g.edges() {
                b.add_edge_ids(child_ids[i][x], child_ids[i][y])?;
            }
        }
        let merged = b.build();
        Ok(Composition { children, host, attach, merged, origin, child_ids })
    }

    pub fn graph(&self) -> &Graph {
        &self.merged
    }

    pub fn into_graph(self) -> Graph {
        self.merged
    }

    pub fn origin(&self, v: VertexId) -> Origin {
        self.origin[v]
    }

    /// Merged id of vertex `x` of child `i` (the merge vertex maps to `v_i`).
    pub fn child_vertex(&self, i: usize, x: VertexId) -> VertexId {
        self.child_ids[i][x]
    }

    fn is_attach(&self) -> Vec<bool> {
        let mut out = vec![false; self.host.vertex_count()];
        for &v in &self.attach {
            out[v] = true;
        }
        out
    }

    /// `MD(G_i, u_i)` mapped into the merged graph, for every child.
    fn child_far_sets(&self) -> Result<Vec<Vec<VertexId>>> {
        self.children
            .iter()
            .enumerate()
            .map(|(i, (g, u))| {
                Ok(maximally_distant_set(g, *u)?.into_iter().map(|x| self.child_ids[i][x]).collect())
            })
            .collect()
    }

    /// `MD(H, h)` without attachment vertices, mapped into the merged graph.
    fn host_far_set(&self, h: VertexId, attach: &[bool]) -> Result<Vec<VertexId>> {
        Ok(maximally_distant_set(&self.host, h)?.into_iter().filter(|&y| !attach[y]).collect())
    }

    /// `MD(J, w)` assembled from maximally distant sets of the parts only.
    pub fn md_composed(&self, w: VertexId) -> Result<Vec<VertexId>> {
        self.merged.check_vertex(w)?;
        let attach = self.is_attach();
        let far = self.child_far_sets()?;
        let mut out = Vec::new();
        match self.origin[w] {
            Origin::Host(h) => {
                out.extend(self.host_far_set(h, &attach)?);
                for set in &far {
                    out.extend(set);
                }
            }
            Origin::Child { index: j, vertex } => {
                let (g, u) = &self.children[j];
                out.extend(
                    maximally_distant_set(g, vertex)?
                        .into_iter()
                        .filter(|x| x != u)
                        .map(|x| self.child_ids[j][x]),
                );
                out.extend(self.host_far_set(self.attach[j], &attach)?);
                for (i, set) in far.iter().enumerate() {
                    if i != j {
                        out.extend(set);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// The strong resolving graph of the merged graph, built from the parts:
    /// SR edges inside each child away from `u_i`, SR edges of the host away
    /// from the attachment vertices, a complete multipartite graph on the
    /// sets `MD(G_i, u_i)`, and `MD(G_i, u_i) x (MD(H, v_i) \ {v_1..v_k})`.
    pub fn sr_edges_composed(&self) -> Result<Graph> {
        let attach = self.is_attach();
        let far = self.child_far_sets()?;
        let mut edges = Vec::new();
        for (i, (g, u)) in self.children.iter().enumerate() {
            let sr = strong_resolving_graph(g)?;
            for (x, y) in sr.edges() {
                if x != *u && y != *u {
                    edges.push((self.child_ids[i][x], self.child_ids[i][y]));
                }
            }
        }
        let sr_host = strong_resolving_graph(&self.host)?;
        for (x, y) in sr_host.edges() {
            if !attach[x] && !attach[y] {
                edges.push((x, y));
            }
        }
        for i in 0..far.len() {
            for j in i + 1..far.len() {
                for &x in &far[i] {
                    for &y in &far[j] {
                        edges.push((x, y));
                    }
                }
            }
        }
        for (i, set) in far.iter().enumerate() {
            let host_side = self.host_far_set(self.attach[i], &attach)?;
            for &x in set {
                for &y in &host_side {
                    edges.push((x, y));
                }
            }
        }
        Ok(self.merged.with_edges(edges))
    }
}
