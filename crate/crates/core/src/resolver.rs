//! Checking strong resolving sets directly from distances, and routing with
//! nothing but distances to a strong resolving set of landmarks.

use crate::error::{Error, Result};
use crate::graph::{DistanceVector, Graph, VertexId, UNREACHABLE};

/// Whether `w` strongly resolves `u` and `v`: some shortest `w`-`u` path
/// passes through `v`, or some shortest `w`-`v` path passes through `u`.
pub fn strongly_resolves(g: &Graph, w: VertexId, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let dw = g.bfs_distances(w)?;
    let du = g.bfs(u);
    Ok(resolves_with(&dw, &du, u, v))
}

fn resolves_with(dw: &DistanceVector, du: &DistanceVector, u: VertexId, v: VertexId) -> bool {
    let (wu, wv, uv) = (dw[u], dw[v], du[v]);
    if wu == UNREACHABLE || wv == UNREACHABLE || uv == UNREACHABLE {
        return false;
    }
    wu == wv + uv || wv == wu + uv
}

/// The first pair outside `set` (in id order) that no member of `set`
/// strongly resolves.
pub fn find_unresolved_pair(g: &Graph, set: &[VertexId]) -> Result<Option<(VertexId, VertexId)>> {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &r in set {
        g.check_vertex(r)?;
        inside[r] = true;
    }
    let landmarks: Vec<DistanceVector> = set.iter().map(|&r| g.bfs(r)).collect();
    for u in (0..n).filter(|&u| !inside[u]) {
        let du = g.bfs(u);
        for v in (u + 1..n).filter(|&v| !inside[v]) {
            if !landmarks.iter().any(|dw| resolves_with(dw, &du, u, v)) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

pub fn is_strong_resolving_set(g: &Graph, set: &[VertexId]) -> Result<bool> {
    Ok(find_unresolved_pair(g, set)?.is_none())
}

/// Distances to a fixed landmark set, one BFS per landmark.
///
/// When the landmarks form a strong resolving set, `max_r |d(u,r) - d(v,r)|`
/// is exactly `d(u,v)`, which is enough to walk a shortest path greedily.
#[derive(Clone, Debug)]
pub struct LandmarkIndex<'g> {
    g: &'g Graph,
    landmarks: Vec<VertexId>,
    vectors: Vec<DistanceVector>,
    /// Neighbour lists sorted by label, for the next-hop tie-break.
    by_label: Vec<Vec<VertexId>>,
}

impl<'g> LandmarkIndex<'g> {
    /// With `check` set, rejects a landmark set that is not strongly
    /// resolving and reports the first unresolved pair by label.
    pub fn new(g: &'g Graph, landmarks: &[VertexId], check: bool) -> Result<Self> {
        g.require_connected()?;
        for &r in landmarks {
            g.check_vertex(r)?;
        }
        if check {
            if let Some((u, v)) = find_unresolved_pair(g, landmarks)? {
                return Err(Error::NotResolving(g.label(u).to_owned(), g.label(v).to_owned()));
            }
        }
        let mut landmarks = landmarks.to_vec();
        landmarks.sort_unstable();
        landmarks.dedup();
        let vectors = landmarks.iter().map(|&r| g.bfs(r)).collect();
        let by_label = g
            .vertices()
            .map(|v| {
                let mut nb = g.neighbors(v).to_vec();
                g.sort_by_label(&mut nb);
                nb
            })
            .collect();
        Ok(LandmarkIndex { g, landmarks, vectors, by_label })
    }

    pub fn landmarks(&self) -> &[VertexId] {
        &self.landmarks
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.g.check_vertex(u)?;
        self.g.check_vertex(v)?;
        Ok(self.vectors.iter().map(|d| d[u].abs_diff(d[v])).max().unwrap_or(0))
    }

    /// The smallest-label neighbour of `u` one step closer to `v`.
    pub fn next_hop(&self, u: VertexId, v: VertexId) -> Result<VertexId> {
        let d = self.distance(u, v)?;
        if u == v {
            return Err(Error::SameVertex(self.g.label(u).to_owned()));
        }
        for &x in &self.by_label[u] {
            if self.distance(x, v)? + 1 == d {
                return Ok(x);
            }
        }
        Err(Error::NotResolving(self.g.label(u).to_owned(), self.g.label(v).to_owned()))
    }

    /// The vertices visited from `u` to `v`, both included.
    pub fn walk(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        let mut path = vec![u];
        let mut cur = u;
        let limit = self.g.vertex_count();
        while cur != v {
            if path.len() > limit {
                return Err(Error::NotResolving(self.g.label(u).to_owned(), self.g.label(v).to_owned()));
            }
            cur = self.next_hop(cur, v)?;
            path.push(cur);
        }
        Ok(path)
    }
}
