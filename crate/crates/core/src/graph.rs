//! Undirected simple graphs with stable text labels.
//!
//! Vertices get dense ids in first-appearance order of their labels. The
//! adjacency of every vertex is kept sorted, so neighbourhood lookups are
//! binary searches and iteration order is deterministic.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Marker stored in a [`DistanceVector`] for vertices in another component.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
}

/// Hop distances from a single source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: VertexId,
    pub dist: Vec<u32>,
}

impl DistanceVector {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

impl std::ops::Index<VertexId> for DistanceVector {
    type Output = u32;

    fn index(&self, v: VertexId) -> &u32 {
        &self.dist[v]
    }
}

#[derive(Default, Debug)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, creating the vertex if needed.
    pub fn add_vertex(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adj.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_owned()));
        }
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn add_edge_ids(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Graph { labels: self.labels, index: self.index, adj: self.adj }
    }
}

impl Graph {
    /// Builds a graph from label pairs; duplicate edges collapse.
    pub fn from_edge_list<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for (x, y) in edges {
            b.add_edge(x.as_ref(), y.as_ref())?;
        }
        Ok(b.build())
    }

    /// Builds a graph over `n` vertices labelled `0..n` from id pairs.
    pub fn from_id_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(&i.to_string());
        }
        for &(u, v) in edges {
            b.add_edge_ids(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn require_id(&self, label: &str) -> Result<VertexId> {
        self.id(label).ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic id order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn bfs_distances(&self, s: VertexId) -> Result<DistanceVector> {
        self.check_vertex(s)?;
        Ok(self.bfs(s))
    }

    pub(crate) fn bfs(&self, s: VertexId) -> DistanceVector {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        DistanceVector { source: s, dist }
    }

    /// True iff one BFS reaches every vertex. The empty graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        self.bfs(0).dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            Err(Error::EmptyGraph)
        } else if !self.is_connected() {
            Err(Error::Disconnected)
        } else {
            Ok(())
        }
    }

    /// Subgraph induced by `vertices`, with local ids following the given
    /// order. Labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        let mut local = HashMap::with_capacity(vertices.len());
        let mut b = GraphBuilder::new();
        for &v in vertices {
            local.insert(v, b.add_vertex(&self.labels[v]));
        }
        for &v in vertices {
            let lv = local[&v];
            for w in &self.adj[v] {
                if let Some(&lw) = local.get(w) {
                    if lv < lw {
                        b.adj[lv].push(lw);
                        b.adj[lw].push(lv);
                    }
                }
            }
        }
        b.build()
    }

    /// Same vertex set, with `edges` (by id) instead of the current ones.
    pub fn with_edges(&self, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Graph {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (u, v) in edges {
            debug_assert_ne!(u, v);
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Graph { labels: self.labels.clone(), index: self.index.clone(), adj }
    }

    /// Removes all edges incident to `removed`; the vertices stay, isolated.
    pub fn without_vertices(&self, removed: &[VertexId]) -> Graph {
        let mut gone = vec![false; self.vertex_count()];
        for &v in removed {
            gone[v] = true;
        }
        self.with_edges(self.edges().filter(|&(u, v)| !gone[u] && !gone[v]))
    }

    /// Labels of `set`, sorted.
    pub fn sorted_labels<'a>(&'a self, set: impl IntoIterator<Item = &'a VertexId>) -> Vec<String> {
        let mut out: Vec<String> = set.into_iter().map(|&v| self.labels[v].clone()).collect();
        out.sort();
        out
    }

    /// Sorts a vertex set by label in place.
    pub fn sort_by_label(&self, set: &mut [VertexId]) {
        set.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
    }

    /// Rank of every vertex in label order (`rank[v] == 0` for the smallest label).
    pub fn label_ranks(&self) -> Vec<usize> {
        let mut order: Vec<VertexId> = self.vertices().collect();
        self.sort_by_label(&mut order);
        let mut rank = vec![0; order.len()];
        for (r, v) in order.into_iter().enumerate() {
            rank[v] = r;
        }
        rank
    }

    /// Edges as sorted label pairs, each pair ordered, for comparisons that
    /// must ignore id assignment.
    pub fn labelled_edges(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b { (a, b) } else { (b, a) }
            })
            .collect();
        out.sort();
        out
    }
}
