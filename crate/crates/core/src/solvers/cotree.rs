//! Cotrees: recognition of co-graphs and the cotree of their strong
//! resolving graph.
//!
//! In a connected co-graph every pair at distance 2 is mutually maximally
//! distant and an adjacent pair is exactly when the two are true twins, i.e.
//! leaf children of the same join node. So the strong resolving graph is the
//! complement plus the twin edges: swap union and join, then gather the leaf
//! children of each former join under a fresh twin-join node.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Union,
    Join,
    /// A join whose children are all leaves, added when building the
    /// strong resolving cotree.
    TwinJoin,
    Leaf(VertexId),
}

impl NodeKind {
    pub fn is_join(self) -> bool {
        matches!(self, NodeKind::Join | NodeKind::TwinJoin)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoNode {
    pub kind: NodeKind,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTree {
    pub nodes: Vec<CoNode>,
    pub root: usize,
    /// Leaf node of every vertex.
    pub leaf: Vec<usize>,
}

impl CoTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn kind(&self, x: usize) -> NodeKind {
        self.nodes[x].kind
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.nodes[x].parent
    }

    pub fn children(&self, x: usize) -> &[usize] {
        &self.nodes[x].children
    }

    /// Nodes with every child after its parent.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children(x).iter().rev());
        }
        out
    }

    /// Vertices below `x`.
    pub fn leaves_below(&self, x: usize) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            match self.kind(y) {
                NodeKind::Leaf(v) => out.push(v),
                _ => stack.extend(self.children(y)),
            }
        }
        out.sort_unstable();
        out
    }

    /// The graph this cotree describes, on the vertices (and labels) of `base`.
    pub fn realize(&self, base: &Graph) -> Graph {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            if !self.kind(x).is_join() {
                continue;
            }
            let parts: Vec<Vec<VertexId>> = self.children(x).iter().map(|&c| self.leaves_below(c)).collect();
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    for &u in &parts[i] {
                        for &v in &parts[j] {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
        base.with_edges(edges)
    }
}

/// Splits `set` into the components of `G[set]` (or of its complement).
fn split(g: &Graph, set: &[VertexId], complement: bool, mark: &mut [u32], stamp: &mut u32) -> Vec<Vec<VertexId>> {
    // `mark[v] >= in_set` flags membership; the complement search restamps
    // the neighbours of each popped vertex to tell them apart.
    *stamp += 1;
    let in_set = *stamp;
    for &v in set {
        mark[v] = in_set;
    }
    if !complement {
        *stamp += 1;
        let done = *stamp;
        let mut parts = Vec::new();
        for &start in set {
            if mark[start] != in_set {
                continue;
            }
            mark[start] = done;
            let mut part = vec![start];
            let mut head = 0;
            while head < part.len() {
                let v = part[head];
                head += 1;
                for &u in g.neighbors(v) {
                    if mark[u] == in_set {
                        mark[u] = done;
                        part.push(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts.sort_unstable_by_key(|p| p[0]);
        return parts;
    }
    let mut unvisited: Vec<VertexId> = set.to_vec();
    let mut parts = Vec::new();
    while let Some(start) = unvisited.pop() {
        let mut part = vec![start];
        let mut head = 0;
        while head < part.len() {
            let v = part[head];
            head += 1;
            *stamp += 1;
            let nb = *stamp;
            for &u in g.neighbors(v) {
                if mark[u] >= in_set {
                    mark[u] = nb;
                }
            }
            let mut keep = Vec::new();
            for u in unvisited.drain(..) {
                if mark[u] == nb {
                    keep.push(u);
                } else {
                    part.push(u);
                }
            }
            for &u in &keep {
                mark[u] = in_set;
            }
            unvisited = keep;
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}

/// An induced path `a - b - c - d` inside `G[set]`.
fn find_p4(g: &Graph, set: &[VertexId]) -> Option<[VertexId; 4]> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    for &b in set {
        for &c in g.neighbors(b).iter().filter(|&&c| inside[c]) {
            for &a in g.neighbors(b) {
                if !inside[a] || a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if inside[d] && d != b && !g.has_edge(d, b) && !g.has_edge(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Builds the canonical cotree of `g`: adjacent inner nodes alternate between
/// union and join, and children are ordered by their smallest vertex.
/// Fails with an induced `P4` when `g` is not a co-graph.
pub fn build_cotree(g: &Graph) -> Result<CoTree> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut nodes = Vec::new();
    let mut leaf = vec![usize::MAX; n];
    let mut mark = vec![0u32; n];
    let mut stamp = 0u32;
    nodes.push(CoNode { kind: NodeKind::Union, parent: None, children: Vec::new() });
    let mut work = vec![(0usize, g.vertices().collect::<Vec<_>>())];
    while let Some((x, set)) = work.pop() {
        if set.len() == 1 {
            nodes[x].kind = NodeKind::Leaf(set[0]);
            leaf[set[0]] = x;
            continue;
        }
        let mut parts = split(g, &set, false, &mut mark, &mut stamp);
        nodes[x].kind = NodeKind::Union;
        if parts.len() == 1 {
            parts = split(g, &set, true, &mut mark, &mut stamp);
            nodes[x].kind = NodeKind::Join;
        }
        if parts.len() == 1 {
            let [a, b, c, d] = find_p4(g, &set).expect("connected and co-connected graphs contain an induced P4");
            return Err(Error::NotACograph([a, b, c, d].map(|v| g.label(v).to_owned())));
        }
        for part in parts {
            let id = nodes.len();
            nodes.push(CoNode { kind: NodeKind::Union, parent: Some(x), children: Vec::new() });
            nodes[x].children.push(id);
            work.push((id, part));
        }
    }
    Ok(CoTree { nodes, root: 0, leaf })
}

/// Cotree of the strong resolving graph of a connected co-graph with
/// cotree `t`. Node ids of `t` are kept; twin-join nodes are appended.
pub fn sr_cotree(t: &CoTree) -> CoTree {
    let mut out = t.clone();
    for x in 0..t.len() {
        let kind = match t.kind(x) {
            NodeKind::Union => NodeKind::Join,
            NodeKind::Join => NodeKind::Union,
            k => k,
        };
        out.nodes[x].kind = kind;
        if t.kind(x) != NodeKind::Join {
            continue;
        }
        let leaves: Vec<usize> = t.children(x).iter().copied().filter(|&c| matches!(t.kind(c), NodeKind::Leaf(_))).collect();
        if leaves.len() < 2 {
            continue;
        }
        let twin = out.nodes.len();
        out.nodes.push(CoNode { kind: NodeKind::TwinJoin, parent: Some(x), children: leaves.clone() });
        for &l in &leaves {
            out.nodes[l].parent = Some(twin);
        }
        // the twin-join takes the place of its first leaf
        let mut children = Vec::with_capacity(t.children(x).len() - leaves.len() + 1);
        for &c in t.children(x) {
            if c == leaves[0] {
                children.push(twin);
            } else if !leaves.contains(&c) {
                children.push(c);
            }
        }
        out.nodes[x].children = children;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::srgraph::strong_resolving_graph;

    #[test]
    fn cotree_of_k4_is_one_join() {
        let t = build_cotree(&fixtures::complete(4)).unwrap();
        assert_eq!(t.kind(t.root), NodeKind::Join);
        assert_eq!(t.children(t.root).len(), 4);
        assert_eq!(t.realize(&fixtures::complete(4)), fixtures::complete(4));
    }

    #[test]
    fn p4_is_rejected_with_witness() {
        let err = build_cotree(&fixtures::path(4)).unwrap_err();
        match err {
            Error::NotACograph(w) => {
                let mut w = w.to_vec();
                w.sort();
                assert_eq!(w, ["p0", "p1", "p2", "p3"]);
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(build_cotree(&fixtures::cycle(5)), Err(Error::NotACograph(_))));
    }

    #[test]
    fn thirteen_vertex_cograph_shape() {
        let g = fixtures::thirteen_vertex_cograph();
        let t = build_cotree(&g).unwrap();
        assert_eq!(t.realize(&g), g);
        let root = t.root;
        assert_eq!(t.kind(root), NodeKind::Join);
        assert_eq!(t.children(root).len(), 4);
        let sr = sr_cotree(&t);
        let twins: Vec<Vec<String>> = (0..sr.len())
            .filter(|&x| sr.kind(x) == NodeKind::TwinJoin)
            .map(|x| g.sorted_labels(&sr.leaves_below(x)))
            .collect();
        assert_eq!(twins.len(), 2);
        assert!(twins.contains(&vec!["a".into(), "c".into()]));
        assert!(twins.contains(&vec!["e".into(), "h".into()]));
        assert_eq!(sr.realize(&g), strong_resolving_graph(&g).unwrap());
    }

    #[test]
    fn parents_and_children_agree() {
        let g = fixtures::thirteen_vertex_cograph();
        let sr = sr_cotree(&build_cotree(&g).unwrap());
        for x in 0..sr.len() {
            for &c in sr.children(x) {
                assert_eq!(sr.parent(c), Some(x));
            }
        }
        assert_eq!(sr.preorder().len(), sr.len());
        for v in g.vertices() {
            assert_eq!(sr.kind(sr.leaf[v]), NodeKind::Leaf(v));
        }
    }
}
