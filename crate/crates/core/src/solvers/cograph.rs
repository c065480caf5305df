//! Co-graph components, solved on the cotree of the strong resolving graph.
//!
//! With `n(x)` the number of non-excluded leaves below node `x`:
//!
//! * `vc(leaf) = 0`, `vc(union) = sum vc(child)` and
//!   `vc(join) = min_i (n(join) - n(child_i) + vc(child_i))`;
//! * for a query `w` with parent `p` in the co-graph's own cotree, the forced
//!   set is everything else below `p` plus every sibling subtree hanging off a
//!   union ancestor (a join once the tree is swapped). What is left is a
//!   union of sibling subtrees under former joins, each covered on its own.
//!
//! `m(x)` accumulates that cost from the root down to `x`, so every query is
//! answered in constant time as `n(p) - n(w) + m(p)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::cotree::{build_cotree, sr_cotree, CoTree, NodeKind};
use super::{mask, ComponentClass, ComponentSolver, PreparedComponent};

pub struct CographSolver;

pub struct PreparedCograph {
    /// Cotree of the strong resolving graph. Inner node ids and parents
    /// agree with the co-graph's own cotree.
    tree: CoTree,
    excluded: Vec<bool>,
    /// Parent of each leaf in the co-graph's cotree.
    graph_parent: Vec<Option<usize>>,
    n: Vec<usize>,
    vc: Vec<usize>,
    /// Child achieving the minimum at join nodes.
    best: Vec<usize>,
    m: Vec<usize>,
}

impl PreparedCograph {
    pub fn new(h: &Graph, excluded: &[VertexId]) -> Result<Self> {
        let t = build_cotree(h)?;
        let graph_parent = h.vertices().map(|v| t.parent(t.leaf[v])).collect();
        let tree = sr_cotree(&t);
        let excluded = mask(h.vertex_count(), excluded);
        let mut p = PreparedCograph {
            n: vec![0; tree.len()],
            vc: vec![0; tree.len()],
            best: vec![usize::MAX; tree.len()],
            m: vec![0; tree.len()],
            tree,
            excluded,
            graph_parent,
        };
        p.fill_counts();
        p.fill_increments();
        Ok(p)
    }

    /// Leaf counts and minimum cover sizes, bottom-up.
    fn fill_counts(&mut self) {
        let order = self.tree.preorder();
        for &x in order.iter().rev() {
            match self.tree.kind(x) {
                NodeKind::Leaf(v) => self.n[x] = usize::from(!self.excluded[v]),
                kind => {
                    let ch = self.tree.children(x);
                    let n: usize = ch.iter().map(|&c| self.n[c]).sum();
                    self.n[x] = n;
                    if kind.is_join() {
                        // first minimum, so ties go to the smallest child index
                        let arg = *ch.iter().min_by_key(|&&c| n - self.n[c] + self.vc[c]).unwrap();
                        self.vc[x] = n - self.n[arg] + self.vc[arg];
                        self.best[x] = arg;
                    } else {
                        self.vc[x] = ch.iter().map(|&c| self.vc[c]).sum();
                    }
                }
            }
        }
    }

    /// `m(x)`: what the part of the tree outside `x` adds to a query whose
    /// co-graph parent is `x`.
    fn fill_increments(&mut self) {
        for x in self.tree.preorder() {
            let Some(a) = self.tree.parent(x) else {
                self.m[x] = 0;
                continue;
            };
            let siblings = self.tree.children(a).iter().filter(|&&c| c != x);
            let add: usize = if self.tree.kind(a).is_join() {
                siblings.map(|&c| self.n[c]).sum()
            } else {
                siblings.map(|&c| self.vc[c]).sum()
            };
            self.m[x] = self.m[a] + add;
        }
    }

    /// Minimum cover size of the residual graph that must contain
    /// `MD(H, w) \ W`, climbing from the co-graph parent of `w`.
    pub fn xvc_by_climbing(&self, w: VertexId) -> usize {
        let Some(p) = self.graph_parent[w] else { return 0 };
        let mut h = self.n[p] - self.n[self.tree.leaf[w]];
        let mut x = p;
        while let Some(a) = self.tree.parent(x) {
            for &c in self.tree.children(a).iter().filter(|&&c| c != x) {
                h += if self.tree.kind(a).is_join() { self.n[c] } else { self.vc[c] };
            }
            x = a;
        }
        h
    }

    pub fn vc(&self) -> usize {
        self.vc[self.tree.root]
    }

    /// `|XVC(SR(H) \ W, MD(H, w) \ W)|` for every vertex, from the stored increments.
    pub fn xvc_all(&self) -> Vec<usize> {
        (0..self.graph_parent.len())
            .map(|w| match self.graph_parent[w] {
                None => 0,
                Some(p) => self.n[p] - self.n[self.tree.leaf[w]] + self.m[p],
            })
            .collect()
    }

    fn check(&self, w: VertexId) -> Result<()> {
        if w < self.graph_parent.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{w}")))
        }
    }

    pub fn sr_tree(&self) -> &CoTree {
        &self.tree
    }

    /// Emits every non-excluded leaf below the nodes in `all`, and a minimum
    /// cover of the subtrees in `cover`.
    fn collect(&self, mut cover: Vec<usize>, mut all: Vec<usize>) -> Vec<VertexId> {
        while let Some(x) = cover.pop() {
            match self.tree.kind(x) {
                NodeKind::Leaf(_) => {}
                kind if kind.is_join() => {
                    let keep = self.best[x];
                    cover.push(keep);
                    all.extend(self.tree.children(x).iter().filter(|&&c| c != keep));
                }
                _ => cover.extend(self.tree.children(x)),
            }
        }
        let mut out = Vec::new();
        while let Some(x) = all.pop() {
            match self.tree.kind(x) {
                NodeKind::Leaf(v) if !self.excluded[v] => out.push(v),
                NodeKind::Leaf(_) => {}
                _ => all.extend(self.tree.children(x)),
            }
        }
        out
    }
}

impl PreparedComponent for PreparedCograph {
    fn mvc_size(&mut self) -> Result<usize> {
        Ok(self.vc())
    }

    fn mvc_set(&mut self) -> Result<Vec<VertexId>> {
        Ok(self.collect(vec![self.tree.root], Vec::new()))
    }

    fn xvc_size(&mut self, w: VertexId) -> Result<usize> {
        self.check(w)?;
        Ok(match self.graph_parent[w] {
            None => 0,
            Some(p) => self.n[p] - self.n[self.tree.leaf[w]] + self.m[p],
        })
    }

    fn xvc_set(&mut self, w: VertexId) -> Result<Vec<VertexId>> {
        self.check(w)?;
        let Some(p) = self.graph_parent[w] else { return Ok(Vec::new()) };
        let wl = self.tree.leaf[w];
        // everything below p except w; w may sit under a twin-join child of p
        let mut all = Vec::new();
        for &c in self.tree.children(p) {
            if c == wl {
                continue;
            }
            if self.tree.parent(wl) == Some(c) {
                all.extend(self.tree.children(c).iter().filter(|&&l| l != wl));
            } else {
                all.push(c);
            }
        }
        let mut cover = Vec::new();
        let mut x = p;
        while let Some(a) = self.tree.parent(x) {
            for &c in self.tree.children(a).iter().filter(|&&c| c != x) {
                if self.tree.kind(a).is_join() {
                    all.push(c);
                } else {
                    cover.push(c);
                }
            }
            x = a;
        }
        Ok(self.collect(cover, all))
    }
}

impl ComponentSolver for CographSolver {
    fn class(&self) -> ComponentClass {
        ComponentClass::Cograph
    }

    fn detect(&self, h: &Graph) -> bool {
        build_cotree(h).is_ok()
    }

    fn prepare<'a>(&self, h: &'a Graph, excluded: &[VertexId]) -> Result<Box<dyn PreparedComponent + 'a>> {
        Ok(Box::new(PreparedCograph::new(h, excluded)?))
    }
}
