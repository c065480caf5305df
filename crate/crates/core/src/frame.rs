//! Strong metric dimension by dynamic programming over the block-cut tree.
//!
//! Every block `B` is a host graph with the subtrees below its separation
//! vertices merged in. Let `W` be the separation vertices of `B` (children
//! plus the one above it), `x_i` the cover size of child subtree `i` forced to
//! contain the vertices maximally distant from its attachment vertex, and
//! `h_j = |XVC(SR(B) \ W, MD(B, v_j) \ W)|`. A cover of the merged strong
//! resolving graph either contains all of the children's far sets:
//!
//! `|U_0| = |MVC(SR(B) \ W)| + sum x_i`
//!
//! or all but the one of child `j`, in which case `MD(B, v_j) \ W` is forced:
//!
//! `|U_j| = h_j + mvc_j + sum x_i - x_j`.
//!
//! The subtree answer is the smallest candidate (first one on ties). Witness
//! sets are rebuilt top-down from one stored component cover per mode.

use serde::Serialize;

use crate::decomposition::{build_decomposition_tree, DecompositionTree};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::solvers::{ComponentClass, Registry};

/// What one block contributed to the answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTrace {
    pub block: usize,
    pub vertices: Vec<String>,
    pub class: ComponentClass,
    /// `|MVC(SR(B) \ W)|`.
    pub mvc: usize,
    /// `|U_0|, |U_1|, ..` in child order.
    pub candidates: Vec<usize>,
    /// Index of the smallest candidate; 0 means every child is forced.
    pub chosen_j: usize,
    pub subtree_mvc: usize,
    /// Absent at the root, which has no attachment vertex.
    pub subtree_xvc: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveSummary {
    pub dimension: usize,
    /// A minimum strong resolving set, by label.
    pub resolving_set: Vec<String>,
    /// One entry per block, bottom-up.
    pub trace: Vec<BlockTrace>,
}

/// Cover sizes and sets of the graph hanging below a block, with its
/// attachment vertex removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeAnswer {
    pub mvc_size: usize,
    pub mvc_set: Vec<VertexId>,
    pub xvc_size: Option<usize>,
    pub xvc_set: Option<Vec<VertexId>>,
}

#[derive(Clone, Debug)]
struct BlockSolution {
    class: ComponentClass,
    /// `(separation vertex, child block)` in child order.
    children: Vec<(VertexId, usize)>,
    mvc: usize,
    candidates: Vec<usize>,
    chosen: usize,
    subtree_mvc: usize,
    subtree_xvc: Option<usize>,
    /// Component cover used when the subtree is solved without forcing:
    /// `MVC(SR(B) \ W)` if `chosen == 0`, else the forced cover for child `chosen`.
    chosen_cover: Vec<VertexId>,
    /// Component cover forced to contain `MD(B, s) \ W` for the vertex `s` above.
    forced_cover: Option<Vec<VertexId>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Mvc,
    Xvc,
}

/// The solved decomposition of a connected graph.
#[derive(Clone, Debug)]
pub struct Solution {
    tree: Option<DecompositionTree>,
    blocks: Vec<BlockSolution>,
}

pub fn solve(g: &Graph, registry: &Registry) -> Result<Solution> {
    g.require_connected()?;
    if g.vertex_count() == 1 {
        return Ok(Solution { tree: None, blocks: Vec::new() });
    }
    let tree = build_decomposition_tree(g)?;
    solve_tree(tree, registry)
}

/// Solves an already built (possibly re-rooted) decomposition tree.
pub fn solve_tree(tree: DecompositionTree, registry: &Registry) -> Result<Solution> {
    let nb = tree.blocks.len();
    let mut out: Vec<Option<BlockSolution>> = vec![None; nb];
    for &b in tree.top_down.iter().rev() {
        let block = &tree.blocks[b];
        let h = &block.graph;
        let local = |v: VertexId| block.local_id(v).expect("separation vertex lies in its block");
        let children = tree.child_pairs(b);
        let up = tree.upward_separation(b);

        let mut excluded: Vec<VertexId> = children.iter().map(|&(v, _)| local(v)).collect();
        excluded.extend(up.map(local));
        excluded.sort_unstable();
        excluded.dedup();

        let solver = registry.pick(h)?;
        let mut comp = solver.prepare(h, &excluded)?;
        let mvc = comp.mvc_size()?;

        let done = |c: usize| out[c].as_ref().expect("children are solved first");
        let xs: Vec<usize> = children.iter().map(|&(_, c)| done(c).subtree_xvc.unwrap()).collect();
        let sum_x: usize = xs.iter().sum();
        let mut candidates = Vec::with_capacity(children.len() + 1);
        candidates.push(mvc + sum_x);
        for (j, &(v, c)) in children.iter().enumerate() {
            let h_j = comp.xvc_size(local(v))?;
            candidates.push(h_j + done(c).subtree_mvc + sum_x - xs[j]);
        }
        let chosen = (0..candidates.len()).min_by_key(|&j| candidates[j]).unwrap();
        let subtree_mvc = candidates[chosen];

        let to_global = |set: Vec<VertexId>| -> Vec<VertexId> { set.into_iter().map(|x| block.global_id(x)).collect() };
        let chosen_cover = if chosen == 0 {
            to_global(comp.mvc_set()?)
        } else {
            to_global(comp.xvc_set(local(children[chosen - 1].0))?)
        };
        let (subtree_xvc, forced_cover) = match up {
            Some(s) => {
                let set = comp.xvc_set(local(s))?;
                (Some(set.len() + sum_x), Some(to_global(set)))
            }
            None => (None, None),
        };
        out[b] = Some(BlockSolution {
            class: solver.class(),
            children,
            mvc,
            candidates,
            chosen,
            subtree_mvc,
            subtree_xvc,
            chosen_cover,
            forced_cover,
        });
    }
    let blocks = out.into_iter().map(|b| b.expect("every block is reachable from the root")).collect();
    Ok(Solution { tree: Some(tree), blocks })
}

impl Solution {
    pub fn tree(&self) -> Option<&DecompositionTree> {
        self.tree.as_ref()
    }

    pub fn dimension(&self) -> usize {
        self.tree.as_ref().map_or(0, |t| self.blocks[t.root].subtree_mvc)
    }

    /// A minimum strong resolving set, sorted by id.
    pub fn resolving_set(&self) -> Vec<VertexId> {
        match &self.tree {
            Some(t) => self.witness(t.root, Mode::Mvc),
            None => Vec::new(),
        }
    }

    fn witness(&self, block: usize, mode: Mode) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![(block, mode)];
        while let Some((b, mode)) = stack.pop() {
            let s = &self.blocks[b];
            let keep = match mode {
                Mode::Mvc => {
                    out.extend(&s.chosen_cover);
                    s.chosen
                }
                Mode::Xvc => {
                    out.extend(s.forced_cover.as_ref().expect("only non-root blocks are forced"));
                    0
                }
            };
            for (j, &(_, c)) in s.children.iter().enumerate() {
                stack.push((c, if j + 1 == keep { Mode::Mvc } else { Mode::Xvc }));
            }
        }
        out.sort_unstable();
        out
    }

    /// Sizes and sets for the graph hanging below `block`.
    pub fn subtree_answer(&self, block: usize) -> Result<SubtreeAnswer> {
        let s = self.blocks.get(block).ok_or_else(|| Error::UnknownVertex(format!("block {block}")))?;
        Ok(SubtreeAnswer {
            mvc_size: s.subtree_mvc,
            mvc_set: self.witness(block, Mode::Mvc),
            xvc_size: s.subtree_xvc,
            xvc_set: s.subtree_xvc.map(|_| self.witness(block, Mode::Xvc)),
        })
    }

    /// Per-block record, bottom-up.
    pub fn trace(&self, g: &Graph) -> Vec<BlockTrace> {
        let Some(t) = &self.tree else { return Vec::new() };
        t.top_down
            .iter()
            .rev()
            .map(|&b| {
                let s = &self.blocks[b];
                BlockTrace {
                    block: b,
                    vertices: g.sorted_labels(&t.blocks[b].vertices),
                    class: s.class,
                    mvc: s.mvc,
                    candidates: s.candidates.clone(),
                    chosen_j: s.chosen,
                    subtree_mvc: s.subtree_mvc,
                    subtree_xvc: s.subtree_xvc,
                }
            })
            .collect()
    }

    pub fn summary(&self, g: &Graph) -> SolveSummary {
        SolveSummary {
            dimension: self.dimension(),
            resolving_set: g.sorted_labels(&self.resolving_set()),
            trace: self.trace(g),
        }
    }
}

/// Strong metric dimension and a minimum strong resolving set of `g`.
pub fn strong_metric_dimension(g: &Graph, registry: &Registry) -> Result<SolveSummary> {
    Ok(solve(g, registry)?.summary(g))
}

/// Exact reference: minimum vertex cover of the whole strong resolving graph.
pub fn oracle_dimension(g: &Graph, budget: u64) -> Result<crate::cover::CoverResult> {
    let sr = crate::srgraph::strong_resolving_graph(g)?;
    crate::cover::VertexCoverSolver::new(budget).min_cover(&sr)
}
