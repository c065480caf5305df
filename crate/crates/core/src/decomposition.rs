//! Biconnected components, separation vertices and the rooted block-cut
//! ("decomposition") tree.
//!
//! The depth-first search is iterative so that path-like inputs with
//! hundreds of thousands of vertices do not overflow the call stack.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// One biconnected component (a bridge counts as a two-vertex component).
#[derive(Clone, Debug)]
pub struct Block {
    /// Global ids, sorted.
    pub vertices: Vec<VertexId>,
    /// Global edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
    /// Induced subgraph; local id `i` is `vertices[i]`.
    pub graph: Graph,
}

impl Block {
    pub fn local_id(&self, global: VertexId) -> Option<VertexId> {
        self.vertices.binary_search(&global).ok()
    }

    pub fn global_id(&self, local: VertexId) -> VertexId {
        self.vertices[local]
    }
}

#[derive(Clone, Debug)]
pub struct BiconnectedComponents {
    pub blocks: Vec<Block>,
    /// Sorted by id.
    pub separation_vertices: Vec<VertexId>,
}

const UNSEEN: usize = usize::MAX;

pub fn biconnected_components(g: &Graph) -> Result<BiconnectedComponents> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(VertexId, VertexId)>> = Vec::new();

    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    while let Some(top) = stack.last_mut() {
        let (v, parent, next) = *top;
        if next < g.degree(v) {
            top.2 += 1;
            let w = g.neighbors(v)[next];
            if disc[w] == UNSEEN {
                edge_stack.push((v, w));
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[v]);
        if low[v] >= disc[parent] {
            let mut block = Vec::new();
            while let Some(e) = edge_stack.pop() {
                block.push(e);
                if e == (parent, v) {
                    break;
                }
            }
            raw_blocks.push(block);
        }
    }

    let mut membership = vec![0usize; n];
    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<_> = raw.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            let mut vertices: Vec<_> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            for &v in &vertices {
                membership[v] += 1;
            }
            let graph = g.induced_subgraph(&vertices);
            Block { vertices, edges, graph }
        })
        .collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let separation_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    Ok(BiconnectedComponents { blocks, separation_vertices })
}

/// Rooted bipartite tree of b-nodes (blocks) and s-nodes (separation vertices).
#[derive(Clone, Debug)]
pub struct DecompositionTree {
    pub blocks: Vec<Block>,
    pub separations: Vec<VertexId>,
    pub root: usize,
    /// For each block, the s-node index above it (`None` for the root).
    pub block_parent: Vec<Option<usize>>,
    /// For each block, the s-node indices below it.
    pub block_children: Vec<Vec<usize>>,
    /// For each s-node, the block above it.
    pub separation_parent: Vec<usize>,
    /// For each s-node, the blocks below it.
    pub separation_children: Vec<Vec<usize>>,
    /// Blocks from the root downwards (breadth first); reversed, it is a
    /// valid bottom-up order.
    pub top_down: Vec<usize>,
}

impl DecompositionTree {
    /// Separation vertex above `block`, if any.
    pub fn upward_separation(&self, block: usize) -> Option<VertexId> {
        self.block_parent[block].map(|s| self.separations[s])
    }

    /// `(separation vertex, child block)` pairs hanging below `block`.
    pub fn child_pairs(&self, block: usize) -> Vec<(VertexId, usize)> {
        self.block_children[block]
            .iter()
            .flat_map(|&s| self.separation_children[s].iter().map(move |&b| (self.separations[s], b)))
            .collect()
    }

    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.separations.len()
    }

    /// Unrooted tree edges `(block, s-node index)`.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        incidences(&self.blocks, &self.separations)
            .into_iter()
            .enumerate()
            .flat_map(|(b, seps)| seps.into_iter().map(move |s| (b, s)))
            .collect()
    }

    /// The same tree re-rooted at another block.
    pub fn rerooted(self, root: usize) -> DecompositionTree {
        assemble(self.blocks, self.separations, root)
    }
}

pub fn build_decomposition_tree(g: &Graph) -> Result<DecompositionTree> {
    let bc = biconnected_components(g)?;
    if bc.blocks.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let smallest = g.vertices().min_by(|&a, &b| g.label(a).cmp(g.label(b))).unwrap();
    let root = (0..bc.blocks.len())
        .filter(|&b| bc.blocks[b].local_id(smallest).is_some())
        .min_by_key(|&b| (bc.blocks[b].vertices.len(), b))
        .unwrap();
    Ok(assemble(bc.blocks, bc.separation_vertices, root))
}

/// For each block, the s-node indices of the separation vertices it contains.
fn incidences(blocks: &[Block], separations: &[VertexId]) -> Vec<Vec<usize>> {
    let span = blocks.iter().filter_map(|b| b.vertices.last()).max().map_or(0, |&v| v + 1);
    let mut sep_index = vec![usize::MAX; span];
    for (s, &v) in separations.iter().enumerate() {
        sep_index[v] = s;
    }
    blocks
        .iter()
        .map(|b| b.vertices.iter().map(|&v| sep_index[v]).filter(|&s| s != usize::MAX).collect())
        .collect()
}

fn assemble(blocks: Vec<Block>, separations: Vec<VertexId>, root: usize) -> DecompositionTree {
    let nb = blocks.len();
    let ns = separations.len();
    let block_seps = incidences(&blocks, &separations);
    let mut sep_blocks: Vec<Vec<usize>> = vec![Vec::new(); ns];
    for (b, seps) in block_seps.iter().enumerate() {
        for &s in seps {
            sep_blocks[s].push(b);
        }
    }
    let mut block_parent = vec![None; nb];
    let mut block_children = vec![Vec::new(); nb];
    let mut separation_parent = vec![usize::MAX; ns];
    let mut separation_children = vec![Vec::new(); ns];
    let mut top_down = vec![root];
    let mut seen_block = vec![false; nb];
    seen_block[root] = true;
    let mut i = 0;
    while i < top_down.len() {
        let b = top_down[i];
        i += 1;
        for &s in &block_seps[b] {
            if Some(s) == block_parent[b] {
                continue;
            }
            block_children[b].push(s);
            separation_parent[s] = b;
            for &c in &sep_blocks[s] {
                if !seen_block[c] {
                    seen_block[c] = true;
                    block_parent[c] = Some(s);
                    separation_children[s].push(c);
                    top_down.push(c);
                }
            }
        }
    }
    DecompositionTree {
        blocks,
        separations,
        root,
        block_parent,
        block_children,
        separation_parent,
        separation_children,
        top_down,
    }
}
