//! Exact minimum vertex cover by branch and bound.
//!
//! The instance is split into connected components first. Each component is
//! searched with bitset rows: degree-0 vertices are dropped, a degree-1
//! vertex forces its neighbour, a greedy maximal matching gives the lower
//! bound, and the branching vertex is the one of maximum degree (smallest
//! label on ties). Either it joins the cover or all of its neighbours do.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    /// Cover members, sorted by id.
    pub vertices: Vec<VertexId>,
    pub size: usize,
}

impl CoverResult {
    pub(crate) fn from_vertices(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let size = vertices.len();
        CoverResult { vertices, size }
    }

    pub fn covers(&self, g: &Graph) -> bool {
        is_vertex_cover(g, &self.vertices)
    }
}

pub fn is_vertex_cover(g: &Graph, set: &[VertexId]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

/// Exact solver with a search-node budget shared by all components of one call.
#[derive(Clone, Copy, Debug)]
pub struct VertexCoverSolver {
    pub budget: u64,
}

impl Default for VertexCoverSolver {
    fn default() -> Self {
        VertexCoverSolver { budget: DEFAULT_BUDGET }
    }
}

pub fn min_vertex_cover(g: &Graph) -> Result<CoverResult> {
    VertexCoverSolver::default().min_cover(g)
}

pub fn min_vertex_cover_containing(g: &Graph, forced: &[VertexId]) -> Result<CoverResult> {
    VertexCoverSolver::default().min_cover_containing(g, forced)
}

impl VertexCoverSolver {
    pub fn new(budget: u64) -> Self {
        VertexCoverSolver { budget }
    }

    pub fn min_cover(&self, g: &Graph) -> Result<CoverResult> {
        let alive = vec![true; g.vertex_count()];
        let mut nodes = 0;
        let cover = self.cover_alive(g, &alive, &mut nodes)?;
        Ok(CoverResult::from_vertices(cover))
    }

    /// Smallest cover containing `forced`: the forced vertices plus a
    /// minimum cover of whatever they leave uncovered.
    pub fn min_cover_containing(&self, g: &Graph, forced: &[VertexId]) -> Result<CoverResult> {
        let mut alive = vec![true; g.vertex_count()];
        for &v in forced {
            g.check_vertex(v)?;
            alive[v] = false;
        }
        let mut nodes = 0;
        let mut cover = self.cover_alive(g, &alive, &mut nodes)?;
        cover.extend_from_slice(forced);
        Ok(CoverResult::from_vertices(cover))
    }

    fn cover_alive(&self, g: &Graph, alive: &[bool], nodes: &mut u64) -> Result<Vec<VertexId>> {
        let rank = g.label_ranks();
        let mut seen = vec![false; g.vertex_count()];
        let mut cover = Vec::new();
        let mut order: Vec<VertexId> = g.vertices().collect();
        order.sort_by_key(|&v| rank[v]);
        for &start in &order {
            if seen[start] || !alive[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in g.neighbors(u) {
                    if alive[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            if comp.len() < 2 {
                continue;
            }
            comp.sort_by_key(|&v| rank[v]);
            let local = solve_component(g, &comp, alive, self.budget, nodes)?;
            cover.extend(local.into_iter().map(|l| comp[l]));
        }
        Ok(cover)
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count_and(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn minus(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

struct Search {
    adj: Vec<Bits>,
    best: Vec<usize>,
    nodes_left: u64,
    budget: u64,
}

/// Local vertex `i` is `comp[i]`; indices already follow label order, so
/// "smallest index" is "smallest label".
fn solve_component(
    g: &Graph,
    comp: &[VertexId],
    alive: &[bool],
    budget: u64,
    nodes: &mut u64,
) -> Result<Vec<usize>> {
    let n = comp.len();
    let mut pos = std::collections::HashMap::with_capacity(n);
    for (i, &v) in comp.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut adj = vec![Bits::empty(n); n];
    for (i, &v) in comp.iter().enumerate() {
        for w in g.neighbors(v) {
            if alive[*w] {
                if let Some(&j) = pos.get(w) {
                    adj[i].insert(j);
                }
            }
        }
    }
    let mut search = Search {
        adj,
        best: (0..n).collect(),
        nodes_left: budget.saturating_sub(*nodes),
        budget,
    };
    let mut chosen = Vec::new();
    search.go(Bits::full(n), &mut chosen)?;
    *nodes = budget - search.nodes_left;
    Ok(search.best)
}

impl Search {
    fn go(&mut self, mut alive: Bits, chosen: &mut Vec<usize>) -> Result<()> {
        if self.nodes_left == 0 {
            return Err(Error::BudgetExceeded(self.budget));
        }
        self.nodes_left -= 1;
        let base = chosen.len();
        self.reduce(&mut alive, chosen);
        if chosen.len() >= self.best.len() {
            chosen.truncate(base);
            return Ok(());
        }
        if alive.is_empty() {
            self.best = chosen.clone();
            chosen.truncate(base);
            return Ok(());
        }
        if chosen.len() + self.matching_bound(&alive) >= self.best.len() {
            chosen.truncate(base);
            return Ok(());
        }

        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        for v in alive.iter() {
            let d = self.adj[v].count_and(&alive);
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }

        let mut without = alive.clone();
        without.remove(pick);
        chosen.push(pick);
        self.go(without, chosen)?;
        chosen.pop();

        let nbrs = self.adj[pick].and(&alive);
        if chosen.len() + (pick_deg as usize) < self.best.len() {
            let mark = chosen.len();
            chosen.extend(nbrs.iter());
            let mut rest = alive;
            rest.minus(&nbrs);
            rest.remove(pick);
            self.go(rest, chosen)?;
            chosen.truncate(mark);
        }
        chosen.truncate(base);
        Ok(())
    }

    /// Drops isolated vertices and resolves degree-1 vertices until neither applies.
    fn reduce(&self, alive: &mut Bits, chosen: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            let snapshot: Vec<usize> = alive.iter().collect();
            for v in snapshot {
                if !alive.contains(v) {
                    continue;
                }
                let nbrs = self.adj[v].and(alive);
                match nbrs.iter().take(2).count() {
                    0 => {
                        alive.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = nbrs.iter().next().unwrap();
                        chosen.push(u);
                        alive.remove(u);
                        alive.remove(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn matching_bound(&self, alive: &Bits) -> usize {
        let mut free = alive.clone();
        let mut size = 0;
        for v in alive.iter() {
            if !free.contains(v) {
                continue;
            }
            if let Some(u) = self.adj[v].and(&free).iter().next() {
                free.remove(u);
                free.remove(v);
                size += 1;
            }
        }
        size
    }
}
