//! Grid components `P_n x P_m` with `n, m >= 2`.
//!
//! The strong resolving graph of a grid is two disjoint edges joining
//! opposite corners, and every maximally distant set is a set of corners, so
//! all cover questions reduce to counting corner edges.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::{mask, ComponentClass, ComponentSolver, PreparedComponent};

pub struct GridSolver;

/// Grid coordinates recovered from an unlabelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridLayout {
    pub rows: usize,
    pub cols: usize,
    /// `coords[v] = (row, col)`, 0-based.
    pub coords: Vec<(usize, usize)>,
    /// `at[row * cols + col]` is the vertex at that position.
    at: Vec<VertexId>,
}

impl GridLayout {
    /// Recognises `h` as a grid. The corner with the smallest id lands on
    /// `(0, 0)` and the smaller-id corner adjacent along the boundary on row 0.
    pub fn recognize(h: &Graph) -> Option<GridLayout> {
        let n = h.vertex_count();
        if n < 4 {
            return None;
        }
        let corners: Vec<VertexId> = h.vertices().filter(|&v| h.degree(v) == 2).collect();
        if corners.len() != 4 || h.vertices().any(|v| h.degree(v) < 2 || h.degree(v) > 4) {
            return None;
        }
        let c = corners[0];
        let dc = h.bfs(c);
        if corners.iter().any(|&x| dc.get(x).is_none()) {
            return None;
        }
        let far = *corners[1..].iter().max_by_key(|&&x| (dc[x], std::cmp::Reverse(x)))?;
        let others: Vec<VertexId> = corners[1..].iter().copied().filter(|&x| x != far).collect();
        let (a, b) = (others[0].min(others[1]), others[0].max(others[1]));
        let cols = dc[a] as usize + 1;
        let rows = dc[b] as usize + 1;
        if rows < 2 || cols < 2 || rows * cols != n || dc[far] as usize != rows + cols - 2 {
            return None;
        }
        if h.edge_count() != 2 * rows * cols - rows - cols {
            return None;
        }
        let da = h.bfs(a);
        let mut coords = vec![(0, 0); n];
        let mut at = vec![usize::MAX; n];
        for v in h.vertices() {
            let (x, y) = (dc.get(v)? as usize, da.get(v)? as usize);
            let twice = (x + cols - 1).checked_sub(y)?;
            if twice % 2 != 0 {
                return None;
            }
            let j = twice / 2;
            let i = x.checked_sub(j)?;
            if i >= rows || j >= cols || at[i * cols + j] != usize::MAX {
                return None;
            }
            coords[v] = (i, j);
            at[i * cols + j] = v;
        }
        for (u, v) in h.edges() {
            let ((i1, j1), (i2, j2)) = (coords[u], coords[v]);
            if i1.abs_diff(i2) + j1.abs_diff(j2) != 1 {
                return None;
            }
        }
        Some(GridLayout { rows, cols, coords, at })
    }

    pub fn vertex_at(&self, row: usize, col: usize) -> VertexId {
        self.at[row * self.cols + col]
    }

    /// The two strong resolving edges, each as `(smaller id, larger id)`.
    pub fn sr_edges(&self) -> [(VertexId, VertexId); 2] {
        let (r, c) = (self.rows - 1, self.cols - 1);
        let e = |x: VertexId, y: VertexId| (x.min(y), x.max(y));
        [e(self.vertex_at(0, 0), self.vertex_at(r, c)), e(self.vertex_at(0, c), self.vertex_at(r, 0))]
    }

    /// `MD(H, v)`: one corner for a corner, two for a border vertex, four
    /// for an interior vertex.
    pub fn md_set(&self, v: VertexId) -> Vec<VertexId> {
        let (i, j) = self.coords[v];
        let far = |x: usize, len: usize| -> Vec<usize> {
            if x == 0 {
                vec![len - 1]
            } else if x == len - 1 {
                vec![0]
            } else {
                vec![0, len - 1]
            }
        };
        let mut out = Vec::with_capacity(4);
        for r in far(i, self.rows) {
            for c in far(j, self.cols) {
                out.push(self.vertex_at(r, c));
            }
        }
        out.sort_unstable();
        out
    }
}

pub struct PreparedGrid {
    layout: GridLayout,
    excluded: Vec<bool>,
    /// SR edges with no excluded endpoint.
    live: Vec<(VertexId, VertexId)>,
}

impl PreparedGrid {
    pub fn new(h: &Graph, excluded: &[VertexId]) -> Result<Self> {
        let layout = GridLayout::recognize(h).ok_or(Error::NotAGrid)?;
        let excluded = mask(h.vertex_count(), excluded);
        let live = layout.sr_edges().into_iter().filter(|&(x, y)| !excluded[x] && !excluded[y]).collect();
        Ok(PreparedGrid { layout, excluded, live })
    }

    fn forced(&self, q: VertexId) -> Result<Vec<VertexId>> {
        if q >= self.excluded.len() {
            return Err(Error::UnknownVertex(format!("#{q}")));
        }
        Ok(self.layout.md_set(q).into_iter().filter(|&x| !self.excluded[x]).collect())
    }
}

impl PreparedComponent for PreparedGrid {
    fn mvc_size(&mut self) -> Result<usize> {
        Ok(self.live.len())
    }

    fn mvc_set(&mut self) -> Result<Vec<VertexId>> {
        Ok(self.live.iter().map(|&(x, _)| x).collect())
    }

    fn xvc_size(&mut self, q: VertexId) -> Result<usize> {
        self.xvc_set(q).map(|s| s.len())
    }

    fn xvc_set(&mut self, q: VertexId) -> Result<Vec<VertexId>> {
        let mut out = self.forced(q)?;
        for &(x, y) in &self.live {
            if !out.contains(&x) && !out.contains(&y) {
                out.push(x);
            }
        }
        Ok(out)
    }
}

impl ComponentSolver for GridSolver {
    fn class(&self) -> ComponentClass {
        ComponentClass::Grid
    }

    fn detect(&self, h: &Graph) -> bool {
        GridLayout::recognize(h).is_some()
    }

    fn prepare<'a>(&self, h: &'a Graph, excluded: &[VertexId]) -> Result<Box<dyn PreparedComponent + 'a>> {
        Ok(Box::new(PreparedGrid::new(h, excluded)?))
    }
}
