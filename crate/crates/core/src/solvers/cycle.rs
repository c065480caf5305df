//! Cycle components.
//!
//! For a cycle `x_0 .. x_{n-1}` the strong resolving graph is a perfect
//! matching `x_i ~ x_{i+n/2}` when `n` is even and the cycle
//! `x_i ~ x_{i+floor(n/2)}` when `n` is odd. Removing the excluded vertices
//! leaves disjoint paths (or the whole odd cycle when nothing is excluded),
//! so every cover size is a sum of `floor(l/2)` / `ceil(l/2)` terms and a
//! query only re-sums the one or two pieces its forced vertices fall on.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

use super::{mask, ComponentClass, ComponentSolver, PreparedComponent};

pub struct CycleSolver;

/// Vertices in cycle order starting at id 0, or `None` if `h` is not a cycle.
pub fn cycle_order(h: &Graph) -> Option<Vec<VertexId>> {
    let n = h.vertex_count();
    if n < 3 || h.edge_count() != n || h.vertices().any(|v| h.degree(v) != 2) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        order.push(cur);
        let nbrs = h.neighbors(cur);
        let next = if nbrs[0] != prev { nbrs[0] } else { nbrs[1] };
        prev = cur;
        cur = next;
        if cur == 0 {
            break;
        }
        if order.len() > n {
            return None;
        }
    }
    (order.len() == n).then_some(order)
}

/// Maximally distant positions from position `i` on an `n`-cycle.
pub fn cycle_md_positions(n: usize, i: usize) -> Vec<usize> {
    if n % 2 == 0 {
        vec![(i + n / 2) % n]
    } else {
        let j = (i + n / 2) % n;
        vec![j, (j + 1) % n]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PieceKind {
    Path,
    Cycle,
}

#[derive(Debug)]
struct Piece {
    kind: PieceKind,
    vertices: Vec<VertexId>,
}

impl Piece {
    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn free_cost(&self) -> usize {
        match self.kind {
            PieceKind::Path => self.len() / 2,
            PieceKind::Cycle => self.len().div_ceil(2),
        }
    }

    /// Free stretches left once the sorted `forced` positions join the cover,
    /// as `(start, length)` pairs; for a cycle, starts wrap around.
    fn gaps(&self, forced: &[usize]) -> Vec<(usize, usize)> {
        let l = self.len();
        if forced.is_empty() {
            return vec![(0, l)];
        }
        let mut out = Vec::new();
        match self.kind {
            PieceKind::Path => {
                let mut start = 0;
                for &p in forced {
                    out.push((start, p - start));
                    start = p + 1;
                }
                out.push((start, l - start));
            }
            PieceKind::Cycle => {
                for (k, &p) in forced.iter().enumerate() {
                    let next = if k + 1 < forced.len() { forced[k + 1] } else { forced[0] + l };
                    out.push((p + 1, next - p - 1));
                }
            }
        }
        out
    }

    fn forced_cost(&self, forced: &[usize]) -> usize {
        forced.len() + self.gaps(forced).iter().map(|&(_, len)| len / 2).sum::<usize>()
    }

    fn cover(&self, forced: &[usize]) -> Vec<VertexId> {
        let l = self.len();
        let mut out: Vec<VertexId> = forced.iter().map(|&p| self.vertices[p]).collect();
        if forced.is_empty() && self.kind == PieceKind::Cycle {
            out.extend((0..l).step_by(2).map(|p| self.vertices[p]));
            return out;
        }
        for (start, len) in self.gaps(forced) {
            out.extend((1..len).step_by(2).map(|k| self.vertices[(start + k) % l]));
        }
        out
    }
}

pub struct PreparedCycle {
    n: usize,
    order: Vec<VertexId>,
    position: Vec<usize>,
    excluded: Vec<bool>,
    pieces: Vec<Piece>,
    /// `(piece, index within piece)` for every non-excluded vertex.
    slot: Vec<Option<(usize, usize)>>,
    mvc: usize,
}

impl PreparedCycle {
    pub fn new(h: &Graph, excluded: &[VertexId]) -> Result<Self> {
        let order = cycle_order(h).ok_or(Error::NotACycle)?;
        let n = order.len();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let excluded = mask(n, excluded);

        // SR(H) as a sequence of positions in which consecutive entries are adjacent.
        let step = n / 2;
        let sequences: Vec<(PieceKind, Vec<usize>)> = if n % 2 == 0 {
            (0..step).map(|i| (PieceKind::Path, vec![i, i + step])).collect()
        } else {
            vec![(PieceKind::Cycle, (0..n).map(|t| t * step % n).collect())]
        };

        let mut pieces = Vec::new();
        for (kind, seq) in sequences {
            let alive = |p: usize| !excluded[order[p]];
            if kind == PieceKind::Cycle && seq.iter().all(|&p| alive(p)) {
                pieces.push(Piece { kind, vertices: seq.iter().map(|&p| order[p]).collect() });
                continue;
            }
            // Rotate a cycle so it starts right after an excluded vertex, then split.
            let start = match kind {
                PieceKind::Cycle => seq.iter().position(|&p| !alive(p)).unwrap() + 1,
                PieceKind::Path => 0,
            };
            let mut run = Vec::new();
            for k in 0..seq.len() {
                let p = seq[(start + k) % seq.len()];
                if alive(p) {
                    run.push(order[p]);
                } else if !run.is_empty() {
                    pieces.push(Piece { kind: PieceKind::Path, vertices: std::mem::take(&mut run) });
                }
            }
            if !run.is_empty() {
                pieces.push(Piece { kind: PieceKind::Path, vertices: run });
            }
        }

        let mut slot = vec![None; n];
        for (pi, piece) in pieces.iter().enumerate() {
            for (k, &v) in piece.vertices.iter().enumerate() {
                slot[v] = Some((pi, k));
            }
        }
        let mvc = pieces.iter().map(Piece::free_cost).sum();
        Ok(PreparedCycle { n, order, position, excluded, pieces, slot, mvc })
    }

    /// `MD(H, q) \ W` grouped by piece, positions sorted within each piece.
    fn forced(&self, q: VertexId) -> Result<Vec<(usize, Vec<usize>)>> {
        if q >= self.n {
            return Err(Error::UnknownVertex(format!("#{q}")));
        }
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for p in cycle_md_positions(self.n, self.position[q]) {
            let v = self.order[p];
            if self.excluded[v] {
                continue;
            }
            let (pi, k) = self.slot[v].expect("non-excluded vertices lie on a piece");
            match groups.iter_mut().find(|(g, _)| *g == pi) {
                Some((_, ks)) => ks.push(k),
                None => groups.push((pi, vec![k])),
            }
        }
        for (_, ks) in &mut groups {
            ks.sort_unstable();
            ks.dedup();
        }
        Ok(groups)
    }
}

impl PreparedComponent for PreparedCycle {
    fn mvc_size(&mut self) -> Result<usize> {
        Ok(self.mvc)
    }

    fn mvc_set(&mut self) -> Result<Vec<VertexId>> {
        Ok(self.pieces.iter().flat_map(|p| p.cover(&[])).collect())
    }

    fn xvc_size(&mut self, q: VertexId) -> Result<usize> {
        let mut total = self.mvc;
        for (pi, ks) in self.forced(q)? {
            let piece = &self.pieces[pi];
            total = total - piece.free_cost() + piece.forced_cost(&ks);
        }
        Ok(total)
    }

    fn xvc_set(&mut self, q: VertexId) -> Result<Vec<VertexId>> {
        let groups = self.forced(q)?;
        let mut out = Vec::new();
        for (pi, piece) in self.pieces.iter().enumerate() {
            match groups.iter().find(|(g, _)| *g == pi) {
                Some((_, ks)) => out.extend(piece.cover(ks)),
                None => out.extend(piece.cover(&[])),
            }
        }
        Ok(out)
    }
}

impl ComponentSolver for CycleSolver {
    fn class(&self) -> ComponentClass {
        ComponentClass::Cycle
    }

    fn detect(&self, h: &Graph) -> bool {
        cycle_order(h).is_some()
    }

    fn prepare<'a>(&self, h: &'a Graph, excluded: &[VertexId]) -> Result<Box<dyn PreparedComponent + 'a>> {
        Ok(Box::new(PreparedCycle::new(h, excluded)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_vertex_cover;
    use crate::fixtures;
    use crate::srgraph::{maximally_distant_set, strong_resolving_graph};

    fn ids(g: &Graph, labels: &[&str]) -> Vec<VertexId> {
        labels.iter().map(|l| g.id(l).unwrap()).collect()
    }

    #[test]
    fn not_a_cycle() {
        assert!(cycle_order(&fixtures::path(5)).is_none());
        assert!(PreparedCycle::new(&fixtures::complete(4), &[]).is_err());
        // two disjoint triangles: all degrees 2, |E| = |V|, but not one cycle
        let two = Graph::from_edge_list(&[("a", "b"), ("b", "c"), ("c", "a"), ("d", "e"), ("e", "f"), ("f", "d")]).unwrap();
        assert!(cycle_order(&two).is_none());
    }

    #[test]
    fn md_positions_match_bfs() {
        for n in 3..=15 {
            let g = fixtures::cycle(n);
            let order = cycle_order(&g).unwrap();
            for i in 0..n {
                let mut want: Vec<_> = cycle_md_positions(n, i).into_iter().map(|p| order[p]).collect();
                want.sort_unstable();
                assert_eq!(maximally_distant_set(&g, order[i]).unwrap(), want);
            }
        }
    }

    #[test]
    fn c14_without_three_vertices() {
        let g = fixtures::cycle(14);
        let w = ids(&g, &["x1", "x2", "x6"]);
        let prep = PreparedCycle::new(&g, &w).unwrap();
        let mut lens: Vec<usize> = prep.pieces.iter().map(Piece::len).collect();
        lens.sort_unstable();
        // seven matching edges; x1~x8, x2~x9, x6~x13 lose an endpoint
        assert_eq!(lens, vec![1, 1, 1, 2, 2, 2, 2]);
        let mut p = prep;
        assert_eq!(p.mvc_size().unwrap(), 4);
    }

    #[test]
    fn c15_without_three_vertices_splits_into_paths() {
        let g = fixtures::cycle(15);
        let w = ids(&g, &["x1", "x2", "x6"]);
        let p = PreparedCycle::new(&g, &w).unwrap();
        assert!(p.pieces.iter().all(|piece| piece.kind == PieceKind::Path));
        let mut lens: Vec<usize> = p.pieces.iter().map(Piece::len).collect();
        lens.sort_unstable();
        // SR(C15) runs x0 x7 x14 x6 x13 x5 x12 x4 x11 x3 x10 x2 x9 x1 x8 (x0)
        assert_eq!(lens, vec![1, 4, 7]);
    }

    #[test]
    fn c5_excluding_x0() {
        let g = fixtures::cycle(5);
        let mut p = PreparedCycle::new(&g, &[0]).unwrap();
        assert_eq!(p.mvc_size().unwrap(), 2);
        assert_eq!(p.xvc_size(0).unwrap(), 3);
        let set = p.xvc_set(0).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&2) && set.contains(&3));
    }

    #[test]
    fn sets_are_valid_covers() {
        for n in 3..=12 {
            let g = fixtures::cycle(n);
            let sr = strong_resolving_graph(&g).unwrap();
            for w in [vec![], vec![0], vec![1, n - 1]] {
                let residual = sr.without_vertices(&w);
                let mut p = PreparedCycle::new(&g, &w).unwrap();
                let mvc = p.mvc_set().unwrap();
                assert_eq!(mvc.len(), p.mvc_size().unwrap());
                assert!(is_vertex_cover(&residual, &mvc));
                for q in 0..n {
                    let set = p.xvc_set(q).unwrap();
                    assert_eq!(set.len(), p.xvc_size(q).unwrap(), "C{n} W={w:?} q={q}");
                    assert!(is_vertex_cover(&residual, &set));
                    for m in maximally_distant_set(&g, q).unwrap() {
                        assert!(w.contains(&m) || set.contains(&m));
                    }
                }
            }
        }
    }
}
