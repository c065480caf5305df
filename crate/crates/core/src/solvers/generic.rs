//! Fallback for arbitrary components: build `SR(H) \ W` explicitly and run
//! the exact vertex cover search.

use std::collections::HashMap;

use crate::cover::{CoverResult, VertexCoverSolver};
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::srgraph::{md_from_distances, strong_resolving_graph};

use super::{mask, ComponentClass, ComponentSolver, PreparedComponent};

pub struct GenericSolver {
    budget: u64,
}

impl GenericSolver {
    pub fn new(budget: u64) -> Self {
        GenericSolver { budget }
    }
}

pub struct PreparedGeneric<'a> {
    h: &'a Graph,
    excluded: Vec<bool>,
    residual: Graph,
    solver: VertexCoverSolver,
    mvc: Option<CoverResult>,
    xvc: HashMap<VertexId, CoverResult>,
}

impl<'a> PreparedGeneric<'a> {
    pub fn new(h: &'a Graph, excluded: &[VertexId], budget: u64) -> Result<Self> {
        for &w in excluded {
            h.check_vertex(w)?;
        }
        let residual = strong_resolving_graph(h)?.without_vertices(excluded);
        Ok(PreparedGeneric {
            h,
            excluded: mask(h.vertex_count(), excluded),
            residual,
            solver: VertexCoverSolver::new(budget),
            mvc: None,
            xvc: HashMap::new(),
        })
    }

    fn mvc(&mut self) -> Result<&CoverResult> {
        if self.mvc.is_none() {
            self.mvc = Some(self.solver.min_cover(&self.residual)?);
        }
        Ok(self.mvc.as_ref().unwrap())
    }

    fn xvc(&mut self, q: VertexId) -> Result<&CoverResult> {
        if !self.xvc.contains_key(&q) {
            self.h.check_vertex(q)?;
            let forced: Vec<VertexId> =
                md_from_distances(self.h, &self.h.bfs(q)).into_iter().filter(|&x| !self.excluded[x]).collect();
            let cover = self.solver.min_cover_containing(&self.residual, &forced)?;
            self.xvc.insert(q, cover);
        }
        Ok(&self.xvc[&q])
    }
}

impl PreparedComponent for PreparedGeneric<'_> {
    fn mvc_size(&mut self) -> Result<usize> {
        Ok(self.mvc()?.size)
    }

    fn mvc_set(&mut self) -> Result<Vec<VertexId>> {
        Ok(self.mvc()?.vertices.clone())
    }

    fn xvc_size(&mut self, q: VertexId) -> Result<usize> {
        Ok(self.xvc(q)?.size)
    }

    fn xvc_set(&mut self, q: VertexId) -> Result<Vec<VertexId>> {
        Ok(self.xvc(q)?.vertices.clone())
    }
}

impl ComponentSolver for GenericSolver {
    fn class(&self) -> ComponentClass {
        ComponentClass::Generic
    }

    fn detect(&self, _h: &Graph) -> bool {
        true
    }

    fn prepare<'a>(&self, h: &'a Graph, excluded: &[VertexId]) -> Result<Box<dyn PreparedComponent + 'a>> {
        Ok(Box::new(PreparedGeneric::new(h, excluded, self.budget)?))
    }
}
