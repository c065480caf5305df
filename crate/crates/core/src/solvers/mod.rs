//! Per-component restricted vertex cover solvers.
//!
//! For a biconnected component `H`, an excluded set `W` (the separation
//! vertices merged into `H`) and query vertices `q`, a solver answers
//!
//! * `|MVC(SR(H) \ W)|`, and
//! * `|XVC(SR(H) \ W, MD(H, q) \ W)|` for each query,
//!
//! plus witness sets on request. Solvers are tried in registry order; the
//! generic branch-and-bound solver accepts everything and goes last.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cover::{CoverResult, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub mod cograph;
pub mod cotree;
pub mod cycle;
pub mod generic;
pub mod grid;

pub use cograph::CographSolver;
pub use cycle::CycleSolver;
pub use generic::GenericSolver;
pub use grid::GridSolver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentClass {
    Cycle,
    Grid,
    Cograph,
    Generic,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentClass::Cycle => "cycle",
            ComponentClass::Grid => "grid",
            ComponentClass::Cograph => "cograph",
            ComponentClass::Generic => "generic",
        })
    }
}

/// A component with its bookkeeping applied, ready to answer cover queries.
pub trait PreparedComponent {
    fn mvc_size(&mut self) -> Result<usize>;
    fn mvc_set(&mut self) -> Result<Vec<VertexId>>;
    fn xvc_size(&mut self, query: VertexId) -> Result<usize>;
    fn xvc_set(&mut self, query: VertexId) -> Result<Vec<VertexId>>;
}

pub trait ComponentSolver: Send + Sync {
    fn class(&self) -> ComponentClass;
    fn detect(&self, h: &Graph) -> bool;
    fn prepare<'a>(&self, h: &'a Graph, excluded: &[VertexId]) -> Result<Box<dyn PreparedComponent + 'a>>;
}

/// Ordered list of component solvers; the first one whose `detect` accepts
/// a component handles it.
pub struct Registry {
    solvers: Vec<Box<dyn ComponentSolver>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry::with_budget(DEFAULT_BUDGET)
    }
}

impl Registry {
    pub fn new(solvers: Vec<Box<dyn ComponentSolver>>) -> Self {
        Registry { solvers }
    }

    /// Cycle, grid, co-graph, then generic with the given search budget.
    pub fn with_budget(budget: u64) -> Self {
        Registry::new(vec![
            Box::new(CycleSolver),
            Box::new(GridSolver),
            Box::new(CographSolver),
            Box::new(GenericSolver::new(budget)),
        ])
    }

    /// Only the generic solver.
    pub fn generic_only(budget: u64) -> Self {
        Registry::new(vec![Box::new(GenericSolver::new(budget))])
    }

    pub fn solvers(&self) -> &[Box<dyn ComponentSolver>] {
        &self.solvers
    }

    pub fn pick(&self, h: &Graph) -> Result<&dyn ComponentSolver> {
        self.solvers.iter().find(|s| s.detect(h)).map(|s| s.as_ref()).ok_or(Error::NoSolver)
    }
}

pub fn detect_class(h: &Graph) -> ComponentClass {
    if cycle::cycle_order(h).is_some() {
        ComponentClass::Cycle
    } else if grid::GridLayout::recognize(h).is_some() {
        ComponentClass::Grid
    } else if cotree::build_cotree(h).is_ok() {
        ComponentClass::Cograph
    } else {
        ComponentClass::Generic
    }
}

/// The cover questions asked of one component.
#[derive(Clone, Debug)]
pub struct ComponentQuery<'a> {
    pub component: &'a Graph,
    pub excluded: Vec<VertexId>,
    pub md_queries: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAnswer {
    pub class: ComponentClass,
    pub mvc: CoverResult,
    pub xvc: BTreeMap<VertexId, CoverResult>,
}

/// Answers every question of `query` with witness sets, using the first
/// accepting solver of `registry`.
pub fn solve_component(query: &ComponentQuery<'_>, registry: &Registry) -> Result<ComponentAnswer> {
    let solver = registry.pick(query.component)?;
    let mut prepared = solver.prepare(query.component, &query.excluded)?;
    let mvc = CoverResult::from_vertices(prepared.mvc_set()?);
    debug_assert_eq!(mvc.size, prepared.mvc_size()?);
    let mut xvc = BTreeMap::new();
    for &q in &query.md_queries {
        let cover = CoverResult::from_vertices(prepared.xvc_set(q)?);
        debug_assert_eq!(cover.size, prepared.xvc_size(q)?);
        xvc.insert(q, cover);
    }
    Ok(ComponentAnswer { class: solver.class(), mvc, xvc })
}

/// Membership mask for an excluded set.
pub(crate) fn mask(n: usize, set: &[VertexId]) -> Vec<bool> {
    let mut out = vec![false; n];
    for &v in set {
        out[v] = true;
    }
    out
}
