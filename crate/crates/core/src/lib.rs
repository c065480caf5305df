//! Strong metric dimension of undirected graphs.
//!
//! A minimum strong resolving set is a minimum vertex cover of the strong
//! resolving graph. This crate computes it bottom-up over the block-cut tree:
//! each biconnected component answers a handful of restricted vertex cover
//! queries, and the answers are combined at the separation vertices. Cycles,
//! grids and co-graphs get dedicated linear-time component solvers; any
//! other component falls back to exact branch and bound.

pub mod error;
pub mod graph;
pub mod srgraph;
pub mod cover;
pub mod decomposition;
pub mod composition;
pub mod fixtures;
pub mod solvers;
pub mod frame;
pub mod resolver;
pub mod format;
pub mod generate;

pub use error::{Error, Result};
pub use graph::{DistanceVector, Graph, GraphBuilder, VertexId};
