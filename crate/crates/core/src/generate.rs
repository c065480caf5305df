//! Seeded random instances: single components of each class, merge tuples,
//! and connected graphs built by gluing components at single vertices.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId};

pub type Rng64 = ChaCha8Rng;

/// Generator for instance `index` of a run seeded with `seed`. Each index
/// gets its own stream, so instance `i` does not depend on how many
/// instances were requested.
pub fn rng_for(seed: u64, index: u64) -> Rng64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn labelled(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_vertex(&format!("v{i}"));
    }
    for &(u, v) in edges {
        b.add_edge_ids(u, v).expect("generators never emit self-loops");
    }
    b.build()
}

pub fn cycle_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn grid_edges(rows: usize, cols: usize) -> Vec<(VertexId, VertexId)> {
    let at = |i: usize, j: usize| i * cols + j;
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                out.push((at(i, j), at(i, j + 1)));
            }
            if i + 1 < rows {
                out.push((at(i, j), at(i + 1, j)));
            }
        }
    }
    out
}

/// A connected co-graph on `n` vertices: random unions and joins of
/// random parts, with a join last.
pub fn random_cograph_edges(rng: &mut impl Rng, n: usize) -> Vec<(VertexId, VertexId)> {
    let mut parts: Vec<Vec<VertexId>> = (0..n).map(|v| vec![v]).collect();
    let mut edges = Vec::new();
    while parts.len() > 1 {
        parts.shuffle(rng);
        let a = parts.pop().unwrap();
        let b = parts.pop().unwrap();
        if parts.is_empty() || rng.gen_bool(0.5) {
            for &x in &a {
                for &y in &b {
                    edges.push((x, y));
                }
            }
        }
        let mut merged = a;
        merged.extend(b);
        parts.push(merged);
    }
    edges
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn random_cograph(rng: &mut impl Rng, n: usize) -> Graph {
    labelled(n, &random_cograph_edges(rng, n))
}

pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    labelled(n, &random_connected_edges(rng, n, p))
}

/// One kind of component with a size range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComponentSpec {
    Cycle { min: usize, max: usize },
    Grid { min_rows: usize, min_cols: usize, max_rows: usize, max_cols: usize },
    Cograph { min: usize, max: usize },
    Random { min: usize, max: usize },
}

impl ComponentSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ComponentSpec::Cycle { .. } => "cycle",
            ComponentSpec::Grid { .. } => "grid",
            ComponentSpec::Cograph { .. } => "cograph",
            ComponentSpec::Random { .. } => "random",
        }
    }

    /// A component drawn from this spec, as `(vertex count, edges)`.
    pub fn draw(&self, rng: &mut impl Rng) -> (usize, Vec<(VertexId, VertexId)>) {
        match *self {
            ComponentSpec::Cycle { min, max } => {
                let n = rng.gen_range(min..=max);
                (n, cycle_edges(n))
            }
            ComponentSpec::Grid { min_rows, min_cols, max_rows, max_cols } => {
                let r = rng.gen_range(min_rows..=max_rows);
                let c = rng.gen_range(min_cols..=max_cols);
                (r * c, grid_edges(r, c))
            }
            ComponentSpec::Cograph { min, max } => {
                let n = rng.gen_range(min..=max);
                (n, random_cograph_edges(rng, n))
            }
            ComponentSpec::Random { min, max } => {
                let n = rng.gen_range(min..=max);
                (n, random_connected_edges(rng, n, 0.3))
            }
        }
    }

    fn min_vertices(&self) -> usize {
        match *self {
            ComponentSpec::Cycle { min, .. } | ComponentSpec::Cograph { min, .. } | ComponentSpec::Random { min, .. } => min,
            ComponentSpec::Grid { min_rows, min_cols, .. } => min_rows * min_cols,
        }
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = |f: &mut fmt::Formatter<'_>, a: usize, b: usize| {
            if a == b {
                write!(f, "{a}")
            } else {
                write!(f, "{a}-{b}")
            }
        };
        match *self {
            ComponentSpec::Grid { min_rows, min_cols, max_rows, max_cols } => {
                if (min_rows, min_cols) == (max_rows, max_cols) {
                    write!(f, "grid:{min_rows}x{min_cols}")
                } else {
                    write!(f, "grid:{min_rows}x{min_cols}-{max_rows}x{max_cols}")
                }
            }
            ComponentSpec::Cycle { min, max } | ComponentSpec::Cograph { min, max } | ComponentSpec::Random { min, max } => {
                write!(f, "{}:", self.name())?;
                range(f, min, max)
            }
        }
    }
}

fn bad(spec: &str, why: &str) -> Error {
    Error::Parse { line: 0, msg: format!("component spec `{spec}`: {why}") }
}

fn parse_range(spec: &str, s: &str) -> Result<(usize, usize)> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(spec, "expected a number"));
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(bad(spec, "empty range"));
    }
    Ok((a, b))
}

fn parse_dims(spec: &str, s: &str) -> Result<(usize, usize)> {
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(|| bad(spec, "expected RxC"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(spec, "expected a number"));
    Ok((num(r)?, num(c)?))
}

impl FromStr for ComponentSpec {
    type Err = Error;

    /// `cycle:N`, `cycle:A-B`, `grid:RxC`, `grid:RxC-RxC`, `cograph:N`,
    /// `cograph:A-B`, `random:N`, `random:A-B`.
    fn from_str(spec: &str) -> Result<Self> {
        let (kind, size) = spec.split_once(':').ok_or_else(|| bad(spec, "expected kind:size"))?;
        let out = match kind.trim() {
            "cycle" => {
                let (min, max) = parse_range(spec, size)?;
                if min < 3 {
                    return Err(bad(spec, "cycles need at least 3 vertices"));
                }
                ComponentSpec::Cycle { min, max }
            }
            "grid" => {
                let (lo, hi) = match size.split_once('-') {
                    Some((a, b)) => (parse_dims(spec, a)?, parse_dims(spec, b)?),
                    None => {
                        let d = parse_dims(spec, size)?;
                        (d, d)
                    }
                };
                if lo.0 < 2 || lo.1 < 2 || lo.0 > hi.0 || lo.1 > hi.1 {
                    return Err(bad(spec, "grids need 2 <= rows, cols and a non-empty range"));
                }
                ComponentSpec::Grid { min_rows: lo.0, min_cols: lo.1, max_rows: hi.0, max_cols: hi.1 }
            }
            "cograph" | "random" => {
                let (min, max) = parse_range(spec, size)?;
                if min < 2 {
                    return Err(bad(spec, "components need at least 2 vertices"));
                }
                if kind.trim() == "cograph" {
                    ComponentSpec::Cograph { min, max }
                } else {
                    ComponentSpec::Random { min, max }
                }
            }
            _ => return Err(bad(spec, "unknown kind")),
        };
        Ok(out)
    }
}

/// Parses a comma-separated list of component specs.
pub fn parse_specs(list: &str) -> Result<Vec<ComponentSpec>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorConfig {
    pub components: Vec<ComponentSpec>,
    pub max_components: usize,
    pub max_vertices: usize,
}

impl Default for GeneratorConfig {
    /// Small mixed instances: cycles of 3 to 9 vertices, grids up to 3x3,
    /// co-graphs up to 8 and random graphs up to 7 vertices, at most 6
    /// components and 40 vertices.
    fn default() -> Self {
        GeneratorConfig {
            components: vec![
                ComponentSpec::Cycle { min: 3, max: 9 },
                ComponentSpec::Grid { min_rows: 2, min_cols: 2, max_rows: 3, max_cols: 3 },
                ComponentSpec::Cograph { min: 2, max: 8 },
                ComponentSpec::Random { min: 2, max: 7 },
            ],
            max_components: 6,
            max_vertices: 40,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentMeta {
    pub kind: &'static str,
    /// Labels of the component's vertices in the instance.
    pub vertices: Vec<String>,
    /// Vertex shared with the earlier part of the instance.
    pub attached_at: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceMeta {
    pub seed: u64,
    pub index: u64,
    pub vertices: usize,
    pub edges: usize,
    pub components: Vec<ComponentMeta>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub meta: InstanceMeta,
}

/// Glues drawn components one after another, each at a uniformly random
/// vertex of what has been built so far.
struct Gluer {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    components: Vec<(&'static str, Vec<VertexId>, Option<VertexId>)>,
}

impl Gluer {
    fn new() -> Self {
        Gluer { n: 0, edges: Vec::new(), components: Vec::new() }
    }

    fn add(&mut self, rng: &mut impl Rng, kind: &'static str, size: usize, edges: &[(VertexId, VertexId)]) {
        let (attach, local) = if self.n == 0 {
            (None, usize::MAX)
        } else {
            (Some(rng.gen_range(0..self.n)), rng.gen_range(0..size))
        };
        let mut map = Vec::with_capacity(size);
        for x in 0..size {
            if x == local {
                map.push(attach.unwrap());
            } else {
                map.push(self.n);
                self.n += 1;
            }
        }
        self.edges.extend(edges.iter().map(|&(u, v)| (map[u], map[v])));
        self.components.push((kind, map, attach));
    }

    fn finish(self, seed: u64, index: u64) -> Instance {
        let graph = labelled(self.n, &self.edges);
        let components = self
            .components
            .into_iter()
            .map(|(kind, ids, at)| ComponentMeta {
                kind,
                vertices: ids.iter().map(|&v| graph.label(v).to_owned()).collect(),
                attached_at: at.map(|v| graph.label(v).to_owned()),
            })
            .collect();
        let meta = InstanceMeta { seed, index, vertices: graph.vertex_count(), edges: graph.edge_count(), components };
        Instance { graph, meta }
    }
}

/// Instance `index` of the run seeded with `seed`.
pub fn generate(config: &GeneratorConfig, seed: u64, index: u64) -> Result<Instance> {
    if config.components.is_empty() || config.max_components == 0 {
        return Err(Error::BadComposition("no component kinds to draw from".into()));
    }
    let smallest = config.components.iter().map(ComponentSpec::min_vertices).min().unwrap();
    if smallest > config.max_vertices {
        return Err(Error::BadComposition(format!("no component fits in {} vertices", config.max_vertices)));
    }
    let mut rng = rng_for(seed, index);
    let k = rng.gen_range(1..=config.max_components);
    let mut glue = Gluer::new();
    let mut attempts = 0;
    while glue.components.len() < k && attempts < 20 * k {
        attempts += 1;
        let spec = *config.components.choose(&mut rng).unwrap();
        let (size, edges) = spec.draw(&mut rng);
        let grows = if glue.n == 0 { size } else { size - 1 };
        if glue.n + grows > config.max_vertices {
            continue;
        }
        glue.add(&mut rng, spec.name(), size, &edges);
    }
    if glue.n == 0 {
        return Err(Error::BadComposition(format!("no component fits in {} vertices", config.max_vertices)));
    }
    Ok(glue.finish(seed, index))
}

/// A large connected instance of cycles, small grids and co-graphs, every
/// component at most `max_component` vertices, with about `target` vertices.
pub fn generate_scale(seed: u64, target: usize, max_component: usize) -> Instance {
    let mut rng = rng_for(seed, 0);
    let mut glue = Gluer::new();
    let cap = max_component.max(4);
    let grid_side = ((cap as f64).sqrt() as usize).clamp(2, 7);
    while glue.n < target {
        let left = target - glue.n + usize::from(glue.n > 0);
        let room = cap.min(left.max(3));
        let (kind, size, edges) = match rng.gen_range(0..3) {
            0 => {
                let n = rng.gen_range(3..=room.max(3));
                ("cycle", n, cycle_edges(n))
            }
            1 if room >= 4 => {
                let r = rng.gen_range(2..=grid_side);
                let c = rng.gen_range(2..=(room / r).clamp(2, grid_side));
                ("grid", r * c, grid_edges(r, c))
            }
            _ => {
                let n = rng.gen_range(2..=room.clamp(2, 50));
                ("cograph", n, random_cograph_edges(&mut rng, n))
            }
        };
        glue.add(&mut rng, kind, size, &edges);
    }
    glue.finish(seed, 0)
}

/// A random merge tuple: up to `max_children` children and a host drawn
/// from cycles, paths, cliques and random connected graphs of at most 10
/// vertices, with random merge and attachment vertices.
pub fn random_merge_tuple(rng: &mut impl Rng, max_children: usize) -> (Vec<(Graph, VertexId)>, Graph, Vec<VertexId>) {
    let part = |rng: &mut ChaCha8Rng| -> Graph {
        let n = rng.gen_range(2..=10);
        let edges = match rng.gen_range(0..4) {
            0 if n >= 3 => cycle_edges(n),
            1 => (1..n).map(|i| (i - 1, i)).collect(),
            2 => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            _ => random_connected_edges(rng, n, 0.3),
        };
        labelled(n, &edges)
    };
    let mut inner = ChaCha8Rng::seed_from_u64(rng.gen());
    let host = part(&mut inner);
    let k = inner.gen_range(1..=max_children.max(1));
    let mut children = Vec::with_capacity(k);
    let mut attach = Vec::with_capacity(k);
    for _ in 0..k {
        let g = part(&mut inner);
        let u = inner.gen_range(0..g.vertex_count());
        children.push((g, u));
        attach.push(inner.gen_range(0..host.vertex_count()));
    }
    (children, host, attach)
}
