//! Small worked examples for each public operation.

use strongdim::composition::merge;
use strongdim::cover::{min_vertex_cover, min_vertex_cover_containing};
use strongdim::decomposition::{biconnected_components, build_decomposition_tree};
use strongdim::frame::strong_metric_dimension;
use strongdim::resolver::{is_strong_resolving_set, strongly_resolves};
use strongdim::solvers::cograph::PreparedCograph;
use strongdim::solvers::cotree::{build_cotree, sr_cotree, NodeKind};
use strongdim::solvers::grid::GridLayout;
use strongdim::solvers::{detect_class, solve_component, ComponentClass, ComponentQuery, GenericSolver, ComponentSolver, Registry};
use strongdim::srgraph::{is_mutually_maximally_distant, maximally_distant_set, strong_resolving_graph};
use strongdim::{fixtures, Error, Graph, VertexId};

fn ids(g: &Graph, labels: &[&str]) -> Vec<VertexId> {
    let mut v: Vec<_> = labels.iter().map(|l| g.id(l).unwrap()).collect();
    v.sort_unstable();
    v
}

fn abc() -> Graph {
    Graph::from_edge_list(&[("a", "b"), ("b", "c")]).unwrap()
}

#[test]
fn building_graphs() {
    let g = Graph::from_edge_list(&[("a", "b")]).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    let g = Graph::from_edge_list(&[("a", "b"), ("b", "a")]).unwrap();
    assert_eq!(g.edge_count(), 1);
    assert_eq!(Graph::from_edge_list(&[("a", "a")]).unwrap_err(), Error::SelfLoop("a".into()));
}

#[test]
fn bfs_and_connectivity() {
    let g = abc();
    let d = g.bfs_distances(g.id("a").unwrap()).unwrap();
    assert_eq!([d.get(0), d.get(1), d.get(2)], [Some(0), Some(1), Some(2)]);

    let k3 = fixtures::complete(3);
    let d = k3.bfs_distances(1).unwrap();
    assert_eq!([d.get(0), d.get(1), d.get(2)], [Some(1), Some(0), Some(1)]);

    let two = Graph::from_edge_list(&[("a", "b"), ("c", "d")]).unwrap();
    let d = two.bfs_distances(two.id("a").unwrap()).unwrap();
    assert_eq!(d.get(two.id("b").unwrap()), Some(1));
    assert_eq!(d.get(two.id("c").unwrap()), None);
    assert_eq!(d.get(two.id("d").unwrap()), None);

    assert!(g.is_connected());
    assert!(!two.is_connected());
    let mut b = strongdim::GraphBuilder::new();
    b.add_vertex("solo");
    assert!(b.build().is_connected());
}

#[test]
fn maximally_distant_vertices() {
    let g = abc();
    assert_eq!(maximally_distant_set(&g, 0).unwrap(), ids(&g, &["c"]));
    let c6 = fixtures::cycle(6);
    assert_eq!(maximally_distant_set(&c6, 0).unwrap(), ids(&c6, &["x3"]));
    let c5 = fixtures::cycle(5);
    assert_eq!(maximally_distant_set(&c5, 0).unwrap(), ids(&c5, &["x2", "x3"]));
    let j = fixtures::composed_example();
    let l = j.id("l").unwrap();
    assert_eq!(maximally_distant_set(&j, l).unwrap(), ids(&j, &["a", "o", "e", "g", "t", "s", "r"]));

    assert!(is_mutually_maximally_distant(&g, 0, 2).unwrap());
    assert!(!is_mutually_maximally_distant(&g, 0, 1).unwrap());
    let k3 = fixtures::complete(3);
    assert!(is_mutually_maximally_distant(&k3, 0, 2).unwrap());
}

#[test]
fn strong_resolving_graphs_of_standard_families() {
    for (r, c) in [(2, 2), (3, 5), (4, 6)] {
        let g = fixtures::grid(r, c);
        let sr = strong_resolving_graph(&g).unwrap();
        let norm = |(a, b): (String, String)| if a < b { (a, b) } else { (b, a) };
        let mut got: Vec<_> = sr.labelled_edges().into_iter().map(norm).collect();
        got.sort();
        let corner = |i: usize, j: usize| format!("x{i}_{j}");
        let mut want: Vec<_> = [(corner(1, 1), corner(r, c)), (corner(1, c), corner(r, 1))].into_iter().map(norm).collect();
        want.sort();
        assert_eq!(got, want);
    }
    let sr6 = strong_resolving_graph(&fixtures::cycle(6)).unwrap();
    assert_eq!(sr6.edge_count(), 3);
    assert!(sr6.vertices().all(|v| sr6.degree(v) == 1));
    let sr5 = strong_resolving_graph(&fixtures::cycle(5)).unwrap();
    assert_eq!(sr5.edge_count(), 5);
    assert!(sr5.is_connected() && sr5.vertices().all(|v| sr5.degree(v) == 2));
}

#[test]
fn vertex_covers() {
    let g = abc();
    let c = min_vertex_cover(&g).unwrap();
    assert_eq!((c.size, c.vertices), (1, ids(&g, &["b"])));
    assert_eq!(min_vertex_cover(&fixtures::cycle(5)).unwrap().size, 3);
    let mut b = strongdim::GraphBuilder::new();
    b.add_vertex("a");
    b.add_vertex("b");
    assert_eq!(min_vertex_cover(&b.build()).unwrap().size, 0);

    let x = min_vertex_cover_containing(&g, &[0]).unwrap();
    assert_eq!(x.size, 2);
    assert!(x.vertices.contains(&0));
    let all: Vec<_> = g.vertices().collect();
    assert_eq!(min_vertex_cover_containing(&g, &all).unwrap().vertices, all);
}

#[test]
fn block_decomposition() {
    let g = Graph::from_edge_list(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]).unwrap();
    let bc = biconnected_components(&g).unwrap();
    let mut sets: Vec<_> = bc.blocks.iter().map(|b| g.sorted_labels(&b.vertices)).collect();
    sets.sort();
    assert_eq!(sets, vec![vec!["a", "b", "c"], vec!["c", "d"]]);
    assert_eq!(bc.separation_vertices, ids(&g, &["c"]));

    let edge = Graph::from_edge_list(&[("a", "b")]).unwrap();
    let bc = biconnected_components(&edge).unwrap();
    assert_eq!((bc.blocks.len(), bc.separation_vertices.len()), (1, 0));

    let bowtie = fixtures::bowtie();
    let bc = biconnected_components(&bowtie).unwrap();
    assert_eq!(bc.blocks.len(), 2);
    assert_eq!(bc.separation_vertices, ids(&bowtie, &["v"]));

    let t = build_decomposition_tree(&fixtures::cycle(7)).unwrap();
    assert_eq!((t.blocks.len(), t.separations.len(), t.root), (1, 0, 0));
    let t = build_decomposition_tree(&bowtie).unwrap();
    assert_eq!((t.blocks.len(), t.separations.len(), t.tree_edges().len()), (2, 1, 2));
}

#[test]
fn merging_graphs() {
    let child = Graph::from_edge_list(&[("a", "u")]).unwrap();
    let host = Graph::from_edge_list(&[("v", "b")]).unwrap();
    let j = merge(&[(child, 1)], &host, &[0]).unwrap();
    assert_eq!(j.vertex_count(), 3);
    assert_eq!(j.edge_count(), 2);
    // the merged vertex keeps the host label and sits in the middle
    let v = j.id("v").unwrap();
    assert_eq!(j.degree(v), 2);

    let t1 = Graph::from_edge_list(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
    let t2 = Graph::from_edge_list(&[("v", "x"), ("x", "y"), ("y", "v")]).unwrap();
    let bow = merge(&[(t1, 0)], &t2, &[0]).unwrap();
    assert_eq!((bow.vertex_count(), bow.edge_count()), (5, 6));
    assert_eq!(biconnected_components(&bow).unwrap().separation_vertices.len(), 1);
}

#[test]
fn whole_graph_dimension() {
    let reg = Registry::default();
    let p3 = strong_metric_dimension(&abc(), &reg).unwrap();
    assert_eq!(p3.dimension, 1);
    assert!(p3.resolving_set == ["a"] || p3.resolving_set == ["c"]);
    assert_eq!(strong_metric_dimension(&fixtures::star(3), &reg).unwrap().dimension, 2);
    let bow = fixtures::bowtie();
    assert_eq!(
        strong_metric_dimension(&bow, &reg).unwrap().dimension,
        min_vertex_cover(&strong_resolving_graph(&bow).unwrap()).unwrap().size
    );
    assert_eq!(strong_metric_dimension(&fixtures::eight_vertex_example(), &reg).unwrap().dimension, 3);
}

#[test]
fn single_component_questions() {
    let reg = Registry::default();
    let c6 = fixtures::cycle(6);
    let a = solve_component(&ComponentQuery { component: &c6, excluded: vec![], md_queries: vec![0] }, &reg).unwrap();
    assert_eq!((a.class, a.mvc.size, a.xvc[&0].size), (ComponentClass::Cycle, 3, 3));

    let k2 = Graph::from_edge_list(&[("a", "b")]).unwrap();
    let a = solve_component(&ComponentQuery { component: &k2, excluded: vec![1], md_queries: vec![1] }, &reg).unwrap();
    assert_eq!(a.mvc.size, 0);
    assert_eq!(a.xvc[&1].vertices, vec![0]);

    let g = fixtures::grid(3, 3);
    let centre = g.id("x2_2").unwrap();
    let a = solve_component(&ComponentQuery { component: &g, excluded: vec![], md_queries: vec![centre] }, &reg).unwrap();
    assert_eq!((a.class, a.mvc.size, a.xvc[&centre].size), (ComponentClass::Grid, 2, 4));

    let c5 = fixtures::cycle(5);
    let a = solve_component(&ComponentQuery { component: &c5, excluded: vec![0], md_queries: vec![0] }, &reg).unwrap();
    let oracle = Registry::generic_only(strongdim::cover::DEFAULT_BUDGET);
    let b = solve_component(&ComponentQuery { component: &c5, excluded: vec![0], md_queries: vec![0] }, &oracle).unwrap();
    assert_eq!(a.mvc.size, 2);
    assert_eq!(a.xvc[&0].size, b.xvc[&0].size);
}

#[test]
fn class_detection() {
    assert_eq!(detect_class(&fixtures::cycle(7)), ComponentClass::Cycle);
    assert_eq!(detect_class(&fixtures::grid(3, 4)), ComponentClass::Grid);
    assert_eq!(detect_class(&fixtures::path(4)), ComponentClass::Generic);
}

#[test]
fn grid_maximally_distant_corners() {
    let g = fixtures::grid(4, 6);
    let l = GridLayout::recognize(&g).unwrap();
    let inner = g.id("x2_3").unwrap();
    assert_eq!(l.md_set(inner), ids(&g, &["x1_1", "x1_6", "x4_1", "x4_6"]));
    let side = g.id("x3_6").unwrap();
    assert_eq!(l.md_set(side), ids(&g, &["x1_1", "x4_1"]));
    for q in g.vertices() {
        assert_eq!(l.md_set(q), maximally_distant_set(&g, q).unwrap());
    }
}

#[test]
fn cotrees() {
    let k3 = fixtures::complete(3);
    let t = build_cotree(&k3).unwrap();
    assert_eq!(t.kind(t.root), NodeKind::Join);
    assert_eq!(t.children(t.root).len(), 3);

    let mut b = strongdim::GraphBuilder::new();
    for l in ["a", "b", "c"] {
        b.add_vertex(l);
    }
    let empty = b.build();
    let t = build_cotree(&empty).unwrap();
    assert_eq!(t.kind(t.root), NodeKind::Union);
    assert_eq!(t.children(t.root).len(), 3);

    assert!(matches!(build_cotree(&fixtures::path(4)), Err(Error::NotACograph(_))));

    for k in 2..=6 {
        let kk = fixtures::complete(k);
        let sr = sr_cotree(&build_cotree(&kk).unwrap());
        assert_eq!(sr.kind(sr.root), NodeKind::Union);
        let kids = sr.children(sr.root);
        assert_eq!(kids.len(), 1);
        assert_eq!(sr.kind(kids[0]), NodeKind::TwinJoin);
        assert_eq!(sr.children(kids[0]).len(), k);
        assert_eq!(sr.realize(&kk), kk);
        assert_eq!(PreparedCograph::new(&kk, &[]).unwrap().vc(), k - 1);
    }
}

#[test]
fn cograph_queries() {
    let g = fixtures::thirteen_vertex_cograph();
    let p = PreparedCograph::new(&g, &[]).unwrap();
    let all = p.xvc_all();
    for (label, want) in [("a", 12), ("e", 10), ("i", 10)] {
        let w = g.id(label).unwrap();
        assert_eq!(p.xvc_by_climbing(w), want, "{label}");
        assert_eq!(all[w], want, "{label}");
    }
    let excluded = ids(&g, &["a", "b", "h"]);
    let p = PreparedCograph::new(&g, &excluded).unwrap();
    let all = p.xvc_all();
    for (label, want) in [("a", 10), ("e", 7), ("h", 8)] {
        assert_eq!(all[g.id(label).unwrap()], want, "{label}");
    }
}

#[test]
fn generic_components() {
    let solver = GenericSolver::new(strongdim::cover::DEFAULT_BUDGET);
    let k5 = fixtures::complete(5);
    assert_eq!(solver.prepare(&k5, &[]).unwrap().mvc_size().unwrap(), 4);
    let all: Vec<_> = k5.vertices().collect();
    assert_eq!(solver.prepare(&k5, &all[1..]).unwrap().mvc_size().unwrap(), 0);
}

#[test]
fn resolving_checks() {
    let g = abc();
    assert!(strongly_resolves(&g, 0, 1, 2).unwrap());
    let c4 = fixtures::cycle(4);
    assert!(!strongly_resolves(&c4, 0, 1, 3).unwrap());
    assert!(is_strong_resolving_set(&g, &[0]).unwrap());
    assert!(!is_strong_resolving_set(&g, &[1]).unwrap());
}
