use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use strongdim::fixtures;
use strongdim::format::write_edge_list;
use strongdim::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongdim")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn graph_file(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    write(dir, name, &write_edge_list(g))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sdim_reports_dimension_and_set() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "# path\na b\nb c\n");
    let o = run(&["sdim", s(&p3)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("dimension: 1\n"), "{text}");

    let g8 = graph_file(&dir, "g8.txt", &fixtures::eight_vertex_example());
    let v = json(&["sdim", "--json", s(&g8)]);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["set"].as_array().unwrap().len(), 3);
    for c in v["components"].as_array().unwrap() {
        assert!(["cycle", "grid", "cograph", "generic"].contains(&c["class"].as_str().unwrap()));
        assert!(c["mvc"].is_u64() && c["chosen_j"].is_u64());
        assert_eq!(c.as_object().unwrap().len(), 3);
    }
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 3);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.txt", "");
    assert_eq!(run(&["sdim", s(&empty)]).status.code(), Some(2));
    let bad = write(&dir, "bad.txt", "a b c\n");
    let o = run(&["sdim", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let split = write(&dir, "split.txt", "a b\nc d\n");
    assert_eq!(run(&["sdim", s(&split)]).status.code(), Some(3));
    assert_eq!(run(&["oracle", s(&split)]).status.code(), Some(3));
    let lonely = write(&dir, "lonely.txt", "a b\nv c\n");
    assert_eq!(run(&["decompose", s(&lonely)]).status.code(), Some(3));

    let k8 = graph_file(&dir, "k8.txt", &fixtures::complete(8));
    let o = Command::new(env!("CARGO_BIN_EXE_strongdim")).args(["oracle", s(&k8)]).env("STRONGDIM_VC_BUDGET", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(4));
    // the Petersen graph is left to the budgeted generic search
    let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
    let inner: Vec<_> = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5)).collect();
    let edges: Vec<_> = [outer, spokes, inner].concat();
    let petersen = graph_file(&dir, "petersen.txt", &Graph::from_id_edges(10, &edges).unwrap());
    let o = Command::new(env!("CARGO_BIN_EXE_strongdim")).args(["sdim", s(&petersen)]).env("STRONGDIM_VC_BUDGET", "1").output().unwrap();
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_strongdim")).args(["sdim", s(&k8)]).env("STRONGDIM_VC_BUDGET", "lots").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_agrees_with_sdim_on_fixtures() {
    let dir = TempDir::new().unwrap();
    let graphs = [
        fixtures::eight_vertex_example(),
        fixtures::composed_example(),
        fixtures::seven_block_example(),
        fixtures::thirteen_vertex_cograph(),
        fixtures::bowtie(),
        fixtures::grid(3, 4),
        fixtures::star(4),
        fixtures::cycle(7),
        fixtures::complete(5),
    ];
    for (i, g) in graphs.iter().enumerate() {
        let p = graph_file(&dir, &format!("g{i}.txt"), g);
        let a = json(&["sdim", "--json", s(&p)]);
        let b = json(&["oracle", "--json", s(&p)]);
        assert_eq!(a["dimension"], b["dimension"], "fixture {i}");
    }
    let k5 = graph_file(&dir, "k5.txt", &fixtures::complete(5));
    assert_eq!(json(&["oracle", "--json", s(&k5)])["dimension"], 4);
    let c7 = graph_file(&dir, "c7.txt", &fixtures::cycle(7));
    assert_eq!(json(&["oracle", "--json", s(&c7)])["dimension"], 4);
}

#[test]
fn verify_reports_ok_or_a_witness_pair() {
    let dir = TempDir::new().unwrap();
    let g8 = graph_file(&dir, "g8.txt", &fixtures::eight_vertex_example());
    let o = run(&["verify", s(&g8), "a", "b", "g"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "OK\n");

    let c4 = graph_file(&dir, "c4.txt", &fixtures::cycle(4));
    let o = run(&["verify", s(&c4), "x0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL: "), "{}", stdout(&o));

    let all: Vec<String> = (0..4).map(|i| format!("x{i}")).collect();
    let mut args = vec!["verify", s(&c4)];
    args.extend(all.iter().map(String::as_str));
    assert!(run(&args).status.success());

    assert_eq!(run(&["verify", s(&c4), "nope"]).status.code(), Some(1));
}

#[test]
fn dot_exports() {
    let dir = TempDir::new().unwrap();
    let c6 = graph_file(&dir, "c6.txt", &fixtures::cycle(6));
    let dot = stdout(&run(&["srgraph", s(&c6)]));
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 3);
    let grid = graph_file(&dir, "grid.txt", &fixtures::grid(3, 4));
    assert_eq!(stdout(&run(&["srgraph", s(&grid)])).matches(" -- ").count(), 2);

    let bow = graph_file(&dir, "bow.txt", &fixtures::bowtie());
    let dot = stdout(&run(&["decompose", s(&bow)]));
    assert_eq!(dot.matches("shape=box").count(), 2);
    assert_eq!(dot.matches("shape=circle").count(), 1);
    assert_eq!(dot.matches(" -- ").count(), 2);
}

#[test]
fn generate_is_reproducible_and_solvable() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let spec = "cycle:3-7,grid:2x2-3x3,cograph:2-6,random:2-5";
    for dir in [&a, &b] {
        let o = run(&["generate", "--components", spec, "--count", "5", "--seed", "42", "--out", s(dir.path())]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    for i in 0..5 {
        for ext in ["txt", "json"] {
            let name = format!("instance-{i}.{ext}");
            assert_eq!(fs::read(a.path().join(&name)).unwrap(), fs::read(b.path().join(&name)).unwrap(), "{name}");
        }
        let path = a.path().join(format!("instance-{i}.txt"));
        let g = strongdim::format::parse_edge_list(&fs::read_to_string(&path).unwrap()).unwrap();
        assert!(g.is_connected());
        let meta: Value = serde_json::from_str(&fs::read_to_string(a.path().join(format!("instance-{i}.json"))).unwrap()).unwrap();
        assert_eq!(meta["vertices"], g.vertex_count());
        assert_eq!(meta["seed"], 42);
        assert!(!meta["components"].as_array().unwrap().is_empty());
        let x = json(&["sdim", "--json", s(&path)]);
        let y = json(&["oracle", "--json", s(&path)]);
        assert_eq!(x["dimension"], y["dimension"]);
    }

    let c = TempDir::new().unwrap();
    run(&["generate", "--components", spec, "--count", "5", "--seed", "43", "--out", s(c.path())]);
    let differs = (0..5).any(|i| {
        let name = format!("instance-{i}.txt");
        fs::read(a.path().join(&name)).unwrap() != fs::read(c.path().join(&name)).unwrap()
    });
    assert!(differs);

    let o = run(&["generate", "--components", "hexagon:6", "--out", s(c.path())]);
    assert!(!o.status.success());
}
