use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use strongdim::cover::DEFAULT_BUDGET;
use strongdim::decomposition::build_decomposition_tree;
use strongdim::format::{graph_dot, parse_edge_list, tree_dot, write_edge_list};
use strongdim::frame::{oracle_dimension, strong_metric_dimension};
use strongdim::generate::{generate, parse_specs, GeneratorConfig};
use strongdim::resolver::find_unresolved_pair;
use strongdim::solvers::{ComponentClass, Registry};
use strongdim::srgraph::strong_resolving_graph;
use strongdim::{Error, Graph};

const BUDGET_VAR: &str = "STRONGDIM_VC_BUDGET";

/// Strong metric dimension of connected graphs given as edge lists.
#[derive(Parser)]
#[command(name = "strongdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve by block decomposition and print the dimension and a minimum set.
    Sdim {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Solve by one exact vertex cover of the whole strong resolving graph.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check whether the given vertices form a strong resolving set.
    Verify {
        input: PathBuf,
        #[arg(required = true)]
        set: Vec<String>,
    },
    /// Print the strong resolving graph as DOT.
    Srgraph { input: PathBuf },
    /// Print the block decomposition tree as DOT.
    Decompose { input: PathBuf },
    /// Write random connected instances glued from small components.
    Generate {
        /// Comma-separated kinds, e.g. `cycle:3-9,grid:2x2-3x3,cograph:8,random:2-7`.
        #[arg(long)]
        components: Option<String>,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_components: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Directory for `instance-N.txt` and its `instance-N.json` metadata.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct Report {
    dimension: usize,
    set: Vec<String>,
    components: Vec<ComponentReport>,
}

#[derive(Serialize)]
struct ComponentReport {
    class: ComponentClass,
    mvc: usize,
    chosen_j: usize,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Disconnected => 3,
            Error::BudgetExceeded(_) => 4,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into() }
}

fn budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| fail(format!("{BUDGET_VAR} must be a non-negative integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(format!("{}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn print_report(r: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("report serializes"));
        return;
    }
    println!("dimension: {}", r.dimension);
    println!("set: {}", r.set.join(" "));
}

fn sdim(input: &Path, json: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let summary = strong_metric_dimension(&g, &Registry::with_budget(budget()?))?;
    let report = Report {
        dimension: summary.dimension,
        set: summary.resolving_set.clone(),
        components: summary
            .trace
            .iter()
            .map(|t| ComponentReport { class: t.class, mvc: t.mvc, chosen_j: t.chosen_j })
            .collect(),
    };
    print_report(&report, json);
    if !json {
        for t in &summary.trace {
            let xvc = t.subtree_xvc.map_or("-".to_owned(), |x| x.to_string());
            println!(
                "block {} {} [{}]: mvc {} candidates {:?} chosen {} subtree {} / {}",
                t.block,
                format!("{:?}", t.class).to_lowercase(),
                t.vertices.join(" "),
                t.mvc,
                t.candidates,
                t.chosen_j,
                t.subtree_mvc,
                xvc
            );
        }
    }
    Ok(())
}

fn oracle(input: &Path, json: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let report = if g.vertex_count() == 1 {
        Report { dimension: 0, set: vec![], components: vec![] }
    } else {
        let c = oracle_dimension(&g, budget()?)?;
        Report { dimension: c.size, set: g.sorted_labels(&c.vertices), components: vec![] }
    };
    print_report(&report, json);
    Ok(())
}

/// Returns whether the set resolves; the caller maps `false` to exit 1.
fn verify(input: &Path, labels: &[String]) -> Result<bool, Failure> {
    let g = read_graph(input)?;
    let set = labels.iter().map(|l| g.require_id(l)).collect::<Result<Vec<_>, _>>()?;
    match find_unresolved_pair(&g, &set)? {
        None => {
            println!("OK");
            Ok(true)
        }
        Some((u, v)) => {
            println!("FAIL: {} and {} are not strongly resolved", g.label(u), g.label(v));
            Ok(false)
        }
    }
}

fn srgraph(input: &Path) -> Result<(), Failure> {
    let g = read_graph(input)?;
    print!("{}", graph_dot(&strong_resolving_graph(&g)?, "sr"));
    Ok(())
}

fn decompose(input: &Path) -> Result<(), Failure> {
    let g = read_graph(input)?;
    print!("{}", tree_dot(&g, &build_decomposition_tree(&g)?));
    Ok(())
}

fn generate_files(
    components: Option<&str>,
    count: u64,
    seed: u64,
    max_components: Option<usize>,
    max_vertices: Option<usize>,
    out: &Path,
) -> Result<(), Failure> {
    let mut cfg = GeneratorConfig::default();
    if let Some(list) = components {
        cfg.components = parse_specs(list)?;
    }
    cfg.max_components = max_components.unwrap_or(cfg.max_components);
    cfg.max_vertices = max_vertices.unwrap_or(cfg.max_vertices);
    fs::create_dir_all(out).map_err(|e| fail(format!("{}: {e}", out.display())))?;
    for index in 0..count {
        let inst = generate(&cfg, seed, index)?;
        let write = |name: String, body: String| {
            let path = out.join(name);
            fs::write(&path, body).map_err(|e| fail(format!("{}: {e}", path.display())))
        };
        write(format!("instance-{index}.txt"), write_edge_list(&inst.graph))?;
        let meta = serde_json::to_string_pretty(&inst.meta).expect("metadata serializes");
        write(format!("instance-{index}.json"), meta + "\n")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Sdim { input, json } => sdim(&input, json).map(|_| true),
        Command::Oracle { input, json } => oracle(&input, json).map(|_| true),
        Command::Verify { input, set } => verify(&input, &set),
        Command::Srgraph { input } => srgraph(&input).map(|_| true),
        Command::Decompose { input } => decompose(&input).map(|_| true),
        Command::Generate { components, count, seed, max_components, max_vertices, out } => {
            generate_files(components.as_deref(), count, seed, max_components, max_vertices, &out).map(|_| true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
