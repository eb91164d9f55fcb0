//! `oretree`: analyze, optimize, verify, and generate spanning-tree
//! instances. Reports are a single JSON document on stdout; a short summary
//! goes to stderr unless `--quiet` is set. Exit codes are disjoint per error
//! class: 2 parse, 3 disconnected, 4 bound failure, 5 budget exhausted,
//! 6 enumeration cap, 7 invalid tree.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use oretree_core::graph::Graph;
use oretree_core::instances;
use oretree_core::oracle::{self, OracleError};
use oretree_core::search::{self, SearchConfig, SearchError};
use oretree_core::tree::SpanningTree;

use report::{
    BoundsBlock, InputBlock, OracleBlock, ProfileBlock, Report, SearchBlock, TreeBlock,
};

const EXIT_PARSE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_BOUNDS: u8 = 4;
const EXIT_BUDGET: u8 = 5;
const EXIT_CAP: u8 = 6;
const EXIT_INVALID_TREE: u8 = 7;

#[derive(Parser)]
#[command(
    name = "oretree",
    version,
    about = "Spanning trees with few leaves and few branch vertices"
)]
struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report a graph's Ore parameters and static bound values.
    Analyze { graph: PathBuf },
    /// Synthesize a spanning tree certified against the three bounds.
    Optimize {
        graph: PathBuf,
        /// Base seed for the initial tree and restarts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Commit budget per descent (default 4n^3).
        #[arg(long)]
        max_iters: Option<usize>,
        /// Extra seeds to try when a stuck tree fails a bound.
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        /// Widen rotations from depth 1 to the full closure.
        #[arg(long)]
        rotation_closure: bool,
        /// Write the tree artifact in this format (requires --out).
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
        #[arg(long, requires = "emit")]
        out: Option<PathBuf>,
        /// Include the committed move log in the report.
        #[arg(long)]
        verbose: bool,
    },
    /// Exact minima over all spanning trees by enumeration.
    Oracle {
        graph: PathBuf,
        /// Refuse to enumerate beyond this many trees.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Generate an instance in edge-list format.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (stdout when omitted).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a tree file against a graph and report its bounds.
    Verify { graph: PathBuf, tree: PathBuf },
    /// Time the optimizer across instances; prints a fixed-format table.
    Bench {
        #[arg(long, default_value = "random")]
        family: BenchFamily,
        /// Comma-separated instance sizes.
        #[arg(long, default_value = "20,50,100")]
        sizes: String,
        /// Comma-separated seeds.
        #[arg(long, default_value = "0,1,2")]
        seeds: String,
        /// Edge probability for the random family.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Ore parameter for the ore and bipartite families.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Bipartite { a: usize, b: usize },
    Spider { b: usize },
    Random { n: usize, p: f64, seed: u64 },
    Ore { n: usize, k: usize, seed: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    Random,
    Ore,
    Bipartite,
    Spider,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Analyze { graph } => cmd_analyze(graph, cli.quiet),
        Command::Optimize {
            graph,
            seed,
            max_iters,
            restarts,
            rotation_closure,
            emit,
            out,
            verbose,
        } => cmd_optimize(
            graph,
            SearchConfig {
                seed: *seed,
                max_iterations: *max_iters,
                max_restarts: *restarts,
                rotation_closure: *rotation_closure,
                record_moves: *verbose,
            },
            *emit,
            out.as_deref(),
            cli.quiet,
        ),
        Command::Oracle { graph, cap } => cmd_oracle(graph, *cap, cli.quiet),
        Command::Gen { family, out } => cmd_gen(family, out.as_deref()),
        Command::Verify { graph, tree } => cmd_verify(graph, tree, cli.quiet),
        Command::Bench {
            family,
            sizes,
            seeds,
            p,
            k,
        } => cmd_bench(*family, sizes, seeds, *p, *k),
    }
}

fn load_graph(path: &Path) -> Result<(Graph, usize), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let parsed = Graph::parse(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok((parsed.graph, parsed.duplicate_edges))
}

fn input_block(g: &Graph, duplicates: usize) -> InputBlock {
    InputBlock {
        n: g.n(),
        m: g.edge_count(),
        duplicate_edges_collapsed: (duplicates > 0).then_some(duplicates),
    }
}

fn emit_report(report: &Report) {
    println!("{}", report.to_json());
}

fn summarize(quiet: bool, lines: &[String]) {
    if !quiet {
        for line in lines {
            eprintln!("{line}");
        }
    }
}

fn cmd_analyze(path: &Path, quiet: bool) -> Result<(), Failure> {
    let (g, duplicates) = load_graph(path)?;
    if !g.is_connected() {
        return Err(Failure::new(EXIT_DISCONNECTED, "graph is not connected"));
    }
    let profile = g.ore_profile();
    let report = Report::new(
        "analyze",
        input_block(&g, duplicates),
        ProfileBlock::from_profile(&profile),
    );
    emit_report(&report);
    summarize(
        quiet,
        &[format!(
            "n={} m={} sigma2={} k_min={}",
            g.n(),
            g.edge_count(),
            profile.sigma2,
            profile.k_min
        )],
    );
    Ok(())
}

fn map_search_error(e: SearchError) -> Failure {
    match e {
        SearchError::Disconnected | SearchError::EmptyGraph => {
            Failure::new(EXIT_DISCONNECTED, e.to_string())
        }
        SearchError::BudgetExhausted { .. } => Failure::new(EXIT_BUDGET, e.to_string()),
        SearchError::MoveApplication { .. } => Failure::new(1, e.to_string()),
    }
}

fn cmd_optimize(
    path: &Path,
    config: SearchConfig,
    emit: Option<EmitFormat>,
    out: Option<&Path>,
    quiet: bool,
) -> Result<(), Failure> {
    let (g, duplicates) = load_graph(path)?;
    let outcome = search::optimize(&g, &config).map_err(map_search_error)?;
    let profile = g.ore_profile();
    let mut report = Report::new(
        "optimize",
        input_block(&g, duplicates),
        ProfileBlock::from_profile(&profile),
    );
    report.tree = Some(TreeBlock::from_tree(&outcome.tree, &outcome.stats));
    report.bounds = Some(BoundsBlock::from_report(&outcome.report));
    report.search = Some(SearchBlock::from_outcome(&outcome, config.seed));
    if config.record_moves {
        report.move_log = Some(outcome.move_log.clone());
    }
    emit_report(&report);
    if let (Some(format), Some(out)) = (emit, out) {
        let artifact = match format {
            EmitFormat::Edges => outcome.tree.to_edge_list(),
            EmitFormat::Dot => outcome.tree.to_dot(),
        };
        fs::write(out, artifact)
            .map_err(|e| Failure::new(1, format!("{}: {e}", out.display())))?;
    }
    summarize(
        quiet,
        &[
            format!(
                "tree: {} leaves, {} branch vertices, branch degree sum {}, diameter {}",
                outcome.stats.leaf_count,
                outcome.stats.branch_count(),
                outcome.stats.branch_degree_sum,
                outcome.stats.diameter_path.len()
            ),
            format!(
                "search: certified={} iterations={} restarts={} (k={})",
                outcome.certified, outcome.iterations, outcome.restarts_used, profile.k_min
            ),
        ],
    );
    if !outcome.certified {
        return Err(Failure::new(
            EXIT_BOUNDS,
            "no bound-certified tree found within the restart budget",
        ));
    }
    Ok(())
}

fn cmd_oracle(path: &Path, cap: u64, quiet: bool) -> Result<(), Failure> {
    let (g, duplicates) = load_graph(path)?;
    let result = oracle::oracle_min(&g, cap).map_err(|e| match e {
        OracleError::Disconnected => Failure::new(EXIT_DISCONNECTED, e.to_string()),
        OracleError::CapExceeded { .. } => Failure::new(EXIT_CAP, e.to_string()),
    })?;
    let profile = g.ore_profile();
    let mut report = Report::new(
        "oracle",
        input_block(&g, duplicates),
        ProfileBlock::from_profile(&profile),
    );
    report.oracle = Some(OracleBlock {
        tree_count: result.tree_count.to_string(),
        min_leaves: result.min_leaves,
        min_branch_vertices: result.min_branch,
        min_branch_degree_sum: result.min_branch_degree_sum,
    });
    emit_report(&report);
    summarize(
        quiet,
        &[format!(
            "{} spanning trees; minima: {} leaves, {} branch vertices, degree sum {}",
            result.tree_count, result.min_leaves, result.min_branch, result.min_branch_degree_sum
        )],
    );
    Ok(())
}

fn cmd_gen(family: &Family, out: Option<&Path>) -> Result<(), Failure> {
    let g = match *family {
        Family::Path { n } => instances::path(n),
        Family::Cycle { n } => instances::cycle(n),
        Family::Complete { n } => instances::complete(n),
        Family::Bipartite { a, b } => instances::complete_bipartite(a, b),
        Family::Spider { b } => instances::spider(b),
        Family::Random { n, p, seed } => instances::random_connected(n, p, seed),
        Family::Ore { n, k, seed } => instances::random_ore(n, k, seed),
    };
    let doc = g.to_edge_list();
    match out {
        Some(path) => fs::write(path, doc)
            .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?,
        None => print!("{doc}"),
    }
    Ok(())
}

fn cmd_verify(graph_path: &Path, tree_path: &Path, quiet: bool) -> Result<(), Failure> {
    let (g, duplicates) = load_graph(graph_path)?;
    let (tree_doc, _) = load_graph(tree_path)?;
    if tree_doc.n() != g.n() {
        return Err(Failure::new(
            EXIT_INVALID_TREE,
            format!(
                "tree is over {} vertices but the graph has {}",
                tree_doc.n(),
                g.n()
            ),
        ));
    }
    let tree = SpanningTree::build(&g, &tree_doc.edges())
        .map_err(|e| Failure::new(EXIT_INVALID_TREE, e.to_string()))?;
    let stats = tree.stats();
    let profile = g.ore_profile();
    let bounds = stats.check_bounds(profile.k_min);
    let mut report = Report::new(
        "verify",
        input_block(&g, duplicates),
        ProfileBlock::from_profile(&profile),
    );
    report.valid_spanning_tree = Some(true);
    report.tree = Some(TreeBlock::from_tree(&tree, &stats));
    // Reported, never asserted: a valid tree may fail bounds.
    report.bounds = Some(BoundsBlock::from_report(&bounds));
    emit_report(&report);
    summarize(
        quiet,
        &[format!(
            "valid spanning tree: {} leaves, {} branch vertices, bounds all_ok={}",
            stats.leaf_count,
            stats.branch_count(),
            bounds.all_ok()
        )],
    );
    Ok(())
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, Failure> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| Failure::new(1, format!("invalid {what} entry: {s:?}")))
        })
        .collect()
}

fn cmd_bench(
    family: BenchFamily,
    sizes: &str,
    seeds: &str,
    p: f64,
    k: usize,
) -> Result<(), Failure> {
    let sizes: Vec<usize> = parse_list(sizes, "size")?;
    let seeds: Vec<u64> = parse_list(seeds, "seed")?;
    println!(
        "{:<10} {:>6} {:>7} {:>6} {:>7} {:>9} {:>10} {:>4} {:>3} {:>9}",
        "family", "n", "m", "seed", "iters", "restarts", "certified", "f", "b", "ms"
    );
    for &size in &sizes {
        for &seed in &seeds {
            let (label, g) = match family {
                BenchFamily::Random => ("random", instances::random_connected(size, p, seed)),
                BenchFamily::Ore => ("ore", instances::random_ore(size, k, seed)),
                BenchFamily::Bipartite => (
                    "bipartite",
                    instances::complete_bipartite(size, size + k - 1),
                ),
                BenchFamily::Spider => ("spider", instances::spider(size)),
            };
            let config = SearchConfig {
                seed,
                ..SearchConfig::default()
            };
            let started = Instant::now();
            let outcome = search::optimize(&g, &config).map_err(map_search_error)?;
            let ms = started.elapsed().as_secs_f64() * 1e3;
            println!(
                "{:<10} {:>6} {:>7} {:>6} {:>7} {:>9} {:>10} {:>4} {:>3} {:>9.2}",
                label,
                g.n(),
                g.edge_count(),
                seed,
                outcome.iterations,
                outcome.restarts_used,
                if outcome.certified { "yes" } else { "no" },
                outcome.stats.leaf_count,
                outcome.stats.branch_count(),
                ms
            );
        }
    }
    Ok(())
}
