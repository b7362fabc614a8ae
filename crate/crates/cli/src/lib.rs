//! The `tia` command line. Every subcommand reads its inputs from files,
//! writes line-oriented results to stdout and exits with 0 on success or a
//! found object, 2 on `TOOLARGE`, `NOWITNESS` or an invalid decomposition,
//! and 1 on usage, I/O or format errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use tia_core::branch::{solve_bounded, solve_with_decomposition_s0};
use tia_core::decompose::{decompose_with, DecomposeOptions};
use tia_core::generators::{
    complete, cycle, gen_blowup, gen_chordal, gen_npc_gadget, gen_random, gen_sep_hardness, gen_triangle_gadget, path,
    petersen, JChain,
};
use tia_core::io::{
    parse_decomposition, parse_graph, parse_weights, write_decomposition, write_graph, DecompositionFile,
};
use tia_core::oracles::exact_tree_alpha;
use tia_core::td::{td_alpha, validate};
use tia_core::{alpha, mwis_dp, DecomposeResult, Graph, SeparatorInstance, SeparatorResult, VertexSet, Violation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Parser)]
#[command(name = "tia", version, about = "Tree decompositions of bounded independence number")]
struct Cli {
    /// Sequential search with lexicographic tie-breaking (the default).
    #[arg(long, global = true, conflicts_with = "parallel")]
    deterministic: bool,

    /// Solve up to N separator queries of the decomposer concurrently.
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition with independence number at most 8k, or TOOLARGE.
    Decompose {
        #[arg(short)]
        k: usize,
        graph: PathBuf,
    },
    /// Checks a decomposition file against a graph.
    Validate { graph: PathBuf, td: PathBuf },
    /// Independence number of the graph.
    Alpha { graph: PathBuf },
    /// Exact tree-independence number (graphs of at most 9 vertices).
    ExactTia { graph: PathBuf },
    /// Separator of the terminal sets with independence number at most 2k,
    /// or NOWITNESS when none with at most k exists.
    Separator(SeparatorArgs),
    /// Writes a generated graph.
    Generate(GenerateArgs),
    /// Maximum-weight independent set over a decomposition.
    Mwis {
        graph: PathBuf,
        td: PathBuf,
        /// `<vertex> <weight>` lines; unlisted vertices weigh 1.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SeparatorArgs {
    #[arg(short)]
    k: usize,
    /// Comma-separated 1-based vertex ids.
    #[arg(long, value_delimiter = ',', required = true)]
    v1: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    v2: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    v3: Vec<usize>,
    /// Vertices the separator must contain.
    #[arg(long, value_delimiter = ',')]
    s0: Vec<usize>,
    graph: PathBuf,
    /// A decomposition restricting where the separator is searched for.
    td: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Chordal,
    Path,
    Cycle,
    Complete,
    Petersen,
    Blowup,
    Triangle,
    Npc,
    SepHardness,
}

#[derive(Args)]
struct GenerateArgs {
    family: Family,
    /// Vertex count for random, chordal, path, cycle and complete.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for random.
    #[arg(long)]
    p: Option<f64>,
    /// Parameter of the npc and sep-hardness constructions.
    #[arg(short)]
    k: Option<usize>,
    /// Input graph of blowup, triangle, npc and sep-hardness.
    #[arg(long)]
    from: Option<PathBuf>,
    /// For sep-hardness: build only the J-graph of the pair (I, J), 1-based.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    single: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Outcome of a subcommand: text for stdout and an exit code.
type Outcome = Result<(String, i32), String>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if help {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_ERROR;
        }
    };
    match dispatch(cli) {
        Ok((text, code)) => {
            if write!(out, "{text}").is_err() {
                return EXIT_ERROR;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let opts = DecomposeOptions {
        parallel: if cli.deterministic {
            0
        } else {
            cli.parallel.unwrap_or(0)
        },
        observer: None,
    };
    match cli.command {
        Command::Decompose { k, graph } => decompose_cmd(k, &graph, &opts),
        Command::Validate { graph, td } => validate_cmd(&graph, &td),
        Command::Alpha { graph } => {
            let g = read_graph(&graph)?;
            Ok((format!("{}\n", alpha(&g, &g.vertices())), EXIT_OK))
        }
        Command::ExactTia { graph } => {
            let g = read_graph(&graph)?;
            let t = exact_tree_alpha(&g).map_err(|e| e.to_string())?;
            Ok((format!("{t}\n"), EXIT_OK))
        }
        Command::Separator(a) => separator_cmd(a),
        Command::Generate(a) => generate_cmd(a),
        Command::Mwis { graph, td, weights } => mwis_cmd(&graph, &td, weights.as_deref()),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_decomposition(path: &Path) -> Result<DecompositionFile, String> {
    parse_decomposition(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// ` v1 v2 ...`, 1-based.
fn ids(set: &VertexSet) -> String {
    set.iter().map(|v| format!(" {}", v + 1)).collect()
}

fn vertex_set(g: &Graph, ids: &[usize], what: &str) -> Result<VertexSet, String> {
    let mut set = g.empty_set();
    for &x in ids {
        if x == 0 || x > g.n() {
            return Err(format!("{what}: vertex {x} outside 1..={}", g.n()));
        }
        set.insert(x - 1);
    }
    Ok(set)
}

fn decompose_cmd(k: usize, graph: &Path, opts: &DecomposeOptions<'_>) -> Outcome {
    let g = read_graph(graph)?;
    match decompose_with(&g, k, opts).map_err(|e| e.to_string())? {
        DecomposeResult::TooLarge => Ok(("TOOLARGE\n".into(), EXIT_NEGATIVE)),
        DecomposeResult::Decomposition(td) => Ok((write_decomposition(&td, td_alpha(&g, &td)), EXIT_OK)),
    }
}

fn validate_cmd(graph: &Path, td: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let file = read_decomposition(td)?;
    let report = validate(&g, &file.td).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for v in &report.violations {
        text.push_str(&match *v {
            Violation::VertexMissing(x) => format!("vertex-missing {}\n", x + 1),
            Violation::EdgeUncovered(a, b) => format!("edge-uncovered {} {}\n", a + 1, b + 1),
            Violation::DisconnectedTrace(x) => format!("disconnected-trace {}\n", x + 1),
        });
    }
    if !report.ok() {
        return Ok((text, EXIT_NEGATIVE));
    }
    let a = td_alpha(&g, &file.td);
    if file.k_reported < a {
        return Ok((format!("understated {} {a}\n", file.k_reported), EXIT_NEGATIVE));
    }
    Ok((format!("valid {a}\n"), EXIT_OK))
}

fn separator_cmd(a: SeparatorArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let terminals = [
        vertex_set(&g, &a.v1, "--v1")?,
        vertex_set(&g, &a.v2, "--v2")?,
        vertex_set(&g, &a.v3, "--v3")?,
    ];
    let s0 = vertex_set(&g, &a.s0, "--s0")?;
    let result = match &a.td {
        Some(path) => {
            let file = read_decomposition(path)?;
            solve_with_decomposition_s0(&g, a.k, &file.td, terminals, s0)
        }
        None => {
            let blocked = terminals.iter().fold(s0.clone(), |acc, t| acc.union(t));
            let r = g.vertices().difference(&blocked);
            SeparatorInstance::new(&g, terminals, s0, r, a.k).and_then(|inst| solve_bounded(&inst))
        }
    }
    .map_err(|e| e.to_string())?;
    match result {
        SeparatorResult::Found(s) => Ok((format!("FOUND{}\nalpha {}\n", ids(&s), alpha(&g, &s)), EXIT_OK)),
        SeparatorResult::NoWitness => Ok(("NOWITNESS\n".into(), EXIT_NEGATIVE)),
    }
}

fn generate_cmd(a: GenerateArgs) -> Outcome {
    let need_n = || a.n.ok_or_else(|| "this family needs --n".to_string());
    let need_k = || a.k.ok_or_else(|| "this family needs -k".to_string());
    let input = || match &a.from {
        Some(p) => read_graph(p),
        None => Err("this family needs --from <graph>".to_string()),
    };
    let core = |r: tia_core::Result<Graph>| r.map_err(|e| e.to_string());
    let mut header = String::new();
    let g = match a.family {
        Family::Random => core(gen_random(need_n()?, a.p.ok_or("random needs --p")?, a.seed))?,
        Family::Chordal => core(gen_chordal(need_n()?, a.seed))?,
        Family::Path => path(need_n()?),
        Family::Cycle => cycle(need_n()?),
        Family::Complete => complete(need_n()?),
        Family::Petersen => petersen(),
        Family::Blowup => core(gen_blowup(&input()?))?,
        Family::Triangle => core(gen_triangle_gadget(&input()?))?,
        Family::Npc => core(gen_npc_gadget(&input()?, need_k()?))?,
        Family::SepHardness => {
            let chain = match a.single.as_deref() {
                Some(&[i, j]) if i > 0 && j > 0 => JChain::Single(i - 1, j - 1),
                Some(_) => return Err("--single takes two 1-based vertex ids".into()),
                None => JChain::All,
            };
            let h = gen_sep_hardness(&input()?, need_k()?, chain).map_err(|e| e.to_string())?;
            header = format!("c terminals {} {}\n", h.u + 1, h.v + 1);
            h.graph
        }
    };
    Ok((header + &write_graph(&g), EXIT_OK))
}

fn mwis_cmd(graph: &Path, td: &Path, weights: Option<&Path>) -> Outcome {
    let g = read_graph(graph)?;
    let file = read_decomposition(td)?;
    let w = match weights {
        Some(p) => parse_weights(&read(p)?, g.n()).map_err(|e| format!("{}: {e}", p.display()))?,
        None => vec![1; g.n()],
    };
    let (value, set) = mwis_dp(&g, &file.td, &w).map_err(|e| e.to_string())?;
    Ok((format!("weight {value}\nset{}\n", ids(&set)), EXIT_OK))
}
