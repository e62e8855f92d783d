//! `rlvd`: solve, recognize, verify, generate and benchmark `(r, l)`-Vertex
//! Deletion instances.

mod bench;
mod error;
mod input;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant, SystemTime};

use clap::{Parser, Subcommand, ValueEnum};
use rlvd::graph::{write_dimacs, write_edgelist};
use rlvd::ivd::hardness_gadget;
use rlvd::{generate, recognize, Format, Graph, MincutBackend, ProblemSpec, RunRecord, SolverConfig};

use crate::error::CliError;
use crate::input::{load_graph, load_vertex_set};

#[derive(Parser)]
#[command(name = "rlvd", version, about = "Exact solvers for (r,l)-Vertex Deletion with max(r,l) <= 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Delete at most K vertices so the rest is an (r,l)-graph.
    Solve(SolveArgs),
    /// Find an (r,l)-partition of the whole graph.
    Recognize {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Re-check a run record against its instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Write a seeded instance.
    Gen(GenArgs),
    /// Run a suite of instances and write a CSV summary.
    Bench {
        #[arg(long)]
        suite: PathBuf,
        /// Per-instance limit in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    l: usize,
    #[arg(long)]
    k: usize,
    /// Require the deleted set to be independent.
    #[arg(long)]
    independent: bool,
    /// File listing the only vertices that may be deleted.
    #[arg(long)]
    restricted: Option<PathBuf>,
    #[arg(long)]
    input: PathBuf,
    /// Input format; sniffed from the contents when omitted.
    #[arg(long)]
    format: Option<Format>,
    /// Where to write the run record (stdout by default).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Independent mincut backend.
    #[arg(long, default_value = "brute")]
    backend: MincutBackend,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Recorded in the run record; the solvers themselves are deterministic.
    #[arg(long)]
    seed: Option<u64>,
    /// Record wall time and a timestamp. Records are no longer reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenType {
    Random,
    Planted,
    Gadget,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long = "type", value_enum)]
    kind: GenType,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 2)]
    l: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Graph the gadget is built from.
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long, default_value = "dimacs")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(CliError::io(p)),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(CliError::io("<stdout>")),
    }
}

fn backend_name(b: MincutBackend) -> String {
    serde_json::to_value(b).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn solve(args: SolveArgs) -> Result<bool, CliError> {
    let loaded = load_graph(&args.input, args.format)?;
    let mut spec = ProblemSpec::new(args.r, args.l, args.k);
    if args.independent {
        spec = spec.independent();
    }
    if let Some(path) = &args.restricted {
        spec = spec.restricted(load_vertex_set(path)?);
    }
    if args.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let cfg = SolverConfig { threads: args.threads, mincut_backend: args.backend, ..SolverConfig::default() };
    let start = Instant::now();
    let mut solution = rlvd::solve(&loaded.graph, &spec, &cfg)?;
    let mut timestamp = None;
    if args.timing {
        solution.stats.wall_millis = Some(start.elapsed().as_millis() as u64);
        timestamp = Some(humantime::format_rfc3339_seconds(SystemTime::now()).to_string());
    }
    let feasible = solution.feasible;
    let record = RunRecord {
        instance: loaded.info,
        spec,
        solution,
        backend: backend_name(args.backend),
        seed: args.seed,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        timestamp,
    };
    let mut json = serde_json::to_string_pretty(&record).map_err(|e| CliError::Usage(e.to_string()))?;
    json.push('\n');
    write_out(args.output.as_deref(), &json)?;
    Ok(feasible)
}

fn verify(input: &Path, solution: &Path, format: Option<Format>) -> Result<bool, CliError> {
    let loaded = load_graph(input, format)?;
    let text = fs::read_to_string(solution).map_err(CliError::io(solution))?;
    let record: RunRecord =
        serde_json::from_str(&text).map_err(|source| CliError::Record { path: solution.into(), source })?;
    if record.instance.sha256 != loaded.info.sha256 {
        println!("invalid: instance hash differs from the record");
        return Ok(false);
    }
    match record.check(&loaded.graph) {
        Ok(()) => {
            println!("valid");
            Ok(true)
        }
        Err(issue) => {
            println!("invalid: {issue:?}");
            Ok(false)
        }
    }
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let need_n = || args.n.ok_or_else(|| CliError::Usage("--n is required for this generator".into()));
    if !(0.0..=1.0).contains(&args.p) {
        return Err(CliError::Usage("--p must lie in [0, 1]".into()));
    }
    let g: Graph = match args.kind {
        GenType::Random => generate::random_graph(need_n()?, args.p, args.seed),
        GenType::Planted => {
            let n = need_n()?;
            if args.k > n || (args.r + args.l == 0 && n > args.k) {
                return Err(CliError::Usage("planted needs k <= n and r + l > 0".into()));
            }
            generate::planted(n, args.r, args.l, args.k, args.p, args.seed).graph
        }
        GenType::Gadget => {
            let base = args.base.as_ref().ok_or_else(|| CliError::Usage("--base is required for gadget".into()))?;
            hardness_gadget(&load_graph(base, None)?.graph, args.k).0
        }
    };
    let text = match args.format {
        Format::Dimacs => write_dimacs(&g),
        Format::Edgelist => write_edgelist(&g),
    };
    write_out(args.output.as_deref(), &text)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Recognize { r, l, input, format } => {
            let loaded = load_graph(&input, format)?;
            let found = recognize(&loaded.graph, r, l)?;
            let json = serde_json::to_string(&found).map_err(|e| CliError::Usage(e.to_string()))?;
            println!("{json}");
            Ok(found.is_some())
        }
        Command::Verify { input, solution, format } => verify(&input, &solution, format),
        Command::Gen(args) => gen(args).map(|()| true),
        Command::Bench { suite, timeout, csv, threads } => {
            if !(timeout.is_finite() && timeout > 0.0) || threads == 0 {
                return Err(CliError::Usage("--timeout must be positive and --threads at least 1".into()));
            }
            bench::run(&suite, Duration::from_secs_f64(timeout), &csv, threads).map(|()| true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rlvd: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
