//! `tokendom`: token-graph domination from the command line.
//!
//! Exit codes: 0 success, 1 domination check failed, 2 input error,
//! 3 resource limit (including a solver that ran out of budget).

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use tokendom::coverings::{
    bose_sts, greedy_cover, skolem_sts, trivial_cover_lower_bound, CoveringDesign,
};
use tokendom::domination::{is_dominating, DominationCheck, SolverOptions};
use tokendom::report::{compute_gamma, parse_range, run_table, write_csv, Experiment, Method, RunOptions, TableOptions};
use tokendom::token::GraphJson;
use tokendom::{Error, Family, Mode};

#[derive(Parser, Debug)]
#[command(name = "tokendom", version, about = "Domination in token graphs of stars and complete graphs")]
struct Cli {
    /// Largest token graph materialized or verified.
    #[arg(long, global = true, default_value_t = tokendom::token::DEFAULT_VERTEX_BUDGET)]
    budget_vertices: u64,
    /// Branch-and-bound node budget of the exact solver.
    #[arg(long, global = true, default_value_t = tokendom::domination::DEFAULT_SOLVER_NODES)]
    solver_nodes: u64,
    /// Largest graph handed to the exact solver.
    #[arg(long, global = true, default_value_t = tokendom::domination::DEFAULT_SOLVER_VERTICES)]
    solver_vertices: usize,
    /// Wall-clock limit of the exact solver.
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write F_k of a star or complete graph as JSON or DOT.
    Build {
        family: String,
        n: u32,
        k: u32,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Compute a dominating set and write its certificate.
    Gamma {
        family: String,
        n: u32,
        k: u32,
        #[arg(long, default_value = "construction")]
        method: String,
    },
    /// Reproduce a result table as CSV.
    Table {
        /// star-f2, star-fk, complete-f2, complete-f3 or complete-fk.
        experiment: String,
        /// `a..b` or `a,b,c`.
        #[arg(long = "n")]
        n_range: String,
        /// Token counts for the star-fk and complete-fk experiments.
        #[arg(long = "k")]
        k_range: Option<String>,
        /// Attempt the exact solver up to this many vertices.
        #[arg(long, default_value_t = 100)]
        exact_max_vertices: u64,
        /// Write zero runtimes so output is byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check that a vertex set dominates a graph.
    Verify { graph: PathBuf, set: PathBuf },
    /// Build an (n,k,l) covering design.
    Cover {
        n: u32,
        k: u32,
        l: u32,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, value_enum, default_value_t = DesignFormat::Json)]
        format: DesignFormat,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DesignFormat {
    Json,
    Text,
}

/// A failure with a specific exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn budget_flag(budget: &str) -> &'static str {
    match budget {
        "vertex budget" => " (raise with --budget-vertices)",
        "solver vertex limit" => " (raise with --solver-vertices)",
        _ => "",
    }
}

fn exit_code(err: &anyhow::Error) -> (u8, String) {
    if let Some(Exit(code, msg)) = err.downcast_ref::<Exit>() {
        return (*code, msg.clone());
    }
    match err.downcast_ref::<Error>() {
        Some(e @ Error::ResourceLimit { budget, .. }) => (3, format!("{e}{}", budget_flag(budget))),
        Some(e @ Error::VerificationFailed(_)) => (1, e.to_string()),
        _ => (2, format!("{err:#}")),
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Prints a status line on stdout, or stderr when stdout carries the payload.
fn status(out: Option<&Path>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let out = cli.out.as_deref();
    let run_options = RunOptions {
        vertex_budget: cli.budget_vertices,
        solver: SolverOptions {
            max_vertices: cli.solver_vertices,
            max_nodes: cli.solver_nodes,
            timeout: cli.timeout_ms.map(Duration::from_millis),
        },
    };
    match cli.command {
        Command::Build { family, n, k, format } => {
            let family: Family = family.parse()?;
            let tg = tokendom::report::build_family(family, n, k, Mode::Explicit, cli.budget_vertices)?;
            let text = match format {
                GraphFormat::Dot => tg.to_dot()?,
                GraphFormat::Json => serde_json::to_string(&tg.to_json()?)? + "\n",
            };
            emit(out, &text)?;
            Ok(0)
        }
        Command::Gamma { family, n, k, method } => {
            let family: Family = family.parse()?;
            let method: Method = method.parse()?;
            let run = compute_gamma(family, n, k, method, &run_options)?;
            emit(out, &(run.certificate.to_json() + "\n"))?;
            status(out, &run.summary());
            Ok(if run.timed_out { 3 } else { 0 })
        }
        Command::Table {
            experiment,
            n_range,
            k_range,
            exact_max_vertices,
            no_timing,
        } => {
            let experiment: Experiment = experiment.parse()?;
            let ns = parse_range(&n_range)?;
            let ks = match k_range {
                Some(spec) => parse_range(&spec)?,
                None => Vec::new(),
            };
            let options = TableOptions {
                run: run_options,
                exact_max_vertices,
                timing: !no_timing,
            };
            let rows = run_table(experiment, &ns, &ks, &options)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(out, std::str::from_utf8(&buf)?)?;
            Ok(0)
        }
        Command::Verify { graph, set } => verify(&graph, &set),
        Command::Cover { n, k, l, method, format } => {
            let design = cover(n, k, l, &method)?;
            let report = design.verify()?;
            if !report.covering {
                return Err(Error::VerificationFailed(format!("design misses {:?}", report.first_uncovered)).into());
            }
            let text = match format {
                DesignFormat::Json => serde_json::to_string(&design.to_json())? + "\n",
                DesignFormat::Text => design.to_text(),
            };
            emit(out, &text)?;
            let lower = if k < n { trivial_cover_lower_bound(n, k, l)? } else { 1 };
            status(
                out,
                &format!("blocks={} lower_bound={} exact={}", design.len(), lower, design.exact),
            );
            Ok(0)
        }
    }
}

fn cover(n: u32, k: u32, l: u32, method: &str) -> anyhow::Result<CoveringDesign> {
    let triple = k == 3 && l == 2;
    let need_triple = |name: &str| -> anyhow::Result<()> {
        if triple {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{name} builds (n,3,2) designs only, got k={k}, l={l}")).into())
        }
    };
    Ok(match method {
        "greedy" => greedy_cover(n, k, l)?,
        "bose" => {
            need_triple("bose")?;
            bose_sts(n)?
        }
        "skolem" => {
            need_triple("skolem")?;
            skolem_sts(n)?
        }
        "auto" => match tokendom::coverings::steiner_triple_system(n) {
            Some(sts) if triple => sts,
            _ => greedy_cover(n, k, l)?,
        },
        other => return Err(Error::InvalidParameter(format!("unknown cover method {other:?}")).into()),
    })
}

fn parse_set(text: &str) -> anyhow::Result<Vec<Vec<u32>>> {
    let value: serde_json::Value = serde_json::from_str(text).context("set file is not JSON")?;
    let list = match value {
        serde_json::Value::Object(mut obj) => obj.remove("set").ok_or_else(|| anyhow!("set file has no \"set\" field"))?,
        other => other,
    };
    serde_json::from_value(list).context("set must be a list of member lists")
}

fn verify(graph: &Path, set: &Path) -> anyhow::Result<u8> {
    let graph_text = fs::read_to_string(graph).with_context(|| format!("reading {}", graph.display()))?;
    let set_text = fs::read_to_string(set).with_context(|| format!("reading {}", set.display()))?;
    let graph: GraphJson = serde_json::from_str(&graph_text).context("graph file is not graph JSON")?;
    let (adj, index) = graph.to_adjacency()?;
    let mut members = Vec::new();
    for mut m in parse_set(&set_text)? {
        m.sort_unstable();
        match index.get(&m) {
            Some(&i) => members.push(i),
            None => {
                return Err(Exit(2, format!("{} is not a vertex of the graph", tokendom::combinatorics::format_members(&m))).into())
            }
        }
    }
    match is_dominating(&adj, &members)? {
        DominationCheck::Dominating => {
            println!("dominating ({} vertices)", members.len());
            Ok(0)
        }
        DominationCheck::Undominated(w) => {
            let witness = tokendom::combinatorics::format_members(&graph.vertices[w]);
            println!("not dominating: {witness} is undominated");
            Ok(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let (code, msg) = exit_code(&err);
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
