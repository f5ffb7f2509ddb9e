//! Dominating-set runs and experiment tables behind the command-line tool.

use serde::Serialize;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use crate::constructions::{
    complete_f2_construction, complete_f3_construction, complete_fk_construction, star_f2_construction,
    star_fk_construction, theoretical_gamma, ConstructionOptions, GammaBounds, METHOD_COMPLETE_F2,
    METHOD_STAR_F2,
};
use crate::domination::{
    exact_min_dominating, greedy_dominating, greedy_maximal_independent, ranks_to_vertices,
    DominationCertificate, SolverOptions,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{BaseGraph, Family};
use crate::par;
use crate::token::{BuildOptions, Mode, TokenGraph, TokenVertex};

/// How a dominating set is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Greedy,
    Construction,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "greedy" => Ok(Method::Greedy),
            "construction" => Ok(Method::Construction),
            other => invalid(format!("unknown method {other:?}")),
        }
    }
}

/// Budgets shared by every run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub vertex_budget: u64,
    pub solver: SolverOptions,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            vertex_budget: crate::token::DEFAULT_VERTEX_BUDGET,
            solver: SolverOptions::default(),
        }
    }
}

impl RunOptions {
    fn construction(&self) -> ConstructionOptions {
        ConstructionOptions {
            verify_budget: self.vertex_budget,
            vertex_budget: self.vertex_budget,
        }
    }

    fn build(&self) -> BuildOptions {
        BuildOptions {
            vertex_budget: self.vertex_budget,
        }
    }
}

/// Result of [`compute_gamma`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRun {
    pub certificate: DominationCertificate,
    /// The exact solver stopped on its node or time budget.
    pub timed_out: bool,
}

impl GammaRun {
    /// `family n k method size [optimal|verified]`.
    pub fn summary(&self) -> String {
        let c = &self.certificate;
        let status = if c.optimal {
            "optimal"
        } else if c.verified {
            "verified"
        } else {
            "unverified"
        };
        format!("{} {} {} {} {} {}", c.family, c.n, c.k, c.method, c.size, status)
    }
}

fn base_graph(family: Family, n: u32) -> Result<BaseGraph> {
    match family {
        Family::Star => BaseGraph::star(n),
        Family::Complete => BaseGraph::complete(n),
        Family::Custom => invalid("custom base graphs are not supported here"),
    }
}

/// Builds a token graph of a named family.
pub fn build_family(family: Family, n: u32, k: u32, mode: Mode, vertex_budget: u64) -> Result<TokenGraph> {
    TokenGraph::build_with(base_graph(family, n)?, k, mode, &BuildOptions { vertex_budget })
}

fn complement(tg: &TokenGraph, set: Vec<TokenVertex>) -> Vec<TokenVertex> {
    let all = tg.base().label_mask();
    set.into_iter().map(|v| TokenVertex(all & !v.0)).collect()
}

/// Runs one method on `F_k` of the star or complete graph.
pub fn compute_gamma(family: Family, n: u32, k: u32, method: Method, options: &RunOptions) -> Result<GammaRun> {
    let bounds = theoretical_gamma(family, n, k)?;
    match method {
        Method::Exact => {
            let tg = TokenGraph::build_with(base_graph(family, n)?, k, Mode::Explicit, &options.build())?;
            let outcome = exact_min_dominating(tg.adjacency()?, &options.solver)?;
            let set = ranks_to_vertices(&tg, &outcome.set)?;
            let lower = outcome.lower_bound.max(bounds.lower);
            let certificate =
                DominationCertificate::new(&tg, "exact", set, outcome.optimal, lower, options.vertex_budget)?;
            Ok(GammaRun {
                certificate,
                timed_out: !outcome.optimal,
            })
        }
        Method::Greedy => {
            let tg = TokenGraph::build_with(base_graph(family, n)?, k, Mode::Explicit, &options.build())?;
            let set = ranks_to_vertices(&tg, &greedy_dominating(tg.adjacency()?))?;
            let optimal = set.len() as u64 <= bounds.lower;
            let certificate =
                DominationCertificate::new(&tg, "greedy", set, optimal, bounds.lower, options.vertex_budget)?;
            Ok(GammaRun {
                certificate,
                timed_out: false,
            })
        }
        Method::Construction => Ok(GammaRun {
            certificate: construction(family, n, k, &bounds, options)?,
            timed_out: false,
        }),
    }
}

/// Picks the construction matching `(family, n, k)`. For `k` above half the
/// base order the construction for the complementary token count is
/// complemented vertex by vertex.
fn construction(family: Family, n: u32, k: u32, bounds: &GammaBounds, options: &RunOptions) -> Result<DominationCertificate> {
    let copts = options.construction();
    let order = match family {
        Family::Star => n + 1,
        _ => n,
    };
    let small_k = if k == order { k } else { k.min(order - k) };
    let flipped = small_k != k;
    let tg_small = TokenGraph::build(base_graph(family, n)?, small_k, Mode::Implicit)?;

    let (method, set): (String, Vec<TokenVertex>) = match (family, small_k) {
        (Family::Star, 1) => ("star-center".into(), vec![TokenVertex(1)]),
        (Family::Star, 2) => (METHOD_STAR_F2.into(), star_f2_construction(n, 1, 2)?),
        (Family::Star, s) if 2 * s <= n => {
            let (cert, _) = star_fk_construction(n, s, &copts)?;
            (cert.method.clone(), cert.vertices()?)
        }
        (Family::Complete, 2) => (METHOD_COMPLETE_F2.into(), complete_f2_construction(n)?),
        (Family::Complete, 3) => {
            let built = complete_f3_construction(n, &copts)?;
            (built.certificate.method.clone(), built.certificate.vertices()?)
        }
        (Family::Complete, s) => {
            let cert = complete_fk_construction(n, s, &copts)?;
            (cert.method.clone(), cert.vertices()?)
        }
        _ => {
            let tg = TokenGraph::build_with(base_graph(family, n)?, small_k, Mode::Explicit, &options.build())?;
            let mis = greedy_maximal_independent(tg.adjacency()?);
            ("mis".into(), ranks_to_vertices(&tg, &mis)?)
        }
    };
    let (tg, set) = if flipped {
        let tg = TokenGraph::build(base_graph(family, n)?, k, Mode::Implicit)?;
        let set = complement(&tg_small, set);
        (tg, set)
    } else {
        (tg_small, set)
    };
    let mut unique = set.clone();
    unique.sort_unstable();
    unique.dedup();
    let optimal = unique.len() as u64 <= bounds.lower;
    DominationCertificate::new(&tg, &method, set, optimal, bounds.lower, options.vertex_budget)
}

/// Experiments reproducible as tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    StarF2,
    StarFk,
    CompleteF2,
    CompleteF3,
    CompleteFk,
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star-f2" => Ok(Experiment::StarF2),
            "star-fk" => Ok(Experiment::StarFk),
            "complete-f2" => Ok(Experiment::CompleteF2),
            "complete-f3" => Ok(Experiment::CompleteF3),
            "complete-fk" => Ok(Experiment::CompleteFk),
            other => invalid(format!("unknown experiment {other:?}")),
        }
    }
}

impl Experiment {
    fn family(self) -> Family {
        match self {
            Experiment::StarF2 | Experiment::StarFk => Family::Star,
            _ => Family::Complete,
        }
    }

    /// `(n, k)` instances in output order.
    fn instances(self, ns: &[u32], ks: &[u32]) -> Vec<(u32, u32)> {
        let fixed = match self {
            Experiment::StarF2 | Experiment::CompleteF2 => Some(2),
            Experiment::CompleteF3 => Some(3),
            _ => None,
        };
        let ks: Vec<u32> = match fixed {
            Some(k) => vec![k],
            None if ks.is_empty() => vec![3],
            None => ks.to_vec(),
        };
        let mut out: Vec<(u32, u32)> = ns.iter().flat_map(|&n| ks.iter().map(move |&k| (n, k))).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentRow {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub method: String,
    pub size: usize,
    pub lower: u64,
    pub upper: u64,
    pub exact_gamma: Option<u64>,
    pub verified: bool,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    pub run: RunOptions,
    /// The exact solver is attempted only up to this many vertices.
    pub exact_max_vertices: u64,
    /// Record wall-clock runtimes; zero otherwise, which makes output reproducible.
    pub timing: bool,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            run: RunOptions::default(),
            exact_max_vertices: 100,
            timing: true,
        }
    }
}

fn table_row(experiment: Experiment, n: u32, k: u32, options: &TableOptions) -> Result<ExperimentRow> {
    let started = Instant::now();
    let family = experiment.family();
    let bounds = theoretical_gamma(family, n, k)?;
    let cert = compute_gamma(family, n, k, Method::Construction, &options.run)?.certificate;
    let vertices = crate::combinatorics::binomial(
        match family {
            Family::Star => n as u64 + 1,
            _ => n as u64,
        },
        k as u64,
    );
    let instance = format!("{family} n={n} k={k}");
    if vertices <= options.run.vertex_budget && !cert.verified {
        return Err(Error::VerificationFailed(format!("construction for {instance} is not dominating")));
    }
    let mut exact_gamma = cert.optimal.then_some(cert.size as u64);
    if exact_gamma.is_none() && vertices <= options.exact_max_vertices {
        let run = compute_gamma(family, n, k, Method::Exact, &options.run)?;
        if run.certificate.optimal {
            exact_gamma = Some(run.certificate.size as u64);
        }
    }
    if let Some(g) = exact_gamma {
        if g < bounds.lower || g > cert.size as u64 || g > bounds.upper {
            return Err(Error::VerificationFailed(format!(
                "{instance}: γ={g} outside [{}, min({}, {})]",
                bounds.lower, cert.size, bounds.upper
            )));
        }
    }
    Ok(ExperimentRow {
        family,
        n,
        k,
        method: cert.method,
        size: cert.size,
        lower: bounds.lower,
        upper: bounds.upper,
        exact_gamma,
        verified: cert.verified,
        runtime_ms: if options.timing {
            started.elapsed().as_millis() as u64
        } else {
            0
        },
    })
}

/// Runs every `(n, k)` instance of an experiment; rows are ordered by `(n, k)`.
pub fn run_table(experiment: Experiment, ns: &[u32], ks: &[u32], options: &TableOptions) -> Result<Vec<ExperimentRow>> {
    let instances = experiment.instances(ns, ks);
    par::map_slice(&instances, |&(n, k)| table_row(experiment, n, k, options))
        .into_iter()
        .collect()
}

pub fn write_csv<W: Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::InvalidParameter(format!("csv output: {e}"));
    if rows.is_empty() {
        writer
            .write_record(["family", "n", "k", "method", "size", "lower", "upper", "exact_gamma", "verified", "runtime_ms"])
            .map_err(io)?;
    }
    for row in rows {
        writer.serialize(row).map_err(io)?;
    }
    writer.flush().map_err(|e| Error::InvalidParameter(format!("csv output: {e}")))?;
    Ok(())
}

/// Parses `a..b` (inclusive) or a comma list such as `6,14,18`.
pub fn parse_range(spec: &str) -> Result<Vec<u32>> {
    let bad = || Error::InvalidParameter(format!("bad range {spec:?}; use a..b or a,b,c"));
    if let Some((a, b)) = spec.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    spec.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
        .collect()
}
