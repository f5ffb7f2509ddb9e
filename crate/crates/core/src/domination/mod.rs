//! Dominating-set verification, greedy heuristics, degree bounds and certificates.

mod exact;

pub use exact::{exact_min_dominating, ExactOutcome, SolverOptions, DEFAULT_SOLVER_NODES, DEFAULT_SOLVER_VERTICES};

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::combinatorics::{binomial, deposit_bits, unrank_mask};
use crate::error::{invalid, Result};
use crate::graph::{Family, Graph};
use crate::par;
use crate::token::{TokenGraph, TokenVertex};

/// Outcome of a domination check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationCheck<V> {
    Dominating,
    /// The least vertex neither in the set nor adjacent to it.
    Undominated(V),
}

impl<V> DominationCheck<V> {
    pub fn is_dominating(&self) -> bool {
        matches!(self, DominationCheck::Dominating)
    }
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return invalid(format!("vertex {v} is not in a graph on {n} vertices"));
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Checks whether `set` dominates `g`.
pub fn is_dominating<G: Graph>(g: &G, set: &[usize]) -> Result<DominationCheck<usize>> {
    let inside = membership(g.vertex_count(), set)?;
    let witness = par::find_first(g.vertex_count(), |v| {
        !inside[v] && !g.neighbors(v).iter().any(|&u| inside[u as usize])
    });
    Ok(witness.map_or(DominationCheck::Dominating, DominationCheck::Undominated))
}

/// Checks domination on a token graph through its neighbor oracle.
///
/// Works in implicit mode; cost is one neighbor query per vertex.
pub fn is_dominating_token(tg: &TokenGraph, set: &[TokenVertex]) -> Result<DominationCheck<TokenVertex>> {
    for &v in set {
        tg.validate(v)?;
    }
    let inside: HashSet<u64> = set.iter().map(|v| v.0).collect();
    let n = tg.base().vertex_count() as u32;
    let k = tg.k();
    let support = tg.base().label_mask();
    let vertex_at = |r: usize| TokenVertex(deposit_bits(unrank_mask(r as u64, n, k).expect("rank in range"), support));
    let witness = par::find_first(tg.vertex_count() as usize, |r| {
        let v = vertex_at(r);
        if inside.contains(&v.0) {
            return false;
        }
        !tg.neighbors(v)
            .expect("valid vertex")
            .iter()
            .any(|w| inside.contains(&w.0))
    });
    Ok(witness.map_or(DominationCheck::Dominating, |r| DominationCheck::Undominated(vertex_at(r))))
}

/// Greedy dominating set: repeatedly take the vertex whose closed
/// neighborhood holds the most undominated vertices, least index on ties.
///
/// Returned in ascending order.
pub fn greedy_dominating<G: Graph>(g: &G) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dominated = vec![false; n];
    let mut remaining = n;
    let mut picked = Vec::new();
    while remaining > 0 {
        let (best, _) = par::argmax(n, |v| {
            let own = u64::from(!dominated[v]);
            own + g.neighbors(v).iter().filter(|&&u| !dominated[u as usize]).count() as u64
        })
        .expect("nonempty graph");
        picked.push(best);
        for u in std::iter::once(best).chain(g.neighbors(best).iter().map(|&u| u as usize)) {
            if !dominated[u] {
                dominated[u] = true;
                remaining -= 1;
            }
        }
    }
    picked.sort_unstable();
    picked
}

/// Maximal independent set by a scan in index order.
///
/// Any maximal independent set dominates, so this is also a dominating set.
pub fn greedy_maximal_independent<G: Graph>(g: &G) -> Vec<usize> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if blocked[v] {
            continue;
        }
        out.push(v);
        blocked[v] = true;
        for &u in g.neighbors(v) {
            blocked[u as usize] = true;
        }
    }
    out
}

/// Pairwise non-adjacent.
pub fn is_independent<G: Graph>(g: &G, set: &[usize]) -> Result<bool> {
    let inside = membership(g.vertex_count(), set)?;
    Ok(set.iter().all(|&v| g.neighbors(v).iter().all(|&u| !inside[u as usize])))
}

/// Independent and no outside vertex can be added.
pub fn is_maximal_independent<G: Graph>(g: &G, set: &[usize]) -> Result<bool> {
    Ok(is_independent(g, set)? && is_dominating(g, set)?.is_dominating())
}

/// Bounds on `γ` evaluated from degrees and, for token graphs, from the
/// structure of the base graph. Real-valued bounds are rounded toward the
/// integral side they bound: lower bounds up, upper bounds down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `⌈|V| / (1 + Δ)⌉`.
    pub max_degree_lower: u64,
    /// `⌊|V| (1 + ln(δ + 1)) / (δ + 1)⌋`, only when `δ > 1`.
    pub min_degree_log_upper: Option<u64>,
    /// Triangle-free complement bound, `F_3(K_n)` only.
    pub mantel_lower: Option<u64>,
    /// `⌊C(N, k−1) α(G) / k⌋` for token graphs.
    pub independence_upper_formula: Option<u64>,
}

fn degree_bounds_from(vertices: u64, max_degree: u64, min_degree: u64) -> BoundsReport {
    let max_degree_lower = vertices.div_ceil(1 + max_degree);
    let min_degree_log_upper = (min_degree > 1).then(|| {
        let d1 = (min_degree + 1) as f64;
        (vertices as f64 * (1.0 + d1.ln()) / d1).floor() as u64
    });
    BoundsReport {
        max_degree_lower,
        min_degree_log_upper,
        mantel_lower: None,
        independence_upper_formula: None,
    }
}

/// Degree-based bounds of an arbitrary graph.
pub fn degree_bounds<G: Graph>(g: &G) -> BoundsReport {
    degree_bounds_from(g.vertex_count() as u64, g.max_degree() as u64, g.min_degree() as u64)
}

/// All bounds applicable to a token graph; degrees come from the neighbor oracle.
pub fn token_bounds(tg: &TokenGraph) -> BoundsReport {
    let n = tg.base().vertex_count() as u32;
    let k = tg.k();
    let support = tg.base().label_mask();
    let degrees = par::map_range(tg.vertex_count() as usize, |r| {
        let v = deposit_bits(unrank_mask(r as u64, n, k).expect("rank in range"), support);
        tg.degree(TokenVertex(v)).expect("valid vertex") as u64
    });
    let max = degrees.iter().copied().max().unwrap_or(0);
    let min = degrees.iter().copied().min().unwrap_or(0);
    let mut report = degree_bounds_from(tg.vertex_count(), max, min);
    let base = tg.base();
    if base.family() == Family::Complete && (k == 3 || k + 3 == n) && n >= 3 {
        report.mantel_lower = mantel_lower_bound_f3(n).ok();
    }
    let alpha = base.independence_number() as u64;
    let kk = k as u64;
    report.independence_upper_formula =
        Some((binomial(n as u64, kk - 1) as u128 * alpha as u128 / kk as u128) as u64);
    report
}

/// `⌈(C(n,2) − ⌊n²/4⌋) / 3⌉`: every dominating set of `F_3(K_n)` leaves a
/// triangle-free set of uncovered pairs.
pub fn mantel_lower_bound_f3(n: u32) -> Result<u64> {
    if n < 3 {
        return invalid(format!("the F_3(K_n) bound needs n >= 3, got {n}"));
    }
    let n = n as u64;
    Ok((binomial(n, 2) - n * n / 4).div_ceil(3))
}

/// Serializable record of a dominating set on a token graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub method: String,
    pub size: usize,
    pub set: Vec<Vec<u32>>,
    pub verified: bool,
    pub optimal: bool,
    pub lower_bound: u64,
    pub upper_bound: u64,
}

impl DominationCertificate {
    /// Builds a certificate, verifying domination when the graph has at most
    /// `verify_budget` vertices. `upper_bound` is the set size.
    pub fn new(
        tg: &TokenGraph,
        method: &str,
        mut set: Vec<TokenVertex>,
        optimal: bool,
        lower_bound: u64,
        verify_budget: u64,
    ) -> Result<Self> {
        set.sort_unstable();
        set.dedup();
        for &v in &set {
            tg.validate(v)?;
        }
        let verified = tg.vertex_count() <= verify_budget && is_dominating_token(tg, &set)?.is_dominating();
        let size = set.len();
        let lower_bound = if optimal { size as u64 } else { lower_bound.min(size as u64) };
        Ok(DominationCertificate {
            family: tg.base().family(),
            n: tg.base().parameter(),
            k: tg.k(),
            method: method.to_string(),
            size,
            set: set.into_iter().map(TokenVertex::members).collect(),
            verified,
            optimal,
            lower_bound,
            upper_bound: size as u64,
        })
    }

    pub fn vertices(&self) -> Result<Vec<TokenVertex>> {
        self.set.iter().map(|m| TokenVertex::from_members(m)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Maps vertex indices of an explicit token graph to subsets.
pub fn ranks_to_vertices(tg: &TokenGraph, ranks: &[usize]) -> Result<Vec<TokenVertex>> {
    ranks.iter().map(|&r| tg.unrank(r as u64)).collect()
}
