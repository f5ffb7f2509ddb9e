//! Branch-and-bound minimum dominating set.
//!
//! Domination is solved as set cover: the universe is `V(g)` and the sets
//! are the closed neighborhoods. Each node branches on the undominated
//! vertex with the fewest remaining candidates (a single candidate is a
//! forced move), trying candidates in decreasing coverage. Candidates tried
//! in earlier sibling branches are excluded from later ones.

use std::time::{Duration, Instant};

use super::{degree_bounds, greedy_dominating};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_SOLVER_VERTICES: usize = 500;
pub const DEFAULT_SOLVER_NODES: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub max_vertices: usize,
    pub max_nodes: u64,
    pub timeout: Option<Duration>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_vertices: DEFAULT_SOLVER_VERTICES,
            max_nodes: DEFAULT_SOLVER_NODES,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    /// Best dominating set found, ascending.
    pub set: Vec<usize>,
    /// The search space was exhausted.
    pub optimal: bool,
    /// Proven lower bound on `γ`; equals `set.len()` when optimal.
    pub lower_bound: u64,
    pub nodes: u64,
}

type Word = u64;

struct Search<'a> {
    words: usize,
    full: Vec<Word>,
    /// closed neighborhood bitsets, `words` per vertex
    cover: Vec<Word>,
    closed: Vec<Vec<u32>>,
    best: Vec<usize>,
    nodes: u64,
    options: &'a SolverOptions,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Search<'_> {
    fn cover_of(&self, v: usize) -> &[Word] {
        &self.cover[v * self.words..(v + 1) * self.words]
    }

    fn gain(&self, v: usize, uncovered: &[Word]) -> u32 {
        self.cover_of(v)
            .iter()
            .zip(uncovered)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.options.max_nodes {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    /// Gain of every candidate (0 when excluded) and a lower bound on the
    /// number of further picks, or `None` if some vertex cannot be covered.
    ///
    /// Each uncovered vertex is charged `1 / g`, `g` the best gain among
    /// candidates covering it; one pick absorbs at most one unit of charge.
    fn bound(&self, uncovered: &[Word], excluded: &[Word]) -> Option<(Vec<u32>, usize)> {
        let gains: Vec<u32> = (0..self.closed.len())
            .map(|v| {
                if excluded[v / 64] >> (v % 64) & 1 == 1 {
                    0
                } else {
                    self.gain(v, uncovered)
                }
            })
            .collect();
        let mut charge = 0.0;
        for (wi, &word) in uncovered.iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let u = wi * 64 + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let best = self.closed[u].iter().map(|&c| gains[c as usize]).max().unwrap_or(0);
                if best == 0 {
                    return None;
                }
                charge += 1.0 / best as f64;
            }
        }
        Some((gains, (charge - 1e-9).ceil().max(1.0) as usize))
    }

    fn run(&mut self, covered: &[Word], excluded: &[Word], chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let uncovered: Vec<Word> = self.full.iter().zip(covered).map(|(f, c)| f & !c).collect();
        if uncovered.iter().all(|&w| w == 0) {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
                self.best.sort_unstable();
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }
        let Some((gains, lb)) = self.bound(&uncovered, excluded) else {
            return;
        };
        if chosen.len() + lb >= self.best.len() {
            return;
        }

        // undominated vertex with the fewest available candidates
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for (wi, &word) in uncovered.iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let u = wi * 64 + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let avail = self.closed[u].iter().filter(|&&c| gains[c as usize] > 0).count();
                if avail < fewest {
                    fewest = avail;
                    pivot = Some(u);
                }
            }
        }
        let pivot = pivot.expect("some vertex is undominated");

        let mut candidates: Vec<(u32, usize)> = self.closed[pivot]
            .iter()
            .map(|&c| c as usize)
            .filter(|&c| gains[c] > 0)
            .map(|c| (gains[c], c))
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = excluded.to_vec();
        let mut next_cover = vec![0; self.words];
        for (_, c) in candidates {
            for (i, slot) in next_cover.iter_mut().enumerate() {
                *slot = covered[i] | self.cover[c * self.words + i];
            }
            chosen.push(c);
            self.run(&next_cover, &excluded, chosen);
            chosen.pop();
            if self.aborted {
                return;
            }
            excluded[c / 64] |= 1 << (c % 64);
        }
    }
}

/// Minimum dominating set by branch and bound.
///
/// The greedy solution seeds the incumbent. When the node or time budget
/// runs out the best set so far is returned with `optimal = false`.
pub fn exact_min_dominating<G: Graph>(g: &G, options: &SolverOptions) -> Result<ExactOutcome> {
    let n = g.vertex_count();
    if n > options.max_vertices {
        return Err(Error::ResourceLimit {
            resource: format!("a graph with {n} vertices"),
            budget: "solver vertex limit",
            requested: n as u64,
            limit: options.max_vertices as u64,
        });
    }
    if n == 0 {
        return Ok(ExactOutcome {
            set: Vec::new(),
            optimal: true,
            lower_bound: 0,
            nodes: 0,
        });
    }
    let words = n.div_ceil(64);
    let mut full = vec![0; words];
    for v in 0..n {
        full[v / 64] |= 1 << (v % 64);
    }
    let mut cover = vec![0; n * words];
    let mut closed = Vec::with_capacity(n);
    for v in 0..n {
        let mut list = vec![v as u32];
        list.extend_from_slice(g.neighbors(v));
        list.sort_unstable();
        for &u in &list {
            cover[v * words + u as usize / 64] |= 1 << (u % 64);
        }
        closed.push(list);
    }

    let mut search = Search {
        words,
        full,
        cover,
        closed,
        best: greedy_dominating(g),
        nodes: 0,
        options,
        deadline: options.timeout.map(|t| Instant::now() + t),
        aborted: false,
    };
    let root_lower = {
        let everything = search.full.clone();
        search.bound(&everything, &vec![0; words]).map_or(0, |(_, lb)| lb) as u64
    };
    search.run(&vec![0; words], &vec![0; words], &mut Vec::new());

    let optimal = !search.aborted;
    let size = search.best.len() as u64;
    let lower_bound = if optimal {
        size
    } else {
        root_lower.max(degree_bounds(g).max_degree_lower).min(size)
    };
    Ok(ExactOutcome {
        set: search.best,
        optimal,
        lower_bound,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_dominating;
    use crate::graph::{AdjacencyList, BaseGraph};
    use crate::token::{Mode, TokenGraph};

    fn solve(g: &AdjacencyList) -> ExactOutcome {
        exact_min_dominating(g, &SolverOptions::default()).unwrap()
    }

    fn token(base: BaseGraph, k: u32) -> AdjacencyList {
        TokenGraph::build(base, k, Mode::Explicit)
            .unwrap()
            .adjacency()
            .unwrap()
            .clone()
    }

    #[test]
    fn known_small_values() {
        let f2s6 = token(BaseGraph::star(6).unwrap(), 2);
        let out = solve(&f2s6);
        assert!(out.optimal);
        assert_eq!(out.set.len(), 5);
        assert!(is_dominating(&f2s6, &out.set).unwrap().is_dominating());

        assert_eq!(solve(&token(BaseGraph::complete(7).unwrap(), 2)).set.len(), 3);
        assert_eq!(solve(&token(BaseGraph::complete(6).unwrap(), 3)).set.len(), 2);
    }

    #[test]
    fn path_and_cycle() {
        let p7 = AdjacencyList::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(solve(&p7).set.len(), 3);
        let edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let c10 = AdjacencyList::from_edges(10, &edges).unwrap();
        assert_eq!(solve(&c10).set.len(), 4);
        let isolated = AdjacencyList::from_edges(4, &[]).unwrap();
        assert_eq!(solve(&isolated).set, vec![0, 1, 2, 3]);
    }

    #[test]
    fn limits() {
        let g = token(BaseGraph::complete(14).unwrap(), 4);
        let err = exact_min_dominating(&g, &SolverOptions::default()).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { budget: "solver vertex limit", .. }));

        let g = token(BaseGraph::complete(9).unwrap(), 3);
        let tight = SolverOptions {
            max_nodes: 5,
            ..SolverOptions::default()
        };
        let out = exact_min_dominating(&g, &tight).unwrap();
        assert!(!out.optimal);
        assert!(is_dominating(&g, &out.set).unwrap().is_dominating());
        assert!(out.lower_bound <= out.set.len() as u64);
    }

    #[test]
    fn deterministic() {
        let g = token(BaseGraph::star(7).unwrap(), 3);
        let a = solve(&g);
        let b = solve(&g);
        assert_eq!(a, b);
    }
}
