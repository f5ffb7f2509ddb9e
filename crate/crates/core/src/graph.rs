//! Base graphs (stars, complete graphs, custom) and a compact adjacency list.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{invalid, Result};

/// Which family a base graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Star,
    Complete,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Custom => "custom",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            "custom" => Ok(Family::Custom),
            other => invalid(format!("unknown family {other:?}")),
        }
    }
}

/// Read-only view of a simple undirected graph on `0..vertex_count()`.
pub trait Graph: Sync {
    fn vertex_count(&self) -> usize;

    /// Sorted, duplicate-free neighbors of `v`.
    fn neighbors(&self, v: usize) -> &[u32];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }
}

/// Compressed sparse row adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyList {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl AdjacencyList {
    /// Builds from per-vertex neighbor lists, which are sorted and deduplicated.
    pub fn from_neighbor_lists(lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for mut list in lists {
            list.sort_unstable();
            list.dedup();
            targets.extend(list);
            offsets.push(targets.len());
        }
        AdjacencyList { offsets, targets }
    }

    /// Builds from an undirected edge list; rejects self-loops and out-of-range ends.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut lists = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return invalid(format!("edge ({u},{v}) outside 0..{vertex_count}"));
            }
            if u == v {
                return invalid(format!("self-loop at {u}"));
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        Ok(Self::from_neighbor_lists(lists))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.targets.len() / 2);
        for u in 0..self.vertex_count() {
            for &v in self.neighbors(u) {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }
}

impl Graph for AdjacencyList {
    fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }
}

/// A simple graph on at most 64 integer labels in `0..64`.
///
/// The star `S_n` uses labels `0..=n` with center `0`; the complete graph
/// `K_n` uses labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGraph {
    family: Family,
    param: u32,
    labels: Vec<u32>,
    adjacency: [u64; 64],
}

impl BaseGraph {
    /// The star on `n` leaves.
    pub fn star(n: u32) -> Result<Self> {
        if n == 0 {
            return invalid("a star needs at least one leaf");
        }
        if n > 63 {
            return invalid(format!("star with {n} leaves exceeds 64 labels"));
        }
        let mut adjacency = [0u64; 64];
        for leaf in 1..=n {
            adjacency[0] |= 1 << leaf;
            adjacency[leaf as usize] = 1;
        }
        Ok(BaseGraph {
            family: Family::Star,
            param: n,
            labels: (0..=n).collect(),
            adjacency,
        })
    }

    /// The complete graph on labels `1..=n`.
    pub fn complete(n: u32) -> Result<Self> {
        if n == 0 {
            return invalid("a complete graph needs at least one vertex");
        }
        if n > 63 {
            return invalid(format!("complete graph on {n} vertices exceeds 64 labels"));
        }
        let all = ((1u64 << n) - 1) << 1;
        let mut adjacency = [0u64; 64];
        for v in 1..=n {
            adjacency[v as usize] = all & !(1 << v);
        }
        Ok(BaseGraph {
            family: Family::Complete,
            param: n,
            labels: (1..=n).collect(),
            adjacency,
        })
    }

    /// A custom graph from explicit labels and edges between them.
    pub fn custom(labels: &[u32], edges: &[(u32, u32)]) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return invalid("duplicate labels");
        }
        if sorted.is_empty() {
            return invalid("a graph needs at least one vertex");
        }
        if let Some(&big) = sorted.iter().find(|&&l| l >= 64) {
            return invalid(format!("label {big} does not fit a 64-bit subset"));
        }
        let present: u64 = sorted.iter().fold(0, |m, &l| m | 1 << l);
        let mut adjacency = [0u64; 64];
        for &(u, v) in edges {
            if u >= 64 || v >= 64 || present >> u & 1 == 0 || present >> v & 1 == 0 {
                return invalid(format!("edge ({u},{v}) uses an unknown label"));
            }
            if u == v {
                return invalid(format!("self-loop at {u}"));
            }
            adjacency[u as usize] |= 1 << v;
            adjacency[v as usize] |= 1 << u;
        }
        Ok(BaseGraph {
            family: Family::Custom,
            param: sorted.len() as u32,
            labels: sorted,
            adjacency,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Leaves for a star, vertices otherwise.
    pub fn parameter(&self) -> u32 {
        self.param
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label_mask(&self) -> u64 {
        self.labels.iter().fold(0, |m, &l| m | 1 << l)
    }

    pub fn contains(&self, label: u32) -> bool {
        label < 64 && self.label_mask() >> label & 1 == 1
    }

    /// Neighbors of `label` as a mask over labels.
    pub fn neighbor_mask(&self, label: u32) -> u64 {
        self.adjacency[label as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u < 64 && v < 64 && self.adjacency[u as usize] >> v & 1 == 1
    }

    pub fn degree(&self, label: u32) -> usize {
        self.adjacency[label as usize].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.labels.iter().map(|&l| self.degree(l)).sum::<usize>() / 2
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.labels.iter().map(|&l| self.degree(l)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges `(u, v)` with `u < v` as labels.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for &u in &self.labels {
            for &v in &self.labels {
                if u < v && self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Index of `label` in [`Self::labels`].
    pub fn position(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// The graph as an adjacency list indexed by label position.
    pub fn to_adjacency(&self) -> AdjacencyList {
        let lists = self
            .labels
            .iter()
            .map(|&u| {
                self.labels
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        AdjacencyList::from_neighbor_lists(lists)
    }

    /// Independence number by exhaustive branching over labels.
    pub fn independence_number(&self) -> usize {
        fn grow(g: &BaseGraph, candidates: u64) -> usize {
            if candidates == 0 {
                return 0;
            }
            let v = candidates.trailing_zeros();
            let rest = candidates & !(1 << v);
            let without = grow(g, rest);
            let with = 1 + grow(g, rest & !g.adjacency[v as usize]);
            with.max(without)
        }
        if self.family == Family::Complete {
            return 1;
        }
        if self.family == Family::Star {
            return self.param.max(1) as usize;
        }
        grow(self, self.label_mask())
    }
}

/// Labels `{x in 1..=n : x ≡ residue (mod modulus)}`.
pub fn residue_class(n: u32, modulus: u32, residue: u32) -> Vec<u32> {
    (1..=n).filter(|x| x % modulus == residue % modulus).collect()
}

/// Labels `{x in 1..=n : divisor | x}`.
pub fn multiples(n: u32, divisor: u32) -> Vec<u32> {
    (1..=n).filter(|x| x % divisor == 0).collect()
}
