//! k-token graphs `F_k(G)`.
//!
//! Vertices are the `k`-subsets of the base graph's labels; two are adjacent
//! when their symmetric difference is an edge of the base graph. Vertex index
//! is the colex rank of the subset, taken over label positions.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::combinatorics::{
    binomial, deposit_bits, extract_bits, format_members, mask_members, rank_mask, unrank_mask,
    Combinations,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{AdjacencyList, BaseGraph, Family, Graph};
use crate::par;

/// Default cap on explicitly materialized vertices.
pub const DEFAULT_VERTEX_BUDGET: u64 = 200_000;

/// A `k`-subset of base labels, stored as a label bitmask.
///
/// `Ord` is colex order on the sorted member lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenVertex(pub u64);

impl TokenVertex {
    pub fn from_members(members: &[u32]) -> Result<Self> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        crate::combinatorics::members_mask(&sorted).map(TokenVertex)
    }

    pub fn members(self) -> Vec<u32> {
        mask_members(self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: u32) -> bool {
        label < 64 && self.0 >> label & 1 == 1
    }

    pub fn mask(self) -> u64 {
        self.0
    }
}

impl fmt::Display for TokenVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_members(&self.members()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Materialize the full adjacency list.
    Explicit,
    /// Answer neighbor queries on demand.
    Implicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub vertex_budget: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}

/// The token graph `F_k(G)`.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    base: BaseGraph,
    k: u32,
    vertex_count: u64,
    explicit: Option<AdjacencyList>,
}

impl TokenGraph {
    pub fn build(base: BaseGraph, k: u32, mode: Mode) -> Result<Self> {
        Self::build_with(base, k, mode, &BuildOptions::default())
    }

    pub fn build_with(base: BaseGraph, k: u32, mode: Mode, options: &BuildOptions) -> Result<Self> {
        let n = base.vertex_count() as u32;
        // k = n is the one-vertex graph
        if k == 0 || k > n {
            return invalid(format!(
                "token count k={k} must satisfy 1 <= k <= {n} for a base graph on {n} vertices"
            ));
        }
        let vertex_count = binomial(n as u64, k as u64);
        let mut graph = TokenGraph {
            base,
            k,
            vertex_count,
            explicit: None,
        };
        if mode == Mode::Explicit {
            if vertex_count > options.vertex_budget {
                return Err(Error::ResourceLimit {
                    resource: format!("F_{k} of a {n}-vertex graph has {vertex_count} vertices, which"),
                    budget: "vertex budget",
                    requested: vertex_count,
                    limit: options.vertex_budget,
                });
            }
            graph.explicit = Some(graph.materialize());
        }
        Ok(graph)
    }

    fn materialize(&self) -> AdjacencyList {
        let support = self.base.label_mask();
        let vertices: Vec<u64> = Combinations::new(self.base.vertex_count() as u32, self.k)
            .map(|m| deposit_bits(m, support))
            .collect();
        let lists = par::map_slice(&vertices, |&v| {
            self.neighbor_masks(v)
                .into_iter()
                .map(|w| rank_mask(extract_bits(w, support)) as u32)
                .collect()
        });
        AdjacencyList::from_neighbor_lists(lists)
    }

    /// Neighbor masks of `v`, unsorted.
    fn neighbor_masks(&self, v: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = v;
        while rest != 0 {
            let a = rest.trailing_zeros();
            rest &= rest - 1;
            let mut targets = self.base.neighbor_mask(a) & !v;
            while targets != 0 {
                let b = targets.trailing_zeros();
                targets &= targets - 1;
                out.push(v ^ (1 << a) ^ (1 << b));
            }
        }
        out
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn is_explicit(&self) -> bool {
        self.explicit.is_some()
    }

    /// The materialized adjacency, indexed by colex rank.
    pub fn adjacency(&self) -> Result<&AdjacencyList> {
        self.explicit
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter("token graph was built in implicit mode".into()))
    }

    /// Checks that `v` is a `k`-subset of the base labels.
    pub fn validate(&self, v: TokenVertex) -> Result<()> {
        if v.len() != self.k as usize {
            return invalid(format!("{v} has {} members, expected {}", v.len(), self.k));
        }
        if v.0 & !self.base.label_mask() != 0 {
            return invalid(format!("{v} is not a subset of the base vertex set"));
        }
        Ok(())
    }

    pub fn rank(&self, v: TokenVertex) -> Result<u64> {
        self.validate(v)?;
        Ok(rank_mask(extract_bits(v.0, self.base.label_mask())))
    }

    pub fn unrank(&self, rank: u64) -> Result<TokenVertex> {
        let m = unrank_mask(rank, self.base.vertex_count() as u32, self.k)?;
        Ok(TokenVertex(deposit_bits(m, self.base.label_mask())))
    }

    /// All vertices in colex order.
    pub fn vertices(&self) -> impl Iterator<Item = TokenVertex> + '_ {
        let support = self.base.label_mask();
        Combinations::new(self.base.vertex_count() as u32, self.k)
            .map(move |m| TokenVertex(deposit_bits(m, support)))
    }

    /// Neighbors of `v` in colex order.
    pub fn neighbors(&self, v: TokenVertex) -> Result<Vec<TokenVertex>> {
        self.validate(v)?;
        let mut out: Vec<TokenVertex> = self.neighbor_masks(v.0).into_iter().map(TokenVertex).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn degree(&self, v: TokenVertex) -> Result<usize> {
        self.validate(v)?;
        Ok(self.neighbor_masks(v.0).len())
    }

    /// Adjacency by the symmetric-difference rule.
    pub fn adjacent(&self, a: TokenVertex, b: TokenVertex) -> bool {
        let diff = a.0 ^ b.0;
        if diff.count_ones() != 2 || a.len() != b.len() {
            return false;
        }
        let u = diff.trailing_zeros();
        let v = 63 - diff.leading_zeros();
        self.base.has_edge(u, v)
    }

    pub fn edge_count(&self) -> u64 {
        match &self.explicit {
            Some(adj) => adj.edge_count() as u64,
            None => {
                let support = self.base.label_mask();
                let n = self.base.vertex_count() as u32;
                let k = self.k;
                let total = par::sum_range(self.vertex_count as usize, |r| {
                    let m = unrank_mask(r as u64, n, k).expect("rank in range");
                    self.neighbor_masks(deposit_bits(m, support)).len() as u64
                });
                total / 2
            }
        }
    }

    /// Graphviz rendering; node ids are colex ranks.
    pub fn to_dot(&self) -> Result<String> {
        let adj = self.adjacency()?;
        let mut out = String::new();
        let name = format!("F{}_{}_{}", self.k, self.base.family(), self.base.parameter());
        writeln!(out, "graph {name} {{").unwrap();
        for (r, v) in self.vertices().enumerate() {
            writeln!(out, "  {r} [label=\"{v}\"];").unwrap();
        }
        for (u, v) in adj.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }

    pub fn to_json(&self) -> Result<GraphJson> {
        let adj = self.adjacency()?;
        Ok(GraphJson {
            family: self.base.family(),
            n: self.base.parameter(),
            k: self.k,
            vertices: self.vertices().map(TokenVertex::members).collect(),
            edges: adj.edges().into_iter().map(|(u, v)| [u as u64, v as u64]).collect(),
        })
    }
}

/// On-disk graph format: member lists plus edges between their indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<[u64; 2]>,
}

impl GraphJson {
    /// Adjacency list over vertex indices, plus a lookup from sorted member list to index.
    pub fn to_adjacency(&self) -> Result<(AdjacencyList, HashMap<Vec<u32>, usize>)> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, members) in self.vertices.iter().enumerate() {
            let mut key = members.clone();
            key.sort_unstable();
            if index.insert(key, i).is_some() {
                return invalid(format!("duplicate vertex {}", format_members(members)));
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&[u, v]| (u as usize, v as usize))
            .collect();
        let adj = AdjacencyList::from_edges(self.vertices.len(), &edges)?;
        Ok((adj, index))
    }
}
