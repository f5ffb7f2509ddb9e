//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the subset ranking, token-graph builder or
//! solvers of the library; subsets are enumerated by plain recursion.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokendom::{AdjacencyList, BaseGraph, Graph};

/// All `k`-subsets of `items` as sorted lists, in colex order.
pub fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    // colex: compare from the largest element down
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Token-graph edges by testing every pair for a symmetric difference that
/// is an edge of the base graph. Indices follow [`subsets`] order.
pub fn brute_force_token_edges(base: &BaseGraph, k: usize) -> (Vec<Vec<u32>>, Vec<(usize, usize)>) {
    let verts = subsets(base.labels(), k);
    let mut edges = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            let only_i: Vec<u32> = verts[i].iter().copied().filter(|x| !verts[j].contains(x)).collect();
            let only_j: Vec<u32> = verts[j].iter().copied().filter(|x| !verts[i].contains(x)).collect();
            if only_i.len() == 1 && only_j.len() == 1 && base.has_edge(only_i[0], only_j[0]) {
                edges.push((i, j));
            }
        }
    }
    (verts, edges)
}

/// Domination number by trying every subset in order of size.
pub fn naive_domination_number<G: Graph>(g: &G) -> usize {
    let n = g.vertex_count();
    assert!(n <= 24, "naive search is for tiny graphs");
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    fn hit(closed: &[u32], full: u32, need: usize, start: usize, acc: u32) -> bool {
        if acc == full {
            return true;
        }
        if need == 0 {
            return false;
        }
        (start..closed.len()).any(|v| hit(closed, full, need - 1, v + 1, acc | closed[v]))
    }
    (0..=n).find(|&s| hit(&closed, full, s, 0, 0)).expect("V dominates itself")
}

/// `G(n, p)` on labels `0..n` from a fixed seed.
pub fn random_base_graph(n: u32, p: f64, seed: u64) -> BaseGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<u32> = (0..n).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    BaseGraph::custom(&labels, &edges).unwrap()
}

/// Random adjacency list, for oracle runs on plain graphs.
pub fn random_graph(n: usize, p: f64, seed: u64) -> AdjacencyList {
    random_base_graph(n as u32, p, seed).to_adjacency()
}
