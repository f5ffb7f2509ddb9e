use std::collections::BTreeMap;

use super::{theoretical_gamma, ConstructionOptions, METHOD_STAR_FK};
use crate::combinatorics::{deposit_bits, Combinations};
use crate::coverings::{greedy_cover_general, DEFAULT_COVER_BUDGET};
use crate::domination::DominationCertificate;
use crate::error::{invalid, Result};
use crate::graph::{residue_class, BaseGraph, Family};
use crate::token::{Mode, TokenGraph, TokenVertex};

/// `D_ij = (V_0 ∖ {{0,i},{0,j}}) ∪ {{i,j}}`, a dominating set of `F_2(S_n)`
/// with `n − 1` vertices.
pub fn star_f2_construction(n: u32, i: u32, j: u32) -> Result<Vec<TokenVertex>> {
    if !(2..=63).contains(&n) {
        return invalid(format!("star F_2 construction needs 2 <= n <= 63, got {n}"));
    }
    if !(1 <= i && i < j && j <= n) {
        return invalid(format!("need 1 <= i < j <= {n}, got i={i}, j={j}"));
    }
    let mut out: Vec<TokenVertex> = (1..=n)
        .filter(|&t| t != i && t != j)
        .map(|t| TokenVertex(1 | 1 << t))
        .collect();
    out.push(TokenVertex(1 << i | 1 << j));
    out.sort_unstable();
    Ok(out)
}

pub fn smallest_prime_factor(m: u64) -> Result<u64> {
    if m < 2 {
        return invalid(format!("{m} has no prime factor"));
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return Ok(d);
        }
        d += 1;
    }
    Ok(m)
}

/// Intermediate sets of the residue construction for `F_k(S_n)`.
///
/// `partition` and `covers` are keyed by `(i, j)`: the dominant residue
/// class `i` of `A ∖ {0}` and its multiplicity `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarFkPlan {
    pub n: u32,
    pub k: u32,
    /// Smallest prime dividing `k − 1`.
    pub p: u32,
    /// `{A ∋ 0 : Σ A ≢ 1 (mod p)}`.
    pub d1: Vec<TokenVertex>,
    /// The classes `V'_ij` of `V_0 ∖ D_1`.
    pub partition: BTreeMap<(u32, u32), Vec<TokenVertex>>,
    /// `(j+1)`-subsets of residue class `i` covering all its `j`-subsets.
    /// Absent when the class is too small to host a block.
    pub covers: BTreeMap<(u32, u32), Vec<Vec<u32>>>,
    pub d2: Vec<TokenVertex>,
    /// `{x ∈ [n] : x ≡ i (mod p)}`.
    pub residue_classes: BTreeMap<u32, Vec<u32>>,
}

impl StarFkPlan {
    /// `D_1 ∪ D_2`, deduplicated, colex order.
    pub fn dominating_set(&self) -> Vec<TokenVertex> {
        let mut all: Vec<TokenVertex> = self.d1.iter().chain(&self.d2).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

fn dominant_class(rest: u64, p: u32) -> (u32, u32) {
    let mut counts = vec![0u32; p as usize];
    let mut bits = rest;
    while bits != 0 {
        counts[(bits.trailing_zeros() % p) as usize] += 1;
        bits &= bits - 1;
    }
    let best = *counts.iter().max().expect("p >= 2");
    let i = counts.iter().position(|&c| c == best).expect("max exists");
    (i as u32, best)
}

/// Builds `D_1`, the partition `V'_ij`, the covers `U'_ij` and `D_2`.
///
/// `D'_ij` is generated per vertex: each `A ∈ V'_ij` has its class-`i`
/// part `X` replaced by the colex-least cover block containing `X`, which
/// drops `0` and yields a neighbor of `A`. If a residue class has no room
/// for a `(j+1)`-block, the vertices of that class go into `D_2` directly.
pub fn star_fk_plan(n: u32, k: u32) -> Result<StarFkPlan> {
    if k < 3 {
        return invalid(format!("star F_k construction needs k >= 3 (use the F_2 construction for k=2), got k={k}"));
    }
    if 2 * k > n || n > 63 {
        return invalid(format!("star F_k construction needs 3 <= k <= n/2 and n <= 63, got n={n}, k={k}"));
    }
    let p = smallest_prime_factor((k - 1) as u64)? as u32;
    let leaves = ((1u64 << n) - 1) << 1;

    let residue_classes: BTreeMap<u32, Vec<u32>> = (0..p).map(|i| (i, residue_class(n, p, i))).collect();
    let class_masks: Vec<u64> = (0..p)
        .map(|i| residue_classes[&i].iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();

    let mut d1 = Vec::new();
    let mut partition: BTreeMap<(u32, u32), Vec<TokenVertex>> = BTreeMap::new();
    for m in Combinations::new(n, k - 1) {
        let rest = deposit_bits(m, leaves);
        let sum: u64 = crate::combinatorics::mask_members(rest).iter().map(|&x| x as u64).sum();
        let vertex = TokenVertex(rest | 1);
        if sum % p as u64 != 1 % p as u64 {
            d1.push(vertex);
        } else {
            partition.entry(dominant_class(rest, p)).or_default().push(vertex);
        }
    }

    let mut covers = BTreeMap::new();
    let mut d2 = Vec::new();
    for (&(i, j), members) in &partition {
        let class = &residue_classes[&i];
        if j as usize + 1 > class.len() {
            d2.extend(members.iter().copied());
            continue;
        }
        let design = greedy_cover_general(class.len() as u32, j + 1, j, DEFAULT_COVER_BUDGET)?;
        let blocks: Vec<u64> = design
            .block_masks()
            .iter()
            .map(|&b| deposit_bits(b >> 1, class_masks[i as usize]))
            .collect();
        for a in members {
            let rest = a.0 & !1;
            let x = rest & class_masks[i as usize];
            let block = blocks
                .iter()
                .find(|&&b| b & x == x)
                .expect("the cover contains every j-subset of the class");
            d2.push(TokenVertex((rest & !x) | block));
        }
        covers.insert((i, j), design.relabel(class));
    }
    d2.sort_unstable();
    d2.dedup();
    Ok(StarFkPlan {
        n,
        k,
        p,
        d1,
        partition,
        covers,
        d2,
        residue_classes,
    })
}

/// Residue construction on `F_k(S_n)` with its certificate.
pub fn star_fk_construction(
    n: u32,
    k: u32,
    options: &ConstructionOptions,
) -> Result<(DominationCertificate, StarFkPlan)> {
    let plan = star_fk_plan(n, k)?;
    let tg = TokenGraph::build(BaseGraph::star(n)?, k, Mode::Implicit)?;
    let bounds = theoretical_gamma(Family::Star, n, k)?;
    let set = plan.dominating_set();
    let optimal = set.len() as u64 <= bounds.lower;
    let cert = DominationCertificate::new(&tg, METHOD_STAR_FK, set, optimal, bounds.lower, options.verify_budget)?;
    Ok((cert, plan))
}

/// The least vertex of `F_k(S_n)` omitting `0` with no neighbor in `d1`.
pub fn d1_undominated_witness(plan: &StarFkPlan) -> Option<TokenVertex> {
    let d1: std::collections::HashSet<u64> = plan.d1.iter().map(|v| v.0).collect();
    let leaves = ((1u64 << plan.n) - 1) << 1;
    Combinations::new(plan.n, plan.k)
        .map(|m| deposit_bits(m, leaves))
        .find(|&a| {
            let mut bits = a;
            while bits != 0 {
                let x = bits & bits.wrapping_neg();
                bits &= bits - 1;
                if d1.contains(&((a & !x) | 1)) {
                    return false;
                }
            }
            true
        })
        .map(TokenVertex)
}
