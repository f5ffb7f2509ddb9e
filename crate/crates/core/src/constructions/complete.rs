use super::{theoretical_gamma, ConstructionOptions, METHOD_COMPLETE_F3, METHOD_COMPLETE_FK};
use crate::coverings::{bose_sts, greedy_cover, skolem_sts, CoveringDesign};
use crate::domination::{greedy_maximal_independent, ranks_to_vertices, DominationCertificate};
use crate::error::{invalid, Result};
use crate::graph::{BaseGraph, Family};
use crate::token::{BuildOptions, Mode, TokenGraph, TokenVertex};

/// `⌊n/2⌋` disjoint pairs `{1,2}, {3,4}, ..`, a dominating set of `F_2(K_n)`.
pub fn complete_f2_construction(n: u32) -> Result<Vec<TokenVertex>> {
    if !(2..=63).contains(&n) {
        return invalid(format!("complete F_2 construction needs 2 <= n <= 63, got {n}"));
    }
    Ok((0..n / 2)
        .map(|i| TokenVertex(1 << (2 * i + 1) | 1 << (2 * i + 2)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfMethod {
    Bose,
    Skolem,
    Greedy,
    /// Three points: the half itself is the only block.
    Single,
    /// Two points: the pair is extended by the least point of the other half.
    PairExtension,
}

/// Triples covering every pair of one half of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfCover {
    pub points: Vec<u32>,
    pub method: HalfMethod,
    pub blocks: Vec<TokenVertex>,
}

impl HalfCover {
    /// Every pair of `points` lies in some block.
    pub fn covers_all_pairs(&self) -> bool {
        self.points.iter().enumerate().all(|(a, &x)| {
            self.points[a + 1..]
                .iter()
                .all(|&y| self.blocks.iter().any(|b| b.contains(x) && b.contains(y)))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteF3 {
    pub certificate: DominationCertificate,
    pub halves: [HalfCover; 2],
}

fn half_cover(points: Vec<u32>, other_least: u32) -> Result<HalfCover> {
    let m = points.len() as u32;
    let (method, design): (HalfMethod, Option<CoveringDesign>) = match m {
        2 => (HalfMethod::PairExtension, None),
        3 => (HalfMethod::Single, Some(bose_sts(3)?)),
        _ if m % 6 == 3 => (HalfMethod::Bose, Some(bose_sts(m)?)),
        _ if m % 6 == 1 => (HalfMethod::Skolem, Some(skolem_sts(m)?)),
        _ => (HalfMethod::Greedy, Some(greedy_cover(m, 3, 2)?)),
    };
    let blocks = match design {
        Some(d) => d
            .relabel(&points)
            .iter()
            .map(|b| TokenVertex::from_members(b))
            .collect::<Result<Vec<_>>>()?,
        None => vec![TokenVertex::from_members(&[points[0], points[1], other_least])?],
    };
    Ok(HalfCover { points, method, blocks })
}

/// Splits `[n]` into `{1..⌊n/2⌋}` and the rest, covers the pairs of each
/// half by triples (Steiner systems where the half size is `1, 3 mod 6`,
/// greedy covers otherwise) and takes the union.
pub fn complete_f3_construction(n: u32, options: &ConstructionOptions) -> Result<CompleteF3> {
    if !(4..=63).contains(&n) {
        return invalid(format!("complete F_3 construction needs 4 <= n <= 63, got {n}"));
    }
    let split = n / 2;
    let low: Vec<u32> = (1..=split).collect();
    let high: Vec<u32> = (split + 1..=n).collect();
    let first = half_cover(low, split + 1)?;
    let second = half_cover(high, 1)?;
    let set: Vec<TokenVertex> = first.blocks.iter().chain(&second.blocks).copied().collect();

    let tg = TokenGraph::build(BaseGraph::complete(n)?, 3, Mode::Implicit)?;
    let bounds = theoretical_gamma(Family::Complete, n, 3)?;
    let mut unique = set.clone();
    unique.sort_unstable();
    unique.dedup();
    let optimal = unique.len() as u64 <= bounds.lower;
    let certificate =
        DominationCertificate::new(&tg, METHOD_COMPLETE_F3, set, optimal, bounds.lower, options.verify_budget)?;
    Ok(CompleteF3 {
        certificate,
        halves: [first, second],
    })
}

/// A maximal independent set of `F_k(K_n)`, which dominates and has at most
/// `C(n,k−1)/k` vertices.
pub fn complete_fk_construction(n: u32, k: u32, options: &ConstructionOptions) -> Result<DominationCertificate> {
    if k == 0 || 2 * k > n {
        return invalid(format!("complete F_k construction needs 1 <= k <= n/2, got n={n}, k={k}"));
    }
    let build = BuildOptions {
        vertex_budget: options.vertex_budget,
    };
    let tg = TokenGraph::build_with(BaseGraph::complete(n)?, k, Mode::Explicit, &build)?;
    let mis = greedy_maximal_independent(tg.adjacency()?);
    let set = ranks_to_vertices(&tg, &mis)?;
    let bounds = theoretical_gamma(Family::Complete, n, k)?;
    let optimal = set.len() as u64 <= bounds.lower;
    DominationCertificate::new(&tg, METHOD_COMPLETE_FK, set, optimal, bounds.lower, options.verify_budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::domination::{is_dominating_token, mantel_lower_bound_f3};

    fn tv(m: &[u32]) -> TokenVertex {
        TokenVertex::from_members(m).unwrap()
    }

    #[test]
    fn f2_pairs() {
        assert_eq!(
            complete_f2_construction(6).unwrap(),
            vec![tv(&[1, 2]), tv(&[3, 4]), tv(&[5, 6])]
        );
        assert_eq!(complete_f2_construction(2).unwrap(), vec![tv(&[1, 2])]);
        let d = complete_f2_construction(7).unwrap();
        assert_eq!(d.len(), 3);
        let tg = TokenGraph::build(BaseGraph::complete(7).unwrap(), 2, Mode::Implicit).unwrap();
        assert!(is_dominating_token(&tg, &d).unwrap().is_dominating());
        assert!(complete_f2_construction(1).is_err());
    }

    #[test]
    fn f3_small_cases() {
        let opts = ConstructionOptions::default();
        let six = complete_f3_construction(6, &opts).unwrap();
        assert_eq!(six.certificate.set, vec![vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(six.certificate.verified && six.certificate.optimal);

        for n in 4..=12 {
            let c = complete_f3_construction(n, &opts).unwrap();
            assert!(c.certificate.verified, "n={n}");
            assert!(c.halves.iter().all(HalfCover::covers_all_pairs), "n={n}");
        }
    }

    #[test]
    fn f3_sts_halves() {
        let opts = ConstructionOptions::default();
        let c = complete_f3_construction(14, &opts).unwrap();
        assert_eq!(c.halves[0].method, HalfMethod::Skolem);
        assert_eq!(c.certificate.size, 14);
        assert_eq!(mantel_lower_bound_f3(14).unwrap(), 14);
        assert!(c.certificate.optimal);

        let c = complete_f3_construction(18, &opts).unwrap();
        assert_eq!(c.halves[1].method, HalfMethod::Bose);
        assert_eq!(c.certificate.size, 24);
        assert!(c.halves.iter().all(HalfCover::covers_all_pairs));
    }

    #[test]
    fn fk_mis() {
        let opts = ConstructionOptions::default();
        let c = complete_fk_construction(5, 2, &opts).unwrap();
        assert!(c.size <= 2 && c.verified);
        let c = complete_fk_construction(7, 3, &opts).unwrap();
        assert!(c.size as u64 <= binomial(7, 2) / 3 && c.verified);
        let c = complete_fk_construction(6, 1, &opts).unwrap();
        assert_eq!(c.set, vec![vec![1]]);
        assert!(complete_fk_construction(6, 4, &opts).is_err());
    }
}
