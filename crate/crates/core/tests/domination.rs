mod common;

use proptest::prelude::*;
use tokendom::domination::{
    degree_bounds, exact_min_dominating, greedy_dominating, greedy_maximal_independent, is_dominating,
    is_dominating_token, is_independent, is_maximal_independent, mantel_lower_bound_f3, token_bounds,
    DominationCheck, SolverOptions,
};
use tokendom::{AdjacencyList, BaseGraph, Graph, Mode, TokenGraph, TokenVertex};

fn f(base: BaseGraph, k: u32) -> AdjacencyList {
    TokenGraph::build(base, k, Mode::Explicit).unwrap().adjacency().unwrap().clone()
}

#[test]
fn trivial_sets() {
    let g = f(BaseGraph::star(4).unwrap(), 2);
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    assert!(is_dominating(&g, &all).unwrap().is_dominating());
    assert_eq!(is_dominating(&g, &[]).unwrap(), DominationCheck::Undominated(0));
    assert!(is_dominating(&g, &[99]).is_err());
}

#[test]
fn d12_in_star_four() {
    let tg = TokenGraph::build(BaseGraph::star(4).unwrap(), 2, Mode::Implicit).unwrap();
    let d: Vec<TokenVertex> = [[0, 3], [0, 4], [1, 2]]
        .iter()
        .map(|m| TokenVertex::from_members(m).unwrap())
        .collect();
    assert!(is_dominating_token(&tg, &d).unwrap().is_dominating());
    assert!(!is_dominating_token(&tg, &d[..2]).unwrap().is_dominating());
}

#[test]
fn greedy_examples() {
    assert_eq!(greedy_dominating(&BaseGraph::star(5).unwrap().to_adjacency()), vec![0]);
    let g = f(BaseGraph::complete(6).unwrap(), 2);
    assert!(greedy_dominating(&g).len() >= 3);
    let mis = greedy_maximal_independent(&BaseGraph::complete(7).unwrap().to_adjacency());
    assert_eq!(mis.len(), 1);
    let f2k5 = f(BaseGraph::complete(5).unwrap(), 2);
    assert!(greedy_maximal_independent(&f2k5).len() <= 2);
}

#[test]
fn degree_bound_examples() {
    let f3k7 = TokenGraph::build(BaseGraph::complete(7).unwrap(), 3, Mode::Implicit).unwrap();
    assert_eq!(token_bounds(&f3k7).max_degree_lower, 3);
    // Δ(F_k(S_n)) = n − k + 1
    let f2s5 = TokenGraph::build(BaseGraph::star(5).unwrap(), 2, Mode::Implicit).unwrap();
    assert_eq!(token_bounds(&f2s5).max_degree_lower, 3);
    let f2s6 = TokenGraph::build(BaseGraph::star(6).unwrap(), 2, Mode::Implicit).unwrap();
    assert_eq!(token_bounds(&f2s6).max_degree_lower, 4);
    assert_eq!(degree_bounds(&BaseGraph::complete(2).unwrap().to_adjacency()).min_degree_log_upper, None);
}

#[test]
fn mantel_examples_and_solver() {
    assert_eq!(mantel_lower_bound_f3(14).unwrap(), 14);
    assert_eq!(mantel_lower_bound_f3(6).unwrap(), 2);
    assert_eq!(mantel_lower_bound_f3(7).unwrap(), 3);
    for n in 4..=8 {
        let g = f(BaseGraph::complete(n).unwrap(), 3);
        let out = exact_min_dominating(&g, &SolverOptions::default()).unwrap();
        assert!(out.optimal);
        assert!(mantel_lower_bound_f3(n).unwrap() <= out.set.len() as u64, "n={n}");
    }
}

#[test]
fn solver_examples() {
    for (base, k, want) in [
        (BaseGraph::star(6).unwrap(), 2, 5),
        (BaseGraph::complete(7).unwrap(), 2, 3),
        (BaseGraph::complete(6).unwrap(), 3, 2),
    ] {
        let g = f(base, k);
        let out = exact_min_dominating(&g, &SolverOptions::default()).unwrap();
        assert!(out.optimal && out.lower_bound <= out.set.len() as u64);
        assert_eq!(out.set.len(), want);
    }
}

fn graph_strategy() -> impl Strategy<Value = AdjacencyList> {
    (1usize..=16, 0.05f64..0.7, any::<u64>()).prop_map(|(n, p, s)| common::random_graph(n, p, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_exhaustive(g in graph_strategy()) {
        let out = exact_min_dominating(&g, &SolverOptions::default()).unwrap();
        prop_assert!(out.optimal);
        prop_assert!(is_dominating(&g, &out.set).unwrap().is_dominating());
        prop_assert_eq!(out.set.len(), common::naive_domination_number(&g));
    }

    #[test]
    fn bounds_bracket_gamma(g in graph_strategy()) {
        let gamma = exact_min_dominating(&g, &SolverOptions::default()).unwrap().set.len() as u64;
        let b = degree_bounds(&g);
        let greedy = greedy_dominating(&g);
        prop_assert!(is_dominating(&g, &greedy).unwrap().is_dominating());
        prop_assert!(b.max_degree_lower <= gamma && gamma <= greedy.len() as u64);
        if let Some(up) = b.min_degree_log_upper {
            prop_assert!(gamma <= up);
            prop_assert!(greedy.len() as u64 <= up);
            prop_assert!(b.max_degree_lower <= up);
        }
    }

    #[test]
    fn greedy_mis_is_maximal_and_dominating(g in graph_strategy()) {
        let mis = greedy_maximal_independent(&g);
        prop_assert!(is_independent(&g, &mis).unwrap());
        prop_assert!(is_maximal_independent(&g, &mis).unwrap());
        prop_assert!(is_dominating(&g, &mis).unwrap().is_dominating());
    }
}
