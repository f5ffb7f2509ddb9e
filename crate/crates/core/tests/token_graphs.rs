mod common;

use proptest::prelude::*;
use tokendom::combinatorics::binomial;
use tokendom::{BaseGraph, Error, Graph, Mode, TokenGraph, TokenVertex};

fn explicit(base: BaseGraph, k: u32) -> TokenGraph {
    TokenGraph::build(base, k, Mode::Explicit).unwrap()
}

fn tv(members: &[u32]) -> TokenVertex {
    TokenVertex::from_members(members).unwrap()
}

#[test]
fn small_counts_match_enumeration() {
    let f2s5 = explicit(BaseGraph::star(5).unwrap(), 2);
    let (verts, edges) = common::brute_force_token_edges(f2s5.base(), 2);
    assert_eq!((verts.len(), edges.len()), (15, 20));
    assert_eq!((f2s5.vertex_count(), f2s5.edge_count()), (15, 20));

    let f2k4 = explicit(BaseGraph::complete(4).unwrap(), 2);
    let adj = f2k4.adjacency().unwrap();
    assert_eq!(adj.edge_count(), 12);
    assert!((0..6).all(|v| adj.degree(v) == 4));
}

#[test]
fn one_token_graph_is_the_base() {
    for base in [
        BaseGraph::star(7).unwrap(),
        BaseGraph::complete(6).unwrap(),
        common::random_base_graph(9, 0.3, 3),
    ] {
        let f1 = explicit(base.clone(), 1);
        let adj = f1.adjacency().unwrap();
        assert_eq!(adj.edge_count(), base.edge_count());
        let mut degrees: Vec<usize> = (0..adj.vertex_count()).map(|v| adj.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, base.degree_sequence());
    }
}

#[test]
fn star_neighborhoods() {
    let tg = explicit(BaseGraph::star(5).unwrap(), 2);
    for i in 1..=5 {
        for j in i + 1..=5 {
            assert_eq!(tg.neighbors(tv(&[i, j])).unwrap(), vec![tv(&[0, i]), tv(&[0, j])]);
        }
        assert_eq!(tg.degree(tv(&[0, i])).unwrap(), 4);
    }
    let k6 = TokenGraph::build(BaseGraph::complete(6).unwrap(), 3, Mode::Implicit).unwrap();
    assert!(k6.vertices().all(|v| k6.degree(v).unwrap() == 9));
}

#[test]
fn explicit_and_implicit_agree() {
    let base = BaseGraph::star(7).unwrap();
    let e = explicit(base.clone(), 3);
    let i = TokenGraph::build(base, 3, Mode::Implicit).unwrap();
    let adj = e.adjacency().unwrap();
    for v in i.vertices() {
        let r = i.rank(v).unwrap() as usize;
        let via_oracle: Vec<usize> = i.neighbors(v).unwrap().iter().map(|&w| i.rank(w).unwrap() as usize).collect();
        let mut via_csr: Vec<usize> = adj.neighbors(r).iter().map(|&w| w as usize).collect();
        via_csr.sort_unstable();
        let mut sorted_oracle = via_oracle.clone();
        sorted_oracle.sort_unstable();
        assert_eq!(sorted_oracle, via_csr);
    }
    assert_eq!(e.edge_count(), i.edge_count());
}

#[test]
fn complement_token_counts_agree() {
    for n in 1..=10 {
        for base in [BaseGraph::star(n).unwrap(), BaseGraph::complete(n).unwrap()] {
            let order = base.vertex_count() as u32;
            for k in 1..order {
                let a = TokenGraph::build(base.clone(), k, Mode::Implicit).unwrap();
                let b = TokenGraph::build(base.clone(), order - k, Mode::Implicit).unwrap();
                assert_eq!(a.vertex_count(), binomial(order as u64, k as u64));
                assert_eq!((a.vertex_count(), a.edge_count()), (b.vertex_count(), b.edge_count()));
            }
        }
    }
}

#[test]
fn budget_and_range_errors() {
    let err = TokenGraph::build(BaseGraph::star(30).unwrap(), 15, Mode::Explicit).unwrap_err();
    assert!(matches!(err, Error::ResourceLimit { budget: "vertex budget", .. }), "{err}");
    assert!(TokenGraph::build(BaseGraph::star(30).unwrap(), 15, Mode::Implicit).is_ok());
    assert!(matches!(
        TokenGraph::build(BaseGraph::star(4).unwrap(), 0, Mode::Implicit),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        TokenGraph::build(BaseGraph::complete(4).unwrap(), 5, Mode::Implicit),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(BaseGraph::complete(0), Err(Error::InvalidParameter(_))));
}

#[test]
fn dot_and_json_exports() {
    let tg = explicit(BaseGraph::star(5).unwrap(), 2);
    let dot = tg.to_dot().unwrap();
    assert_eq!(dot.matches(" -- ").count(), 20);
    assert_eq!(dot.matches("[label=").count(), 15);
    assert!(dot.contains("\"{0,1}\""));
    let json = tg.to_json().unwrap();
    assert_eq!(json.vertices.len(), 15);
    assert_eq!(json.edges.len(), 20);
    let (adj, index) = json.to_adjacency().unwrap();
    assert_eq!(adj.edge_count(), 20);
    assert_eq!(index[&vec![0, 1]], 0);
}

fn base_strategy() -> impl Strategy<Value = BaseGraph> {
    prop_oneof![
        (1u32..=9).prop_map(|n| BaseGraph::star(n).unwrap()),
        (2u32..=10).prop_map(|n| BaseGraph::complete(n).unwrap()),
        (3u32..=10, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, s)| common::random_base_graph(n, p, s)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn edges_match_brute_force(base in base_strategy(), k_frac in 0.0f64..1.0) {
        let order = base.vertex_count() as u32;
        prop_assume!(order >= 2);
        let k = 1 + ((order - 1) as f64 * k_frac) as u32;
        let k = k.min(order - 1);
        let tg = explicit(base.clone(), k);
        let (verts, edges) = common::brute_force_token_edges(&base, k as usize);
        prop_assert_eq!(verts.len() as u64, tg.vertex_count());
        prop_assert_eq!(tg.adjacency().unwrap().edges(), edges);
    }

    #[test]
    fn neighbors_sorted_unique_symmetric(base in base_strategy(), k_frac in 0.0f64..1.0) {
        let order = base.vertex_count() as u32;
        prop_assume!(order >= 2);
        let k = (1 + ((order - 1) as f64 * k_frac) as u32).min(order - 1);
        let tg = TokenGraph::build(base, k, Mode::Implicit).unwrap();
        for v in tg.vertices() {
            let nv = tg.neighbors(v).unwrap();
            prop_assert!(nv.windows(2).all(|w| w[0] < w[1]));
            for w in nv {
                prop_assert!(tg.neighbors(w).unwrap().contains(&v));
                prop_assert!(tg.adjacent(v, w));
            }
        }
    }

    #[test]
    fn star_token_graph_splits_on_center(n in 2u32..=9, k_frac in 0.0f64..1.0) {
        let k = (1 + (n as f64 * k_frac) as u32).min(n);
        let tg = TokenGraph::build(BaseGraph::star(n).unwrap(), k, Mode::Implicit).unwrap();
        for v in tg.vertices() {
            for w in tg.neighbors(v).unwrap() {
                prop_assert_ne!(v.contains(0), w.contains(0));
            }
        }
    }
}
