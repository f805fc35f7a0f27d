use proptest::prelude::*;

use starspec::factors::{
    brute_force_isolated_toughness, find_star_factor, isolated_toughness, kano_saito_max_deficiency,
    parse_star_factor, verify_star_factor, Fraction, IsolatedToughness, SearchLimits,
};
use starspec::graph::{build_basic, extremal_g_star, parse_edge_list, to_edge_list, BasicKind};
use starspec::{ExtremalParams, Graph, VertexSet};

fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

fn random_graph(n: usize, bits: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.enumerate().filter(|(k, _)| bits >> (k % 64) & 1 == 1).map(|(_, e)| e)).unwrap()
}

#[test]
fn bipartite_toughness_is_side_ratio() {
    for a in 1..=4 {
        for b in a + 1..=6 {
            let g = complete_bipartite(a, b);
            let t = isolated_toughness(&g, &SearchLimits::toughness()).unwrap();
            assert_eq!(t.value(), Some(Fraction::new(a as u64, b as u64)), "K_{a},{b}");
        }
    }
}

#[test]
fn stars_need_enough_leaves() {
    for k in 1..=6 {
        let g = build_basic(BasicKind::Star, k + 1).unwrap();
        let limits = SearchLimits::factor();
        for m in 2..=k.max(2) {
            let f = find_star_factor(&g, m, &limits).unwrap();
            assert_eq!(f.is_some(), m <= k && k <= 2 * m, "K_1,{k} with m = {m}");
        }
        assert!(find_star_factor(&g, k + 1, &limits).unwrap().is_none());
    }
}

#[test]
fn complete_graph_has_infinite_toughness() {
    let g = build_basic(BasicKind::Complete, 6).unwrap();
    let t = isolated_toughness(&g, &SearchLimits::toughness()).unwrap();
    assert_eq!(t, IsolatedToughness::Infinite);
    assert!(t.at_least(1000, 1));
}

#[test]
fn extremal_graph_round_trips_through_edge_list() {
    let (g, _) = extremal_g_star(&ExtremalParams::new(15, 3, 2).unwrap()).unwrap();
    let text = to_edge_list(&g);
    assert_eq!(parse_edge_list(&text).unwrap(), g);
}

#[test]
fn found_factor_survives_json() {
    let (g, _) = extremal_g_star(&ExtremalParams::new(12, 2, 1).unwrap()).unwrap();
    let f = find_star_factor(&g, 2, &SearchLimits::factor()).unwrap().expect("factor exists");
    let back = parse_star_factor(&f.to_json()).unwrap();
    assert_eq!(back, f);
    assert!(verify_star_factor(&g, 2, &back));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trip(n in 1usize..20, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn toughness_witness_is_genuine(n in 2usize..10, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        let t = isolated_toughness(&g, &SearchLimits::toughness()).unwrap();
        prop_assert_eq!(t.value(), brute_force_isolated_toughness(&g).unwrap());
        if let IsolatedToughness::Finite(w) = t {
            let s = VertexSet::from_iter(n, w.neighborhood.iter().copied());
            let rest = g.remove_vertices(&s).unwrap();
            // every vertex of T is isolated once N(T) is removed
            for &v in &w.t_set {
                prop_assert!(!s.contains(v));
                prop_assert!(w.t_set.iter().all(|&u| !g.has_edge(u, v)));
            }
            prop_assert!(rest.graph.isolated_count() >= w.t_set.len());
            prop_assert_eq!(w.ratio, Fraction::new(w.neighborhood.len() as u64, w.t_set.len() as u64));
        }
    }

    #[test]
    fn nonpositive_deficiency_gives_factor(n in 2usize..9, bits in any::<u64>(), m in 2usize..4) {
        let g = random_graph(n, bits);
        prop_assume!(g.is_connected());
        let (deficiency, _) = kano_saito_max_deficiency(&g, m, &SearchLimits::toughness()).unwrap();
        let f = find_star_factor(&g, m, &SearchLimits::factor()).unwrap();
        if deficiency <= 0 {
            prop_assert!(f.is_some());
        }
        if let Some(f) = f {
            prop_assert!(verify_star_factor(&g, m, &f));
        }
    }
}
