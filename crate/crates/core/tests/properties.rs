use edge_ideal_lab::census::canonical_form;
use edge_ideal_lab::covers::{is_unmixed, maximal_independent_sets, minimal_vertex_covers};
use edge_ideal_lab::homology::{
    duval_scm, hochster_betti_with, km_subadditivity_check, reg_lower_bound_woodroofe, regularity, reisner_cm, Budget,
    Field,
};
use edge_ideal_lab::io::{parse_edge_json, parse_graph6, write_edge_json, write_graph6};
use edge_ideal_lab::matchings::{
    induced_matching_number, matching_number, maximum_induced_matching, min_matching_number, minimum_maximal_matching,
    pair_induced_with_maximal, Matching,
};
use edge_ideal_lab::resolutions::{lyubeznik_betti, MonomialList};
use edge_ideal_lab::structure::{
    is_shedding_vertex, is_shedding_vertex_direct, is_vertex_decomposable, shedding_by_containment,
};
use edge_ideal_lab::{Exec, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let e: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn matching_chain(g in graph(10)) {
        let (ind, min, mat) = (induced_matching_number(&g), min_matching_number(&g), matching_number(&g));
        prop_assert!(ind <= min && min <= mat && mat <= 2 * min);
        prop_assert_eq!(maximum_induced_matching(&g).len(), ind);
        let mm = minimum_maximal_matching(&g);
        prop_assert!(mm.is_maximal);
        prop_assert_eq!(mm.len(), min);
    }

    #[test]
    fn pairing_is_injective(g in graph(10)) {
        let m = maximum_induced_matching(&g);
        let mp = minimum_maximal_matching(&g);
        let idx = pair_induced_with_maximal(&m, &mp).unwrap();
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), idx.len());
        for (k, &i) in idx.iter().enumerate() {
            let (a, b) = m.edges.edges()[k];
            let (c, d) = mp.edges.edges()[i];
            prop_assert!(a == c || a == d || b == c || b == d);
        }
    }

    #[test]
    fn invariants_ignore_labels((g, perm) in graph_and_perm(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(induced_matching_number(&g), induced_matching_number(&h));
        prop_assert_eq!(min_matching_number(&g), min_matching_number(&h));
        prop_assert_eq!(hochster_betti_with(&g, Field::Gf2, Budget::default()).unwrap(),
            hochster_betti_with(&h, Field::Gf2, Budget::default()).unwrap());
        prop_assert_eq!(is_unmixed(&g), is_unmixed(&h));
    }

    #[test]
    fn io_round_trips(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_json(&write_edge_json(&g)).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_edges(g in graph(10), mask in any::<u64>()) {
        let w = VertexSet(mask) & g.vertices();
        let (sub, map) = g.induced_subgraph(w).unwrap();
        let mut got: Vec<_> = sub.edges().into_iter().map(|(a, b)| (map[a], map[b])).collect();
        got.sort_unstable();
        let want: Vec<_> = g.edges().into_iter().filter(|&(a, b)| w.contains(a) && w.contains(b)).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn covers_complement_independent_sets(g in graph(10)) {
        let full = g.vertices();
        let mut a: Vec<_> = maximal_independent_sets(&g).into_iter().map(|s| full & !s).collect();
        a.sort();
        prop_assert_eq!(a, minimal_vertex_covers(&g));
    }

    #[test]
    fn regularity_bounds(g in graph(9)) {
        let reg = regularity(&g, Field::Gf2).unwrap();
        prop_assert!(induced_matching_number(&g) <= reg);
        prop_assert!(reg <= min_matching_number(&g));
        prop_assert!(reg_lower_bound_woodroofe(&g).unwrap() <= reg);
        prop_assert_eq!(reg, regularity(&g, Field::Rational).unwrap());
    }

    #[test]
    fn sequential_matches_parallel(g in graph(10)) {
        let seq = hochster_betti_with(&g, Field::Gf2, Budget { exec: Exec::Sequential, ..Budget::default() }).unwrap();
        let par = hochster_betti_with(&g, Field::Gf2, Budget { exec: Exec::Parallel, ..Budget::default() }).unwrap();
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn subadditivity_on_splits(g in graph(9), seed in any::<u64>()) {
        let edges = g.edges();
        prop_assume!(edges.len() >= 2);
        let mut parts = vec![Vec::new(), Vec::new()];
        for (i, e) in edges.into_iter().enumerate() {
            parts[((seed >> (i % 64)) & 1) as usize].push(e);
        }
        parts.retain(|p: &Vec<_>| !p.is_empty());
        prop_assert!(km_subadditivity_check(&g, &parts, Field::Gf2).unwrap().holds);
    }

    #[test]
    fn lyubeznik_equals_hochster(g in graph(7)) {
        prop_assume!(g.edge_count() <= 14);
        let m = MonomialList::from_graph(&g);
        for f in [Field::Gf2, Field::Rational] {
            prop_assert_eq!(lyubeznik_betti(&m, f).unwrap(), hochster_betti_with(&g, f, Budget::default()).unwrap());
        }
    }

    #[test]
    fn shedding_shortcut_is_sound(g in graph(9)) {
        for v in g.vertices().iter() {
            prop_assert_eq!(is_shedding_vertex(&g, v), is_shedding_vertex_direct(&g, v));
            if shedding_by_containment(&g, v) {
                prop_assert!(is_shedding_vertex_direct(&g, v));
            }
        }
    }

    #[test]
    fn cm_hierarchy(g in graph(8)) {
        let vd = is_vertex_decomposable(&g).unwrap();
        if vd {
            prop_assert!(duval_scm(&g, Field::Gf2).unwrap());
        }
        if vd && is_unmixed(&g) {
            prop_assert!(reisner_cm(&g, Field::Gf2).unwrap());
        }
        if reisner_cm(&g, Field::Gf2).unwrap() {
            prop_assert!(is_unmixed(&g));
            prop_assert!(duval_scm(&g, Field::Gf2).unwrap());
        }
    }
}

#[test]
fn matching_constructor_flags() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let m = Matching::new(&p4, [(0, 1), (2, 3)]).unwrap();
    assert!(m.is_maximal && !m.is_induced);
}
