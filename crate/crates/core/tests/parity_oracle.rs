mod common;

use oddcore::corpus;
use oddcore::parity::{contains_cycle_of_length, odd_girth, parity_path_exists};
use oddcore::{Graph, Parity, VertexSet};
use proptest::prelude::*;

const LIMIT: u64 = 100_000_000;

fn corpus_graphs(random: usize) -> Vec<Graph> {
    let mut gs: Vec<Graph> =
        corpus::small_fixtures(11).into_iter().map(|f| f.graph).filter(|g| g.n() >= 2 && g.is_connected()).collect();
    gs.extend(corpus::random_connected_corpus(random, 3, 11, 0x5eed));
    gs
}

fn check_paths(g: &Graph) {
    let adj = common::masks(g);
    let none = VertexSet::new();
    for u in 0..g.n() {
        let orders = common::path_orders_from(&adj, u);
        for (v, &reach) in orders.iter().enumerate().skip(u + 1) {
            for parity in [Parity::Even, Parity::Odd] {
                for bound in 1..=8 {
                    let expected = (2..=bound).any(|o| parity.matches(o) && reach >> o & 1 == 1);
                    let out = parity_path_exists(g, u, v, parity, bound, &none, LIMIT).unwrap();
                    match out.found() {
                        Some(p) => {
                            p.validate_request(g, u, v, parity, bound).unwrap();
                            assert!(expected, "{g:?} {u} {v} {parity:?} {bound}");
                        }
                        None => {
                            assert!(out.is_absent());
                            assert!(!expected, "{g:?} {u} {v} {parity:?} {bound}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn parity_paths_match_path_enumeration() {
    for g in corpus_graphs(150) {
        check_paths(&g);
    }
}

#[test]
fn forbidden_vertices_are_avoided() {
    for (i, g) in corpus::random_connected_corpus(40, 5, 10, 99).into_iter().enumerate() {
        let n = g.n();
        let forbidden: VertexSet = (0..n).filter(|v| (v + i) % 4 == 0).collect();
        let keep: VertexSet = (0..n).filter(|&v| !forbidden.contains(v)).collect();
        let (sub, map) = g.induced_subgraph(&keep).unwrap();
        let adj = common::masks(&sub);
        for a in 0..sub.n() {
            let orders = common::path_orders_from(&adj, a);
            for b in a + 1..sub.n() {
                for parity in [Parity::Even, Parity::Odd] {
                    let expected = (2..=7).any(|o| parity.matches(o) && orders[b] >> o & 1 == 1);
                    let out = parity_path_exists(&g, map[a], map[b], parity, 7, &forbidden, LIMIT).unwrap();
                    assert_eq!(out.found().is_some(), expected);
                    if let Some(p) = out.found() {
                        assert!(p.avoids(|v| forbidden.contains(v)));
                    }
                }
            }
        }
    }
}

#[test]
fn odd_girth_matches_cycle_lengths() {
    for g in corpus_graphs(150) {
        let lengths = common::cycle_lengths(&common::masks(&g));
        let shortest_odd = (3..=g.n()).step_by(2).find(|&l| lengths >> l & 1 == 1);
        let got = odd_girth(&g);
        assert_eq!(got.as_ref().map(|c| c.len()), shortest_odd, "{g:?}");
        if let Some(c) = got {
            c.validate(&g).unwrap();
        }
        assert_eq!(got_is_bipartite(&g), shortest_odd.is_none());
        for l in 3..=g.n() {
            let out = contains_cycle_of_length(&g, l, LIMIT).unwrap();
            assert_eq!(out.found().is_some(), lengths >> l & 1 == 1, "{g:?} length {l}");
            if let Some(c) = out.found() {
                c.validate(&g).unwrap();
                assert_eq!(c.len(), l);
            }
        }
    }
}

fn got_is_bipartite(g: &Graph) -> bool {
    let b = g.is_bipartite();
    b.validate(g).unwrap();
    b.is_bipartite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_search_is_relabelling_invariant(seed in any::<u64>(), rot in 1usize..10) {
        let g = corpus::random_connected(10, 0.3, seed);
        let perm: Vec<usize> = (0..10).map(|v| (v * 3 + rot) % 10).collect();
        let h = common::relabel(&g, &perm);
        for l in 3..=10 {
            let a = contains_cycle_of_length(&g, l, LIMIT).unwrap().found().is_some();
            let b = contains_cycle_of_length(&h, l, LIMIT).unwrap().found().is_some();
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(odd_girth(&g).map(|c| c.len()), odd_girth(&h).map(|c| c.len()));
    }
}

#[test]
fn corpus_is_populated() {
    let gs = corpus_graphs(150);
    assert!(gs.len() >= 250);
    assert!(gs.iter().all(|g| g.is_connected() && g.n() <= 11));
}
