use proptest::prelude::*;

use mc_lab::coloring::EdgeColoring;
use mc_lab::solver::{mc_exact, mc_exact_with, mc_lower_bound, mc_oracle_partitions, SolveOptions};
use mc_lab::{choose2, Graph};

/// Random connected graph: a random labeled tree (each vertex hangs off an
/// earlier one) plus a random subset of the remaining pairs.
fn connected_graph(max_n: usize, density: f64) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extras = prop::collection::vec(prop::bool::weighted(density), choose2(n));
        (Just(n), parents, extras).prop_map(|(n, parents, extras)| {
            let mut g = Graph::from_edges(n, parents.iter().enumerate().map(|(i, &p)| (i + 1, p))).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extras[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in connected_graph(10, 0.4)) {
        let text = g.to_graph6();
        let back = Graph::parse_graph6(&text).unwrap();
        prop_assert_eq!(back.to_graph6(), text);
        prop_assert_eq!(back, g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn merging_classes_keeps_mc(g in connected_graph(7, 0.5), a in 0usize..64, b in 0usize..64) {
        let (_, col) = mc_lower_bound(&g).unwrap();
        prop_assert!(col.verify_mc().is_ok());
        let c = col.color_count();
        let (a, b) = (a % c, b % c);
        let merged: Vec<usize> = col.colors().iter().map(|&x| if x == b { a } else { x }).collect();
        let coarse = EdgeColoring::new(g.clone(), merged).unwrap();
        prop_assert!(coarse.verify_mc().is_ok());
    }

    #[test]
    fn exact_agrees_with_oracle(g in connected_graph(7, 0.3)) {
        prop_assume!(g.m() <= 11);
        let oracle = mc_oracle_partitions(&g).unwrap();
        prop_assert_eq!(mc_exact(&g).unwrap().value, oracle);
        prop_assert_eq!(mc_exact_with(&g, &SolveOptions::pure()).unwrap().value, oracle);
    }

    #[test]
    fn certificates_are_sound(g in connected_graph(9, 0.6)) {
        let cert = mc_exact_with(&g, &SolveOptions::pure()).unwrap();
        let col = &cert.coloring;
        prop_assert!(col.verify_mc().is_ok());
        prop_assert!(col.classes_are_trees());
        prop_assert!(col.is_simple().unwrap());
        prop_assert!(col.classes_have_nonadjacent_pair());
        prop_assert_eq!(col.color_count(), cert.value);
        prop_assert_eq!(mc_exact(&g).unwrap().value, cert.value);
    }
}
