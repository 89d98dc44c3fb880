use proptest::prelude::*;
use sumdist::colorer::reduce;
use sumdist::configs::first_config;
use sumdist::discharge::discharge;
use sumdist::generate::generate_subdivided;
use sumdist::{encode_graph6, parse_graph6, Graph, Rational};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..=3 * n).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = encode_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn charge_is_conserved(g in graph(14)) {
        let ledger = discharge(&g);
        prop_assert!(ledger.is_conserved());
        let total = ledger.final_weights.iter().fold(Rational::zero(), |acc, &w| acc + w);
        let expected = 2 * g.m() as i64 - 3 * g.n() as i64;
        prop_assert_eq!(total, Rational::integer(expected));
    }

    #[test]
    fn deleting_an_edge_lowers_the_profile(g in graph(12), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let cap = g.max_degree();
        let mut h = g.clone();
        h.remove_edge(u, v);
        prop_assert!(h.degree_profile(cap).unwrap().precedes(&g.degree_profile(cap).unwrap()).unwrap());
    }

    #[test]
    fn reductions_shrink_the_profile(seed in any::<u64>(), n in 2usize..12, cap in 3usize..10) {
        let g = generate_subdivided(seed, n, cap);
        let k = g.max_degree().max(6);
        let m = first_config(&g, k).unwrap().expect("sparse graphs contain a configuration");
        let plan = reduce(&g, &m).unwrap();
        prop_assert!(plan.reduced.max_degree() <= k);
        prop_assert!(plan.profile_after.precedes(&plan.profile_before).unwrap());
        prop_assert_eq!(plan.profile_before, g.degree_profile(k).unwrap());
    }
}
