use proptest::prelude::*;

use domsub::domination::{gamma, gamma_bruteforce, is_dominating};
use domsub::generators::{random_connected_graph, random_tree, Seed};
use domsub::{Edge, Graph};

/// Connected graph on `3..=max_n` vertices with a random edge count.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, pick, seed)| {
        let max = n * (n - 1) / 2;
        let m = n - 1 + (pick as usize) % (max - n + 2);
        random_connected_graph(n, m, Seed(seed)).unwrap()
    })
}

/// Arbitrary simple graph, possibly disconnected.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(g in any_graph(9)) {
        for u in g.vertices() {
            for &v in g.neighbors(u).unwrap() {
                prop_assert!(g.neighbors(v).unwrap().contains(&u));
            }
        }
        let degree_sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(9)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn subdivision_counts_and_ids(g in connected_graph(9), pick in any::<usize>(), t in 1usize..=3) {
        let e = g.edges()[pick % g.m()];
        let h = g.subdivide(e, t).unwrap();
        prop_assert_eq!(h.n(), g.n() + t);
        prop_assert_eq!(h.m(), g.m() + t);
        prop_assert!(h.is_connected());
        prop_assert!(!h.has_edge(e));
        // original vertices keep their other neighbors
        for v in g.vertices() {
            for &u in g.adj(v) {
                if Edge::new(u, v) != e {
                    prop_assert!(h.has_edge(Edge::new(u, v)));
                }
            }
        }
        prop_assert!(h.distance(e.a, e.b).unwrap().unwrap() <= t + 1);
    }

    #[test]
    fn vertex_class_implications(g in any_graph(9)) {
        prop_assume!(g.is_connected());
        for f in g.classify_vertices() {
            if f.strong_support {
                prop_assert!(f.support);
            }
            if f.support && f.leaf {
                prop_assert_eq!(g.n(), 2);
            }
        }
    }

    #[test]
    fn witness_dominates(g in any_graph(10)) {
        let r = gamma(&g);
        prop_assert!(is_dominating(&g, r.witness.vertices()));
        prop_assert!(r.witness.certifies(&g));
        prop_assert_eq!(r.gamma, gamma_bruteforce(&g).unwrap().gamma);
    }

    #[test]
    fn single_subdivision_never_lowers_gamma(g in connected_graph(9), pick in any::<usize>()) {
        let e = g.edges()[pick % g.m()];
        prop_assert!(gamma(&g.subdivide(e, 1).unwrap()).gamma >= gamma(&g).gamma);
    }

    #[test]
    fn random_trees_are_trees(n in 2usize..40, seed in any::<u64>()) {
        let t = random_tree(n, Seed(seed)).unwrap();
        prop_assert!(t.is_tree());
        prop_assert_eq!(t.n(), n);
    }
}
