//! Exhaustive and randomized sweeps over the small-graph corpus.

use rayon::prelude::*;

use domsub::domination::{
    domination_number, gamma, gamma_bruteforce, gamma_bruteforce_capped, gamma_forced, gamma_tree,
    is_dominating, no_gamma_set_vertices,
};
use domsub::generators::{
    cycle, enumerate_graphs, enumerate_trees, labeled_tree_count, path, random_connected_graph,
    random_tree, tree_by_index, Seed,
};
use domsub::subdivision::{gamma_profile, msd};
use domsub::Graph;

fn connected_up_to(n: usize) -> Vec<Graph> {
    (2..=n)
        .flat_map(|k| enumerate_graphs(k).unwrap().filter(Graph::is_connected))
        .collect()
}

#[test]
fn subdivision_sizes_on_all_small_graphs() {
    (1..=6).for_each(|n| {
        enumerate_graphs(n).unwrap().par_bridge().for_each(|g| {
            for &e in g.edges() {
                for t in 1..=3 {
                    let h = g.subdivide(e, t).unwrap();
                    assert_eq!((h.n(), h.m()), (g.n() + t, g.m() + t), "{g:?} {e} {t}");
                }
            }
        });
    });
}

#[test]
fn subdividing_paths_and_cycles_gives_longer_ones() {
    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = g.vertices().map(|v| g.adj(v).len()).collect();
        d.sort_unstable();
        d
    }
    for n in 3..15 {
        let c = cycle(n).unwrap();
        let p = path(n).unwrap();
        for &e in c.edges() {
            let h = c.subdivide(e, 1).unwrap();
            assert!(h.is_connected());
            assert_eq!(degree_sequence(&h), degree_sequence(&cycle(n + 1).unwrap()));
        }
        for &e in p.edges() {
            let h = p.subdivide(e, 1).unwrap();
            assert!(h.is_tree());
            assert_eq!(degree_sequence(&h), degree_sequence(&path(n + 1).unwrap()));
        }
    }
}

#[test]
fn branch_and_bound_matches_oracle_on_random_graphs() {
    (0..1000u64).into_par_iter().for_each(|s| {
        let n = 4 + (s as usize % 13);
        let max = n * (n - 1) / 2;
        let m = n - 1 + (s as usize * 31) % (max - n + 2);
        let g = random_connected_graph(n, m, Seed(s)).unwrap();
        let bnb = gamma(&g);
        assert!(bnb.witness.certifies(&g));
        assert_eq!(bnb.gamma, gamma_bruteforce(&g).unwrap().gamma, "{g:?}");
    });
}

#[test]
fn tree_dp_matches_oracle_on_all_small_trees() {
    let check = |t: Graph| {
        let dp = gamma_tree(&t).unwrap();
        assert!(is_dominating(&t, dp.witness.vertices()));
        assert_eq!(dp.gamma, gamma_bruteforce(&t).unwrap().gamma, "{t:?}");
    };
    for n in 2..=8 {
        (0..labeled_tree_count(n))
            .into_par_iter()
            .for_each(|i| check(tree_by_index(n, i).unwrap()));
    }
    // n = 9 has 9^7 labeled trees, so only every 97th index is checked
    (0..labeled_tree_count(9) / 97)
        .into_par_iter()
        .for_each(|i| check(tree_by_index(9, i * 97).unwrap()));
}

#[test]
fn tree_dp_scales_to_large_trees() {
    let t = random_tree(2000, Seed(1)).unwrap();
    let r = gamma_tree(&t).unwrap();
    assert!(r.witness.certifies(&t));
    assert_eq!(gamma_tree(&path(3000).unwrap()).unwrap().gamma, 1000);
}

/// Every γ-set of `g` by brute force, as membership flags.
fn vertices_in_some_gamma_set(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let gamma = gamma_bruteforce(g).unwrap().gamma;
    let mut member = vec![false; n];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != gamma {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_dominating(g, &set) {
            for v in set {
                member[v] = true;
            }
        }
    }
    member
}

#[test]
fn never_in_gamma_set_matches_enumeration() {
    connected_up_to(6).par_iter().for_each(|g| {
        let member = vertices_in_some_gamma_set(g);
        let expected: Vec<usize> = g.vertices().filter(|&v| !member[v]).collect();
        assert_eq!(no_gamma_set_vertices(g), expected, "{g:?}");
    });
    for s in 0..100 {
        let t = random_tree(12, Seed(s)).unwrap();
        let member = vertices_in_some_gamma_set(&t);
        let expected: Vec<usize> = t.vertices().filter(|&v| !member[v]).collect();
        assert_eq!(no_gamma_set_vertices(&t), expected);
    }
}

#[test]
fn forced_gamma_is_at_least_gamma() {
    connected_up_to(6).par_iter().for_each(|g| {
        let base = gamma(g).gamma;
        for v in g.vertices() {
            let r = gamma_forced(g, &[v]).unwrap();
            assert!(r.gamma >= base);
            assert!(r.witness.vertices().contains(&v));
        }
    });
}

#[test]
fn oracle_cap_is_configurable() {
    let g = path(25).unwrap();
    assert!(gamma_bruteforce(&g).is_err());
    assert_eq!(gamma_bruteforce_capped(&g, 25).unwrap().gamma, 9);
}

#[test]
fn strong_support_forces_msd_one() {
    connected_up_to(6)
        .par_iter()
        .filter(|g| g.has_strong_support())
        .for_each(|g| assert_eq!(msd(g).unwrap().msd, 1, "{g:?}"));
    for s in 0..300 {
        let t = random_tree(14, Seed(s)).unwrap();
        if t.has_strong_support() {
            assert_eq!(msd(&t).unwrap().msd, 1);
        }
    }
}

#[test]
fn exhaustive_msd_bound_up_to_six() {
    connected_up_to(6)
        .into_par_iter()
        .for_each(|g| {
            let base = domination_number(&g);
            for &e in g.edges() {
                assert!(domination_number(&g.subdivide(e, 3).unwrap()) > base, "{g:?} {e}");
            }
        });
}

/// Exploratory: whether γ(G_{e,t}) can rise above γ(G) and then fall back as
/// `t` grows. Logged, not asserted.
#[test]
fn gamma_profile_monotonicity_scan() {
    let corpus = connected_up_to(6);
    let odd: Vec<String> = corpus
        .par_iter()
        .flat_map_iter(|g| {
            let base = domination_number(g);
            g.edges()
                .iter()
                .filter_map(|&e| {
                    let p = gamma_profile(g, e).unwrap();
                    let raised_then_back = (0..3).any(|i| p[i] > base && p[i + 1..].contains(&base));
                    let decreasing = p.windows(2).any(|w| w[1] < w[0]);
                    (raised_then_back || decreasing).then(|| format!("{e} {p:?} in {g:?}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    println!(
        "gamma profile scan: {} non-monotone (graph, edge) pairs over {} graphs",
        odd.len(),
        corpus.len()
    );
    for line in odd.iter().take(10) {
        println!("  {line}");
    }
}

#[test]
fn enumerated_trees_are_distinct_trees() {
    for n in 2..=7 {
        let mut lists: Vec<String> = enumerate_trees(n).unwrap().map(|t| {
            assert!(t.is_tree());
            t.to_edge_list()
        }).collect();
        assert_eq!(lists.len() as u64, (n as u64).pow(n as u32 - 2));
        lists.sort();
        lists.dedup();
        assert_eq!(lists.len() as u64, (n as u64).pow(n as u32 - 2));
    }
}
