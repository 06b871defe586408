//! `verify-suite`: reruns the structural checks on exhaustive and seeded
//! random corpora and stops each check at its first counterexample.

use std::time::Instant;

use domsub::generators::{
    complete, cycle, enumerate_graphs, path, random_connected_graph, random_family_f_script,
    random_tree, wheel, Seed, MAX_ENUMERATED_GRAPH_ORDER,
};
use domsub::sat_reduction::{preprocess, random_3cnf, verify_biconditional, VerifyOptions};
use domsub::subdivision::{msd_value, sd, sd_is_greater_than_one, MSD_BOUND};
use domsub::tree_class::{build_family_f, classify_tree, verify_labeling};
use domsub::{domination_number, Graph, SdValue};

use crate::report::*;
use crate::{exit, millis_since, CliError, CliResult};

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Largest order of the exhaustive graph sweep.
    pub max_n: usize,
    /// Size of each random corpus.
    pub samples: usize,
    pub seed: u64,
    /// Test hook: check a deliberately wrong bound so the failure path runs.
    pub inject_fault: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 6,
            samples: 200,
            seed: 0,
            inject_fault: false,
        }
    }
}

type Check = Result<usize, (String, Graph)>;
type NamedCheck<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn sample_seed(base: u64, stream: u64, i: usize) -> Seed {
    Seed(base.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (stream << 48) ^ i as u64)
}

/// Same formula for paths and cycles on `n >= 3` vertices.
fn path_cycle_msd(n: usize) -> usize {
    match n % 3 {
        0 => 1,
        2 => 2,
        _ => 3,
    }
}

fn closed_forms() -> Check {
    let mut cases = 0;
    for n in 3..=20 {
        for g in [path(n).unwrap(), cycle(n).unwrap()] {
            let expected = path_cycle_msd(n);
            let got = msd_value(&g).map_err(|e| (e.to_string(), g.clone()))?;
            let sd3 = sd(&g, 3).map_err(|e| (e.to_string(), g.clone()))?.sd;
            if got != expected || sd3 != SdValue::Exact(expected) {
                return Err((format!("expected msd = sd = {expected}, got msd {got}, sd {sd3:?}"), g));
            }
            cases += 1;
        }
    }
    for n in 3..=8 {
        for g in [complete(n).unwrap(), wheel(n).unwrap()] {
            let got = msd_value(&g).map_err(|e| (e.to_string(), g.clone()))?;
            if got != 1 {
                return Err((format!("expected msd 1, got {got}"), g));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn graph_corpus(opts: &SuiteOptions) -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (2..=opts.max_n)
        .flat_map(|k| enumerate_graphs(k).unwrap().filter(Graph::is_connected))
        .collect();
    for i in 0..opts.samples {
        let n = 4 + i % 7;
        let max = n * (n - 1) / 2;
        let m = n - 1 + i * 7 % (max - n + 2);
        corpus.push(random_connected_graph(n, m, sample_seed(opts.seed, 1, i)).unwrap());
    }
    corpus
}

fn msd_bound(corpus: &[Graph], bound: usize) -> Check {
    for g in corpus {
        let base = domination_number(g);
        for &e in g.edges() {
            let h = g.subdivide(e, bound).unwrap();
            if domination_number(&h) <= base {
                return Err((format!("subdividing {e} {bound} times keeps gamma at {base}"), g.clone()));
            }
        }
    }
    Ok(corpus.len())
}

fn sd_one_equivalence(corpus: &[Graph]) -> Check {
    let mut cases = 0;
    for g in corpus.iter().filter(|g| g.n() >= 3) {
        let msd = msd_value(g).map_err(|e| (e.to_string(), g.clone()))?;
        let gt_one = sd_is_greater_than_one(g).unwrap();
        if gt_one == (msd == 1) {
            return Err((format!("msd {msd} but sd > 1 is {gt_one}"), g.clone()));
        }
        cases += 1;
    }
    Ok(cases)
}

fn tree_classification(opts: &SuiteOptions) -> Check {
    for i in 0..opts.samples {
        let t = random_tree(3 + i % 12, sample_seed(opts.seed, 2, i)).unwrap();
        let c = classify_tree(&t).unwrap();
        let search = msd_value(&t).map_err(|e| (e.to_string(), t.clone()))?;
        if c.msd != search {
            return Err((format!("characterization gives {}, search gives {search}", c.msd), t));
        }
    }
    Ok(opts.samples)
}

fn extremal_trees(opts: &SuiteOptions) -> Check {
    for i in 0..opts.samples {
        let script = random_family_f_script(i % 10, sample_seed(opts.seed, 3, i));
        let (t, labeling) = build_family_f(&script).unwrap();
        let violations = verify_labeling(&t, &labeling);
        if !violations.is_empty() {
            return Err((format!("labeling violations {violations:?}"), t));
        }
        let c = classify_tree(&t).unwrap();
        if c.msd != 3 {
            return Err((format!("built tree classified with msd {}", c.msd), t));
        }
    }
    Ok(opts.samples)
}

fn reduction(opts: &SuiteOptions) -> Check {
    let target = (opts.samples / 10).max(5);
    let mut cases = 0;
    let mut i = 0;
    while cases < target {
        let f = random_3cnf(2 + i % 3, 2 + i % 7, sample_seed(opts.seed, 4, i)).unwrap();
        i += 1;
        if preprocess(&f).is_err() {
            continue;
        }
        let r = verify_biconditional(&f, VerifyOptions::default()).unwrap();
        if !r.pass {
            let g = domsub::sat_reduction::build_reduction(&preprocess(&f).unwrap().formula)
                .unwrap()
                .graph;
            return Err((format!("biconditional failed: {r:?}"), g));
        }
        cases += 1;
    }
    Ok(cases)
}

pub fn verify_suite(opts: SuiteOptions) -> CliResult<VerifySuiteReport> {
    if opts.max_n > MAX_ENUMERATED_GRAPH_ORDER {
        return Err(CliError::new(
            exit::INPUT,
            format!("--max-n {} above the supported {MAX_ENUMERATED_GRAPH_ORDER}", opts.max_n),
        ));
    }
    let start = Instant::now();
    let corpus = graph_corpus(&opts);
    let bound = if opts.inject_fault { MSD_BOUND - 1 } else { MSD_BOUND };

    let checks: Vec<NamedCheck> = vec![
        ("closed-forms", Box::new(closed_forms)),
        ("msd-bound", Box::new(|| msd_bound(&corpus, bound))),
        ("sd-one-iff-msd-one", Box::new(|| sd_one_equivalence(&corpus))),
        ("tree-classification", Box::new(|| tree_classification(&opts))),
        ("extremal-trees", Box::new(|| extremal_trees(&opts))),
        ("reduction", Box::new(|| reduction(&opts))),
    ];
    let mut suites = Vec::new();
    let mut counterexample = None;
    for (name, check) in checks {
        match check() {
            Ok(cases) => suites.push(SuiteResult {
                name: name.into(),
                cases,
                pass: true,
            }),
            Err((detail, g)) => {
                suites.push(SuiteResult {
                    name: name.into(),
                    cases: 0,
                    pass: false,
                });
                counterexample.get_or_insert(Counterexample {
                    suite: name.into(),
                    detail,
                    edge_list: g.to_edge_list(),
                });
            }
        }
    }
    Ok(VerifySuiteReport {
        seed: opts.seed,
        max_n: opts.max_n,
        samples: opts.samples,
        pass: suites.iter().all(|s| s.pass),
        suites,
        counterexample,
        timings: SuiteTimings {
            total_ms: millis_since(start),
        },
    })
}
