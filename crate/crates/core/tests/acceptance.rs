//! Acceptance suite. Runs every criterion at its pinned tolerance (all exact)
//! and prints one PASS/FAIL line per criterion; exits nonzero on any failure.
//!
//!     cargo test -p domsub --test acceptance

use std::process::ExitCode;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use domsub::domination::{domination_number, gamma, gamma_bruteforce, gamma_tree};
use domsub::generators::{
    complete, complete_bipartite, cycle, enumerate_graphs, labeled_tree_count,
    path, random_connected_graph, random_family_f_script, random_tree, tree_by_index, wheel, Seed,
};
use domsub::sat_reduction::{
    complete_polarity_formula, example_formula, preprocess, random_3cnf, verify_biconditional,
    CnfFormula, Literal, VerifyOptions,
};
use domsub::subdivision::{msd, sd, sd_is_greater_than_one, SdValue};
use domsub::tree_class::{build_family_f, classify_tree, verify_labeling};
use domsub::Graph;

/// `msd = sd` for paths and cycles on `n >= 3` vertices.
fn path_cycle_formula(n: usize) -> usize {
    match n % 3 {
        0 => 1,
        2 => 2,
        _ => 3,
    }
}

/// `msd(K_{p,q})`, `p <= q`.
fn complete_bipartite_formula(p: usize, q: usize) -> usize {
    if p == 1 && q > 1 {
        1
    } else if p == 1 && q == 1 {
        2
    } else {
        3
    }
}

struct Outcome {
    failures: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
            checked: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Checks shared across a parallel sweep.
struct SharedOutcome(Mutex<Outcome>);

impl SharedOutcome {
    fn new() -> Self {
        SharedOutcome(Mutex::new(Outcome::new()))
    }

    fn check(&self, ok: bool, what: impl FnOnce() -> String) {
        self.0.lock().unwrap().check(ok, what)
    }

    fn into_inner(self) -> Outcome {
        self.0.into_inner().unwrap()
    }
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    for n in 3..=30 {
        let expected = path_cycle_formula(n);
        for (name, g) in [("P", path(n).unwrap()), ("C", cycle(n).unwrap())] {
            let m = msd(&g).unwrap().msd;
            out.check(m == expected, || format!("msd({name}_{n}) = {m}, expected {expected}"));
            let s = sd(&g, 3).unwrap().sd;
            out.check(s == SdValue::Exact(expected), || {
                format!("sd({name}_{n}) = {s:?}, expected {expected}")
            });
        }
    }
    for n in 3..=10 {
        for (name, g) in [("K", complete(n).unwrap()), ("W", wheel(n).unwrap())] {
            let m = msd(&g).unwrap().msd;
            out.check(m == 1, || format!("msd({name}_{n}) = {m}, expected 1"));
            let s = sd(&g, 1).unwrap().sd;
            out.check(s == SdValue::Exact(1), || format!("sd({name}_{n}) = {s:?}, expected 1"));
        }
    }
    for p in 1..=6 {
        for q in p..=6 {
            let expected = complete_bipartite_formula(p, q);
            let m = msd(&complete_bipartite(p, q).unwrap()).unwrap().msd;
            out.check(m == expected, || {
                format!("msd(K_{{{p},{q}}}) = {m}, expected {expected}")
            });
        }
    }
    out
}

/// Connected labeled graphs with 2..=6 vertices plus 500 random connected
/// graphs with at most 10 vertices.
fn msd_corpus() -> Vec<Graph> {
    let mut corpus: Vec<Graph> = (2..=6)
        .flat_map(|n| enumerate_graphs(n).unwrap().filter(Graph::is_connected))
        .collect();
    for s in 0..500u64 {
        let n = 3 + (s as usize % 8);
        let max = n * (n - 1) / 2;
        let m = (n - 1) + (s.wrapping_mul(2654435761) as usize) % (max - n + 2);
        corpus.push(random_connected_graph(n, m, Seed(1000 + s)).unwrap());
    }
    corpus
}

fn criterion_2(corpus: &[Graph]) -> Outcome {
    let shared = SharedOutcome::new();
    corpus.par_iter().for_each(|g| {
        let base = domination_number(g);
        for &e in g.edges() {
            let raised = domination_number(&g.subdivide(e, 3).unwrap());
            shared.check(raised > base, || {
                format!("γ(G_e,3) = {raised} <= γ = {base} for e = {e} in\n{}", g.to_edge_list())
            });
        }
        let m = msd(g).map(|r| r.msd);
        shared.check(matches!(m, Ok(1..=3)), || {
            format!("msd = {m:?} outside 1..=3 for\n{}", g.to_edge_list())
        });
    });
    shared.into_inner()
}

fn criterion_3(corpus: &[Graph]) -> Outcome {
    let shared = SharedOutcome::new();
    corpus.par_iter().filter(|g| g.n() >= 3).for_each(|g| {
        let sd_one = sd(g, 1).unwrap().sd == SdValue::Exact(1);
        let msd_one = msd(g).unwrap().msd == 1;
        let decision = !sd_is_greater_than_one(g).unwrap();
        shared.check(sd_one == msd_one && decision == sd_one, || {
            format!(
                "sd=1: {sd_one}, msd=1: {msd_one}, decision: {decision} for\n{}",
                g.to_edge_list()
            )
        });
    });
    shared.into_inner()
}

fn tree_theorem_check(t: &Graph, shared: &SharedOutcome) {
    let brute = sd(t, 3).unwrap().sd;
    let direct = msd(t).unwrap().msd;
    let characterized = classify_tree(t).unwrap();
    shared.check(
        brute == SdValue::Exact(direct)
            && characterized.msd == direct
            && characterized.sd == direct,
        || {
            format!(
                "sd = {brute:?}, msd = {direct}, classify = {}/{} ({:?}) for\n{}",
                characterized.sd,
                characterized.msd,
                characterized.reason,
                t.to_edge_list()
            )
        },
    );
}

fn criterion_4() -> Outcome {
    let shared = SharedOutcome::new();
    for n in 3..=8 {
        (0..labeled_tree_count(n)).into_par_iter().for_each(|i| {
            tree_theorem_check(&tree_by_index(n, i).unwrap(), &shared);
        });
    }
    (0..1000u64).into_par_iter().for_each(|s| {
        let n = 3 + (s as usize % 14);
        tree_theorem_check(&random_tree(n, Seed(5000 + s)).unwrap(), &shared);
    });
    shared.into_inner()
}

fn criterion_5() -> Outcome {
    let shared = SharedOutcome::new();
    (0..500u64).into_par_iter().for_each(|s| {
        let len = (s % 13) as usize;
        let script = random_family_f_script(len, Seed(9000 + s));
        let (t, labeling) = build_family_f(&script).unwrap();
        shared.check(t.n() <= 40, || format!("tree with {} vertices", t.n()));
        let violations = verify_labeling(&t, &labeling);
        shared.check(violations.is_empty(), || {
            format!("labeling violations {violations:?} for\n{}", t.to_edge_list())
        });
        let g = gamma_tree(&t).unwrap().gamma;
        let a = labeling.a_set().len();
        shared.check(a == g, || format!("|A(T)| = {a}, γ = {g} for\n{}", t.to_edge_list()));
        let report = msd(&t).unwrap();
        shared.check(report.per_edge.values().all(|&v| v == 3), || {
            format!("per-edge msd {:?} not all 3 for\n{}", report.per_edge, t.to_edge_list())
        });
    });
    shared.into_inner()
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let opts = VerifyOptions {
        time_budget: Duration::from_secs(120),
        ..VerifyOptions::default()
    };
    let fig = verify_biconditional(&example_formula(), opts).unwrap();
    out.check(fig.gamma == 9 && fig.satisfiable && fig.sd_gt_1 && fig.pass, || {
        format!("figure instance: {fig:?}")
    });

    let mut formulas: Vec<CnfFormula> = Vec::new();
    let mut seed = 20_000u64;
    while formulas.len() < 100 {
        let vars = 1 + (seed as usize % 4);
        let clauses = 1 + (seed as usize / 4 % 8);
        let f = random_3cnf(vars, clauses, Seed(seed)).unwrap();
        seed += 1;
        // formulas whose clauses all vanish under pure-literal elimination
        // have no reduction graph
        if preprocess(&f).is_ok() {
            formulas.push(f);
        }
    }
    formulas.push(complete_polarity_formula());
    formulas.push(
        CnfFormula::new(
            1,
            vec![
                [Literal::pos(0); 3],
                [Literal::neg(0); 3],
            ],
        )
        .unwrap(),
    );
    let shared = SharedOutcome::new();
    formulas.par_iter().for_each(|f| {
        let r = verify_biconditional(f, opts);
        shared.check(matches!(&r, Ok(r) if r.pass), || {
            format!("{r:?} for\n{}", f.to_dimacs())
        });
    });
    let shared = shared.into_inner();
    out.checked += shared.checked;
    out.failures.extend(shared.failures);
    let unsat_seen = formulas
        .iter()
        .filter(|f| domsub::sat_reduction::sat_bruteforce(f).unwrap().is_none())
        .count();
    out.check(unsat_seen >= 2, || "no unsatisfiable instances in the sample".into());
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let k33 = complete_bipartite(3, 3).unwrap();
    let s = sd(&k33, 3).unwrap().sd;
    let m = msd(&k33).unwrap().msd;
    out.check(s == SdValue::Exact(2), || format!("sd(K_3,3) = {s:?}"));
    out.check(m == 3, || format!("msd(K_3,3) = {m}"));
    out
}

fn criterion_8(corpus: &[Graph]) -> Outcome {
    let shared = SharedOutcome::new();
    let agree = |g: &Graph| {
        let bnb = gamma(g);
        let brute = gamma_bruteforce(g).unwrap().gamma;
        shared.check(bnb.gamma == brute && bnb.witness.certifies(g), || {
            format!("branch and bound {} vs brute force {brute} for\n{}", bnb.gamma, g.to_edge_list())
        });
    };
    (1..=7).for_each(|n| {
        enumerate_graphs(n).unwrap().par_bridge().for_each(|g| agree(&g));
    });
    corpus.par_iter().filter(|g| g.n() <= 8).for_each(agree);
    (0..labeled_tree_count(8)).into_par_iter().for_each(|i| agree(&tree_by_index(8, i).unwrap()));
    (0..2000u64).into_par_iter().for_each(|s| {
        let n = 8;
        let m = 7 + (s as usize % 22);
        agree(&random_connected_graph(n, m, Seed(40_000 + s)).unwrap());
    });
    shared.into_inner()
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let started = Instant::now();
    let corpus = msd_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 closed-form msd/sd tables (paths, cycles, K_n, W_n, K_p,q)", Box::new(criterion_1)),
        ("2 universal bound 1 <= msd <= 3", Box::new(|| criterion_2(&corpus))),
        ("3 sd = 1 iff msd = 1", Box::new(|| criterion_3(&corpus))),
        ("4 trees: sd = msd = characterization", Box::new(criterion_4)),
        ("5 family F labelings, |A| = γ, per-edge msd = 3", Box::new(criterion_5)),
        ("6 reduction: γ = 2n+1 and satisfiable iff sd > 1", Box::new(criterion_6)),
        ("7 incomparability: sd(K_3,3) = 2, msd(K_3,3) = 3", Box::new(criterion_7)),
        ("8 branch and bound agrees with brute force (n <= 8)", Box::new(|| criterion_8(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let outcome = run();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {name}: {} checks, {} failures, {:.1}s",
            outcome.checked,
            outcome.failures.len(),
            t.elapsed().as_secs_f64()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {}", f.replace('\n', "\n    "));
        }
        if !outcome.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
