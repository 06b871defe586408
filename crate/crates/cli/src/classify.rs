use std::time::Instant;

use domsub::subdivision::{default_budget, msd, sd, SdValue};
use domsub::tree_class::{classify_tree, Status, TreeClassification};
use domsub::{Error, Graph};

use crate::report::*;
use crate::{exit, millis_since, CliError, CliResult};

/// Budget used by `--verify` on trees, enough to reach any tree value.
const TREE_VERIFY_BUDGET: usize = 3;

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Largest edge set tried by the `sd` search; defaults to `min(m, 5)`.
    pub budget: Option<usize>,
    /// Use the tree characterization instead of the subset search.
    pub tree: bool,
    /// Cross-check the result against independent computations.
    pub verify: bool,
}

fn tree_details(c: &TreeClassification) -> TreeDetails {
    TreeDetails {
        reason: serde_json::to_value(c.reason)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        msd_one_witness: c.witness.and_then(|w| serde_json::to_value(w).ok()),
        labeling: c.labeling.as_ref().map(|l| {
            l.statuses()
                .iter()
                .map(|s| match s {
                    Status::A => 'A',
                    Status::B => 'B',
                })
                .collect()
        }),
    }
}

pub fn classify(g: &Graph, opts: ClassifyOptions) -> CliResult<ClassificationReport> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 }.into());
    }
    if !g.is_connected() {
        return Err(Error::NotConnected.into());
    }
    if opts.tree && !g.is_tree() {
        return Err(Error::NotATree.into());
    }
    if opts.budget == Some(0) {
        return Err(CliError::new(exit::INPUT, "--budget must be positive"));
    }
    let budget = opts.budget.unwrap_or_else(|| default_budget(g)).min(g.m());
    let start = Instant::now();

    let gamma = crate::gamma(g);
    let gamma_ms = gamma.timings.total_ms;

    let t = Instant::now();
    let msd_report = msd(g)?;
    let msd_ms = millis_since(t);

    let mut mismatches = Vec::new();
    let t = Instant::now();
    let (method, msd_value, sd_value, sd_edges, tree) = if opts.tree {
        let c = classify_tree(g)?;
        let mut sd_edges = None;
        if opts.verify {
            if c.msd != msd_report.msd {
                mismatches.push(format!("characterization msd {} != search msd {}", c.msd, msd_report.msd));
            }
            let search = sd(g, budget.max(TREE_VERIFY_BUDGET))?;
            if search.sd != SdValue::Exact(c.sd) {
                mismatches.push(format!("characterization sd {} != search sd {:?}", c.sd, search.sd));
            }
            sd_edges = Some(search.witness_edges.iter().map(|&e| pair(e)).collect());
        }
        let details = tree_details(&c);
        (Method::TreeCharacterization, c.msd, SdField::Exact(c.sd), sd_edges, Some(details))
    } else {
        let search = sd(g, budget)?;
        if opts.verify {
            let sd_one = search.sd == SdValue::Exact(1);
            if sd_one != (msd_report.msd == 1) {
                mismatches.push(format!("sd {:?} and msd {} disagree on the value 1", search.sd, msd_report.msd));
            }
            if g.is_tree() {
                let c = classify_tree(g)?;
                if c.msd != msd_report.msd {
                    mismatches.push(format!("characterization msd {} != search msd {}", c.msd, msd_report.msd));
                }
            }
        }
        let edges = match search.sd {
            SdValue::Exact(_) => Some(search.witness_edges.iter().map(|&e| pair(e)).collect()),
            SdValue::ExceedsBudget => None,
        };
        (Method::Search, msd_report.msd, search.sd.into(), edges, None)
    };
    let sd_ms = millis_since(t);

    if opts.verify {
        let d = domsub::DominatingSet::certify(g, gamma.witness.clone());
        if d.is_none() {
            mismatches.push("reported dominating set does not dominate".into());
        }
    }

    Ok(ClassificationReport {
        n: g.n(),
        m: g.m(),
        gamma: gamma.gamma,
        sd: sd_value,
        sd_budget: budget,
        msd: msd_value,
        per_edge_msd: msd_report
            .per_edge
            .iter()
            .map(|(e, &msd)| EdgeMsd { a: e.a, b: e.b, msd })
            .collect(),
        witnesses: Witnesses {
            dominating_set: gamma.witness,
            msd_edge: pair(msd_report.witness_edge),
            sd_edges,
        },
        method,
        tree,
        verified: opts.verify.then_some(mismatches.is_empty()),
        mismatches,
        timings: ClassifyTimings {
            gamma_ms,
            msd_ms,
            sd_ms,
            total_ms: millis_since(start),
        },
    })
}
