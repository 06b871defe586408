use std::path::Path;
use std::time::{Duration, Instant};

use domsub::sat_reduction::{
    build_reduction, preprocess, verify_biconditional, CnfFormula, Preprocessed, ReductionGraph,
    VerifyOptions,
};

use crate::report::*;
use crate::{exit, millis_since, CliError, CliResult};

#[derive(Clone, Debug)]
pub struct ReduceOptions {
    pub max_vars: usize,
    pub max_clauses: usize,
    pub time_budget: Duration,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        let d = VerifyOptions::default();
        ReduceOptions {
            max_vars: d.max_vars,
            max_clauses: d.max_clauses,
            time_budget: d.time_budget,
        }
    }
}

/// Vertex names for DOT output, using the input variable numbering: `x3`,
/// `~x3`, gadget hubs `h+3`/`h-3`, cycle vertices `t3`/`b3`, clauses `C1`...,
/// and the two extra vertices `y1`, `y0`.
pub fn labels(red: &ReductionGraph, pre: &Preprocessed) -> Vec<String> {
    let mut out = vec![String::new(); red.graph.n()];
    for (i, gd) in red.gadgets.iter().enumerate() {
        let v = pre.original_var[i] + 1;
        out[gd.positive] = format!("x{v}");
        out[gd.negative] = format!("~x{v}");
        out[gd.hub_positive] = format!("h+{v}");
        out[gd.hub_negative] = format!("h-{v}");
        out[gd.top] = format!("t{v}");
        out[gd.bottom] = format!("b{v}");
    }
    for (j, &c) in red.clause_vertex.iter().enumerate() {
        out[c] = format!("C{}", j + 1);
    }
    out[red.x1] = "y1".into();
    out[red.x0] = "y0".into();
    out
}

fn build(f: &CnfFormula) -> CliResult<(Preprocessed, ReductionGraph)> {
    let pre = preprocess(f)?;
    let red = build_reduction(&pre.formula)?;
    Ok((pre, red))
}

pub fn write_dot(path: &Path, f: &CnfFormula) -> CliResult<()> {
    let (pre, red) = build(f)?;
    let l = labels(&red, &pre);
    std::fs::write(path, red.graph.to_dot(Some(&l)))
        .map_err(|e| CliError::new(exit::INPUT, format!("{}: {e}", path.display())))
}

pub fn reduce(f: &CnfFormula) -> CliResult<ReduceReport> {
    let start = Instant::now();
    let (pre, red) = build(f)?;
    Ok(ReduceReport {
        n: pre.formula.num_vars,
        m: pre.formula.clauses.len(),
        removed_clauses: pre.removed_clauses.clone(),
        vertices: red.graph.n(),
        edges: red.graph.m(),
        edge_list: red.graph.edges().iter().map(|&e| pair(e)).collect(),
        labels: labels(&red, &pre),
        timings: ReduceTimings {
            total_ms: millis_since(start),
        },
    })
}

pub fn reduce_verify(f: &CnfFormula, opts: &ReduceOptions) -> CliResult<ReduceVerifyReport> {
    if f.num_vars > opts.max_vars || f.clauses.len() > opts.max_clauses {
        return Err(CliError::new(
            exit::PRECONDITION,
            format!(
                "instance with {} variables and {} clauses exceeds the verification limits ({} / {})",
                f.num_vars,
                f.clauses.len(),
                opts.max_vars,
                opts.max_clauses
            ),
        ));
    }
    let start = Instant::now();
    let removed_clauses = preprocess(f)?.removed_clauses;
    let r = verify_biconditional(
        f,
        VerifyOptions {
            max_vars: opts.max_vars,
            max_clauses: opts.max_clauses,
            time_budget: opts.time_budget,
        },
    )?;
    Ok(ReduceVerifyReport {
        n: r.n,
        m: r.m,
        removed_clauses,
        vertices: r.vertices,
        edges: r.edges,
        gamma: r.gamma,
        satisfiable: r.satisfiable,
        sd_gt_1: r.sd_gt_1,
        gamma_pendant_subdivided: r.gamma_pendant_subdivided,
        pass: r.pass,
        timings: ReduceTimings {
            total_ms: millis_since(start),
        },
    })
}
