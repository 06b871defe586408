//! 3-CNF formulas and their compilation into bipartite graphs whose
//! subdivision number exceeds one exactly when the formula is satisfiable.
//!
//! Per variable `i` a 6-vertex gadget is built: the literal vertices `u_i` and
//! `¬u_i` hang off two hub vertices, and the hubs are joined through two
//! internal vertices into a 4-cycle:
//!
//! ```text
//!   u_i          ¬u_i
//!    |             |
//!  hub_p --top-- hub_n
//!    \            /
//!     '-bottom---'
//! ```
//!
//! Each clause gets a vertex adjacent to its literal vertices, a vertex `x1`
//! is adjacent to every clause vertex, and a pendant `x0` hangs off `x1`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::generators::Seed;
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

pub type Clause = [Literal; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::InvalidArgument("formula has no clauses".into()));
        }
        for c in &clauses {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::VertexOutOfRange {
                    vertex: l.var,
                    n: num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment[l.var] == l.positive))
    }

    /// Clauses in which some literal is repeated verbatim.
    pub fn clauses_with_duplicate_literals(&self) -> Vec<usize> {
        (0..self.clauses.len())
            .filter(|&j| {
                let c = &self.clauses[j];
                c[0] == c[1] || c[0] == c[2] || c[1] == c[2]
            })
            .collect()
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                s.push_str(&format!("{} ", l.to_dimacs()));
            }
            s.push_str("0\n");
        }
        s
    }
}

/// Parses DIMACS CNF where every clause has exactly three literals. Comment
/// lines start with `c`; a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line, "duplicate header"));
            }
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
                return Err(Error::parse(line, "malformed header, expected `p cnf <vars> <clauses>`"));
            }
            let vars = toks[2]
                .parse()
                .map_err(|_| Error::parse(line, "malformed variable count"))?;
            let count = toks[3]
                .parse()
                .map_err(|_| Error::parse(line, "malformed clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let (vars, _) = header.ok_or_else(|| Error::parse(line, "clause before header"))?;
        for tok in l.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("not a literal: {tok:?}")))?;
            if lit == 0 {
                if current.len() != 3 {
                    return Err(Error::parse(
                        line,
                        format!("clause has {} literals, expected 3", current.len()),
                    ));
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > vars {
                return Err(Error::parse(
                    line,
                    format!("variable {var} out of range 1..={vars}"),
                ));
            }
            current.push(Literal {
                var: var - 1,
                positive: lit > 0,
            });
        }
    }
    let (vars, count) = header.ok_or_else(|| Error::parse(last_line, "missing header"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause"));
    }
    if clauses.is_empty() {
        return Err(Error::parse(last_line, "formula has no clauses"));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses)
}

/// Outcome of pure-literal elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Preprocessed {
    /// Compacted formula in which every variable occurs in both polarities.
    pub formula: CnfFormula,
    /// `original_var[i]` is the input index of compacted variable `i`.
    pub original_var: Vec<usize>,
    /// Input indices of deleted clauses.
    pub removed_clauses: Vec<usize>,
    /// Indices (in the compacted formula) of clauses with a repeated literal.
    pub duplicate_literal_clauses: Vec<usize>,
}

/// Deletes every clause containing a pure literal, repeating until each
/// remaining variable occurs in both polarities, and drops unused variables.
pub fn preprocess(f: &CnfFormula) -> Result<Preprocessed> {
    let mut keep = vec![true; f.clauses.len()];
    loop {
        let mut seen = vec![[false; 2]; f.num_vars];
        for (c, _) in f.clauses.iter().zip(&keep).filter(|(_, &k)| k) {
            for l in c {
                seen[l.var][l.positive as usize] = true;
            }
        }
        let pure = |l: &Literal| !seen[l.var][!l.positive as usize];
        let mut changed = false;
        for (j, c) in f.clauses.iter().enumerate() {
            if keep[j] && c.iter().any(pure) {
                keep[j] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let used: BTreeSet<usize> = f
        .clauses
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .flat_map(|(c, _)| c.iter().map(|l| l.var))
        .collect();
    let original_var: Vec<usize> = used.into_iter().collect();
    let mut index = vec![usize::MAX; f.num_vars];
    for (i, &v) in original_var.iter().enumerate() {
        index[v] = i;
    }
    let clauses: Vec<Clause> = f
        .clauses
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c.map(|l| Literal { var: index[l.var], positive: l.positive }))
        .collect();
    if clauses.is_empty() {
        return Err(Error::Preprocess(
            "every clause contains a pure literal; the formula is trivially satisfiable".into(),
        ));
    }
    let formula = CnfFormula {
        num_vars: original_var.len(),
        clauses,
    };
    Ok(Preprocessed {
        duplicate_literal_clauses: formula.clauses_with_duplicate_literals(),
        removed_clauses: (0..f.clauses.len()).filter(|&j| !keep[j]).collect(),
        original_var,
        formula,
    })
}

/// Vertex roles inside one variable gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub positive: VertexId,
    pub negative: VertexId,
    /// Hub adjacent to the positive literal.
    pub hub_positive: VertexId,
    /// Hub adjacent to the negative literal.
    pub hub_negative: VertexId,
    pub top: VertexId,
    pub bottom: VertexId,
}

impl Gadget {
    pub fn vertices(&self) -> [VertexId; 6] {
        [
            self.positive,
            self.hub_positive,
            self.top,
            self.bottom,
            self.hub_negative,
            self.negative,
        ]
    }

    pub fn literal(&self, positive: bool) -> VertexId {
        if positive {
            self.positive
        } else {
            self.negative
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub gadgets: Vec<Gadget>,
    pub clause_vertex: Vec<VertexId>,
    pub x1: VertexId,
    pub x0: VertexId,
}

impl ReductionGraph {
    pub fn literal_vertex(&self, l: Literal) -> VertexId {
        self.gadgets[l.var].literal(l.positive)
    }

    /// The edge `x0 x1`.
    pub fn pendant_edge(&self) -> crate::graph::Edge {
        crate::graph::Edge::new(self.x0, self.x1)
    }

    /// Structural checks on a graph built from `f`; an empty list means the
    /// construction is sound.
    pub fn structural_violations(&self, f: &CnfFormula) -> Vec<String> {
        let g = &self.graph;
        let n = f.num_vars;
        let m = f.clauses.len();
        let mut out = Vec::new();
        if g.n() != 6 * n + m + 2 {
            out.push(format!("vertex count {} != 6n+m+2 = {}", g.n(), 6 * n + m + 2));
        }
        let membership: usize = f
            .clauses
            .iter()
            .map(|c| c.iter().collect::<BTreeSet<_>>().len())
            .sum();
        if g.m() != 6 * n + membership + m + 1 {
            out.push(format!(
                "edge count {} != 6n + memberships + m + 1 = {}",
                g.m(),
                6 * n + membership + m + 1
            ));
        }
        let occurrences = |l: Literal| {
            f.clauses
                .iter()
                .filter(|c| c.contains(&l))
                .count()
        };
        for (i, gd) in self.gadgets.iter().enumerate() {
            let internal: BTreeSet<VertexId> = gd.vertices().into_iter().collect();
            let inner_degree =
                |v: VertexId| g.adj(v).iter().filter(|u| internal.contains(u)).count();
            let expected = [
                (gd.positive, 1),
                (gd.negative, 1),
                (gd.hub_positive, 3),
                (gd.hub_negative, 3),
                (gd.top, 2),
                (gd.bottom, 2),
            ];
            for (v, d) in expected {
                if inner_degree(v) != d {
                    out.push(format!("gadget {i}: vertex {v} has {} gadget neighbors, expected {d}", inner_degree(v)));
                }
            }
            for positive in [true, false] {
                let l = Literal { var: i, positive };
                let v = gd.literal(positive);
                if g.adj(v).len() != 1 + occurrences(l) {
                    out.push(format!("literal vertex {v} has degree {}, expected {}", g.adj(v).len(), 1 + occurrences(l)));
                }
            }
        }
        for (j, (&cv, c)) in self.clause_vertex.iter().zip(&f.clauses).enumerate() {
            let distinct = c.iter().collect::<BTreeSet<_>>().len();
            if g.adj(cv).len() != distinct + 1 {
                out.push(format!("clause vertex {j} has degree {}, expected {}", g.adj(cv).len(), distinct + 1));
            }
            if !g.adj(cv).contains(&self.x1) {
                out.push(format!("clause vertex {j} is not adjacent to x1"));
            }
        }
        if g.adj(self.x0).len() != 1 {
            out.push(format!("x0 has degree {}", g.adj(self.x0).len()));
        }
        if g.adj(self.x1).len() != m + 1 {
            out.push(format!("x1 has degree {}, expected m+1 = {}", g.adj(self.x1).len(), m + 1));
        }
        if !g.is_bipartite() {
            out.push("graph is not bipartite".into());
        }
        if !g.is_connected() {
            out.push("graph is not connected".into());
        }
        out
    }
}

/// Builds the reduction graph. Vertices: gadgets in variable order (positive
/// literal, positive hub, top, bottom, negative hub, negative literal), then
/// one vertex per clause, then `x1`, then `x0`.
pub fn build_reduction(f: &CnfFormula) -> Result<ReductionGraph> {
    let mut seen = vec![[false; 2]; f.num_vars];
    for c in &f.clauses {
        for l in c {
            seen[l.var][l.positive as usize] = true;
        }
    }
    if let Some(v) = seen.iter().position(|s| !(s[0] && s[1])) {
        return Err(Error::Preprocess(format!(
            "variable {} does not occur in both polarities",
            v + 1
        )));
    }
    let n = f.num_vars;
    let m = f.clauses.len();
    let gadgets: Vec<Gadget> = (0..n)
        .map(|i| {
            let b = 6 * i;
            Gadget {
                positive: b,
                hub_positive: b + 1,
                top: b + 2,
                bottom: b + 3,
                hub_negative: b + 4,
                negative: b + 5,
            }
        })
        .collect();
    let clause_vertex: Vec<VertexId> = (6 * n..6 * n + m).collect();
    let x1 = 6 * n + m;
    let x0 = x1 + 1;

    let mut edges = Vec::with_capacity(6 * n + 4 * m + 1);
    for gd in &gadgets {
        edges.extend([
            (gd.positive, gd.hub_positive),
            (gd.hub_positive, gd.top),
            (gd.top, gd.hub_negative),
            (gd.hub_positive, gd.bottom),
            (gd.bottom, gd.hub_negative),
            (gd.hub_negative, gd.negative),
        ]);
    }
    for (c, &cv) in f.clauses.iter().zip(&clause_vertex) {
        let lits: BTreeSet<VertexId> = c.iter().map(|l| gadgets[l.var].literal(l.positive)).collect();
        edges.extend(lits.into_iter().map(|v| (v, cv)));
        edges.push((cv, x1));
    }
    edges.push((x1, x0));
    Ok(ReductionGraph {
        graph: Graph::from_edges(x0 + 1, edges)?,
        gadgets,
        clause_vertex,
        x1,
        x0,
    })
}

pub const SAT_BRUTEFORCE_MAX_VARS: usize = 24;

/// A satisfying assignment by exhaustive truth-table scan, or `None`.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    if f.num_vars > SAT_BRUTEFORCE_MAX_VARS {
        return Err(Error::CapExceeded {
            size: f.num_vars,
            cap: SAT_BRUTEFORCE_MAX_VARS,
        });
    }
    let masks: Vec<[(u32, u32); 3]> = f
        .clauses
        .iter()
        .map(|c| c.map(|l| (1u32 << l.var, if l.positive { 1u32 << l.var } else { 0 })))
        .collect();
    for bits in 0u32..(1u32 << f.num_vars) {
        if masks
            .iter()
            .all(|c| c.iter().any(|&(bit, want)| bits & bit == want))
        {
            return Ok(Some((0..f.num_vars).map(|i| bits >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_vars: usize,
    pub max_clauses: usize,
    pub time_budget: Duration,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_vars: 4,
            max_clauses: 8,
            time_budget: Duration::from_secs(60),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiconditionalReport {
    /// Variables after preprocessing.
    pub n: usize,
    /// Clauses after preprocessing.
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    pub gamma: usize,
    pub satisfiable: bool,
    pub sd_gt_1: bool,
    /// `γ` after subdividing `x0 x1` once.
    pub gamma_pendant_subdivided: usize,
    pub pass: bool,
}

/// Builds the reduction graph of `f` (after pure-literal preprocessing) and
/// checks `satisfiable ⟺ sd(G) > 1` together with `γ(G) = 2n + 1`.
pub fn verify_biconditional(f: &CnfFormula, opts: VerifyOptions) -> Result<BiconditionalReport> {
    if f.num_vars > opts.max_vars || f.clauses.len() > opts.max_clauses {
        return Err(Error::InvalidArgument(format!(
            "instance with {} variables and {} clauses exceeds the verification limits ({} / {})",
            f.num_vars,
            f.clauses.len(),
            opts.max_vars,
            opts.max_clauses
        )));
    }
    let start = Instant::now();
    let pre = preprocess(f)?;
    let red = build_reduction(&pre.formula)?;
    let g = &red.graph;
    let satisfiable = sat_bruteforce(f)?.is_some();
    let gamma = domination_number(g);

    let check_time = || {
        if start.elapsed() > opts.time_budget {
            Err(Error::Timeout(opts.time_budget.as_millis()))
        } else {
            Ok(())
        }
    };
    // the pendant edge first: it decides the unsatisfiable side
    let pendant = red.pendant_edge();
    let gamma_pendant_subdivided = domination_number(&g.subdivide(pendant, 1)?);
    let mut sd_gt_1 = gamma_pendant_subdivided == gamma;
    if sd_gt_1 {
        for &e in g.edges().iter().filter(|&&e| e != pendant) {
            check_time()?;
            if domination_number(&g.subdivide(e, 1)?) > gamma {
                sd_gt_1 = false;
                break;
            }
        }
    }
    check_time()?;
    let n = pre.formula.num_vars;
    Ok(BiconditionalReport {
        n,
        m: pre.formula.clauses.len(),
        vertices: g.n(),
        edges: g.m(),
        gamma,
        satisfiable,
        sd_gt_1,
        gamma_pendant_subdivided,
        pass: satisfiable == sd_gt_1 && gamma == 2 * n + 1,
    })
}

/// Random 3-CNF. With at least three variables each clause uses three
/// distinct variables; polarities are fair coin flips.
pub fn random_3cnf(num_vars: usize, num_clauses: usize, seed: Seed) -> Result<CnfFormula> {
    if num_vars == 0 || num_clauses == 0 {
        return Err(Error::InvalidArgument("need at least one variable and one clause".into()));
    }
    let mut rng = seed.rng();
    let clauses = (0..num_clauses)
        .map(|_| {
            let vars: Vec<usize> = if num_vars >= 3 {
                rand::seq::index::sample(&mut rng, num_vars, 3).into_vec()
            } else {
                (0..3).map(|_| rng.gen_range(0..num_vars)).collect()
            };
            [0, 1, 2].map(|i| Literal {
                var: vars[i],
                positive: rng.gen_bool(0.5),
            })
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

/// The formula from the construction figure:
/// `(u0 ∨ u1 ∨ u2) ∧ (¬u0 ∨ u1 ∨ u2) ∧ (¬u1 ∨ ¬u2 ∨ u3) ∧ (¬u1 ∨ ¬u2 ∨ ¬u3)`.
pub fn example_formula() -> CnfFormula {
    use Literal as L;
    CnfFormula {
        num_vars: 4,
        clauses: vec![
            [L::pos(0), L::pos(1), L::pos(2)],
            [L::neg(0), L::pos(1), L::pos(2)],
            [L::neg(1), L::neg(2), L::pos(3)],
            [L::neg(1), L::neg(2), L::neg(3)],
        ],
    }
}

/// All eight polarity patterns over three variables; unsatisfiable.
pub fn complete_polarity_formula() -> CnfFormula {
    let clauses = (0..8u8)
        .map(|p| [0, 1, 2].map(|v| Literal { var: v, positive: p >> v & 1 == 1 }))
        .collect();
    CnfFormula { num_vars: 3, clauses }
}
