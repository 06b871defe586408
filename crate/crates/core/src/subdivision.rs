//! The domination subdivision number `sd(G)` and the domination
//! multisubdivision number `msd(G)`.
//!
//! `msd(uv)` is the least `t` such that replacing `uv` by a path with `t`
//! internal vertices raises the domination number; `msd(G)` is its minimum over
//! all edges and never exceeds 3 on a connected graph. `sd(G)` is the least
//! number of distinct edges which, each subdivided once at the same time,
//! raise the domination number. It is unbounded in general, so the search runs
//! under an explicit budget.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::domination::{domination_number, next_combination};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest multiplicity ever needed on a connected graph.
pub const MSD_BOUND: usize = 3;

/// Default `sd` budget: `min(m, 5)`.
pub fn default_budget(g: &Graph) -> usize {
    g.m().min(5)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MsdReport {
    pub msd: usize,
    pub witness_edge: Edge,
    #[serde(serialize_with = "per_edge_list")]
    pub per_edge: BTreeMap<Edge, usize>,
    pub gamma_base: usize,
}

#[derive(Serialize)]
struct EdgeValue {
    a: usize,
    b: usize,
    msd: usize,
}

fn per_edge_list<S: Serializer>(map: &BTreeMap<Edge, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(map.iter().map(|(e, &msd)| EdgeValue { a: e.a, b: e.b, msd }))
}

/// `sd(G)`, or a marker that no edge set within the budget works.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdValue {
    Exact(usize),
    ExceedsBudget,
}

impl Serialize for SdValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SdValue::Exact(k) => s.serialize_u64(*k as u64),
            SdValue::ExceedsBudget => s.serialize_str("exceeds-budget"),
        }
    }
}

impl SdValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            SdValue::Exact(k) => Some(k),
            SdValue::ExceedsBudget => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdReport {
    pub sd: SdValue,
    /// Lexicographically first edge set of minimum size; empty when the
    /// budget was exceeded.
    pub witness_edges: Vec<Edge>,
    pub budget: usize,
    pub gamma_base: usize,
}

fn require_connected(g: &Graph, min_order: usize) -> Result<()> {
    if g.n() < min_order {
        return Err(Error::TooSmall {
            n: g.n(),
            min: min_order,
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// `γ(G_{e,t})` for `t = 1, 2, 3`.
pub fn gamma_profile(g: &Graph, e: Edge) -> Result<[usize; MSD_BOUND]> {
    let mut out = [0; MSD_BOUND];
    for (t, slot) in (1..=MSD_BOUND).zip(out.iter_mut()) {
        *slot = domination_number(&g.subdivide(e, t)?);
    }
    Ok(out)
}

fn msd_edge_from(g: &Graph, e: Edge, base: usize) -> Result<usize> {
    // t = 1, 2, 3 in order; no monotonicity in t is assumed
    for t in 1..=MSD_BOUND {
        if domination_number(&g.subdivide(e, t)?) > base {
            return Ok(t);
        }
    }
    Err(Error::Violation(format!(
        "subdividing edge {e} three times does not raise the domination number of {g:?}"
    )))
}

/// `msd(e)`: the least `t ∈ {1,2,3}` with `γ(G_{e,t}) > γ(G)`.
pub fn msd_edge(g: &Graph, e: Edge) -> Result<usize> {
    require_connected(g, 2)?;
    if !g.has_edge(e) {
        return Err(Error::EdgeNotPresent(e));
    }
    msd_edge_from(g, e, domination_number(g))
}

/// `msd(G)` with per-edge values. The witness is the first edge (in sorted
/// order) attaining the minimum.
pub fn msd(g: &Graph) -> Result<MsdReport> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    require_connected(g, 2)?;
    let base = domination_number(g);
    let values = g
        .edges()
        .par_iter()
        .map(|&e| msd_edge_from(g, e, base).map(|t| (e, t)))
        .collect::<Result<Vec<_>>>()?;
    let (witness_edge, msd) = values
        .iter()
        .copied()
        .min_by_key(|&(e, t)| (t, e))
        .expect("at least one edge");
    Ok(MsdReport {
        msd,
        witness_edge,
        per_edge: values.into_iter().collect(),
        gamma_base: base,
    })
}

/// `msd(G)` alone, stopping at the first edge with value 1.
pub fn msd_value(g: &Graph) -> Result<usize> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    require_connected(g, 2)?;
    let base = domination_number(g);
    let mut best = MSD_BOUND;
    for &e in g.edges() {
        best = best.min(msd_edge_from(g, e, base)?);
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

/// `sd(G)` by scanning edge subsets in increasing size, lexicographic within
/// a size, up to `budget` edges. A budget above `m` is clamped to `m`.
pub fn sd(g: &Graph, budget: usize) -> Result<SdReport> {
    require_connected(g, 3)?;
    if budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    let budget = budget.min(g.m());
    let base = domination_number(g);
    let edges = g.edges();
    for k in 1..=budget {
        let mut combo: Vec<usize> = (0..k).collect();
        let mut subsets = Vec::new();
        loop {
            subsets.push(combo.clone());
            if !next_combination(&mut combo, edges.len()) {
                break;
            }
        }
        let found = subsets.par_iter().find_first(|idx| {
            let set: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            let h = g.subdivide_edges(&set).expect("edges come from the graph");
            domination_number(&h) > base
        });
        if let Some(idx) = found {
            return Ok(SdReport {
                sd: SdValue::Exact(k),
                witness_edges: idx.iter().map(|&i| edges[i]).collect(),
                budget,
                gamma_base: base,
            });
        }
    }
    Ok(SdReport {
        sd: SdValue::ExceedsBudget,
        witness_edges: Vec::new(),
        budget,
        gamma_base: base,
    })
}

/// The decision question "is `sd(G) > 1`?": true iff no single subdivision
/// raises the domination number.
pub fn sd_is_greater_than_one(g: &Graph) -> Result<bool> {
    require_connected(g, 3)?;
    let base = domination_number(g);
    Ok(!g
        .edges()
        .par_iter()
        .any(|&e| domination_number(&g.subdivide(e, 1).unwrap()) > base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn msd_edge_examples() {
        let k2 = path(2).unwrap();
        assert_eq!(msd_edge(&k2, Edge::new(0, 1)).unwrap(), 2);
        let p4 = path(4).unwrap();
        for &e in p4.edges() {
            assert_eq!(msd_edge(&p4, e).unwrap(), 3);
        }
        let k33 = complete_bipartite(3, 3).unwrap();
        for &e in k33.edges() {
            assert_eq!(msd_edge(&k33, e).unwrap(), 3);
        }
    }

    #[test]
    fn msd_edge_errors() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(msd_edge(&g, Edge::new(0, 1)), Err(Error::NotConnected));
        let p4 = path(4).unwrap();
        assert_eq!(
            msd_edge(&p4, Edge::new(0, 2)),
            Err(Error::EdgeNotPresent(Edge::new(0, 2)))
        );
        assert_eq!(msd(&Graph::empty(1)), Err(Error::Edgeless));
        assert_eq!(msd(&g), Err(Error::NotConnected));
    }

    #[test]
    fn msd_examples() {
        assert_eq!(msd(&cycle(5).unwrap()).unwrap().msd, 2);
        assert_eq!(msd(&complete(6).unwrap()).unwrap().msd, 1);
        let r = msd(&star(4).unwrap()).unwrap();
        assert_eq!(r.msd, 1);
        assert_eq!(r.per_edge.len(), 4);
        assert_eq!(r.per_edge[&r.witness_edge], 1);
        assert_eq!(r.gamma_base, 1);
        assert_eq!(msd_value(&cycle(7).unwrap()).unwrap(), 3);
    }

    #[test]
    fn sd_examples() {
        assert_eq!(sd(&path(7).unwrap(), 3).unwrap().sd, SdValue::Exact(3));
        let r = sd(&complete_bipartite(3, 4).unwrap(), 3).unwrap();
        assert_eq!(r.sd, SdValue::Exact(2));
        assert_eq!(r.witness_edges.len(), 2);
        assert_eq!(sd(&star(3).unwrap(), 1).unwrap().sd, SdValue::Exact(1));
        assert_eq!(
            sd(&path(4).unwrap(), 2).unwrap().sd,
            SdValue::ExceedsBudget
        );
    }

    #[test]
    fn sd_witness_is_lexicographically_first() {
        // in P_6 the first edge already raises γ
        let r = sd(&path(6).unwrap(), 1).unwrap();
        assert_eq!(r.witness_edges, vec![Edge::new(0, 1)]);
        let c5 = cycle(5).unwrap();
        let r = sd(&c5, 2).unwrap();
        assert_eq!(r.sd, SdValue::Exact(2));
        let h = c5.subdivide_edges(&r.witness_edges).unwrap();
        assert!(domination_number(&h) > 2);
        // no earlier pair in lexicographic order over sorted edges works
        let edges = c5.edges();
        let mut combo = vec![0, 1];
        loop {
            let set: Vec<Edge> = combo.iter().map(|&i| edges[i]).collect();
            if set == r.witness_edges {
                break;
            }
            assert_eq!(domination_number(&c5.subdivide_edges(&set).unwrap()), 2);
            assert!(next_combination(&mut combo, edges.len()));
        }
        // C_4 needs three subdivided edges
        assert_eq!(sd(&cycle(4).unwrap(), 3).unwrap().sd, SdValue::Exact(3));
    }

    #[test]
    fn sd_preconditions() {
        assert_eq!(
            sd(&path(2).unwrap(), 1),
            Err(Error::TooSmall { n: 2, min: 3 })
        );
        assert!(matches!(sd(&path(4).unwrap(), 0), Err(Error::InvalidArgument(_))));
        assert_eq!(sd(&path(4).unwrap(), 9).unwrap().budget, 3);
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(sd(&g, 1), Err(Error::NotConnected));
        assert_eq!(default_budget(&complete(5).unwrap()), 5);
        assert_eq!(default_budget(&path(3).unwrap()), 2);
    }

    #[test]
    fn decision_predicate() {
        assert!(sd_is_greater_than_one(&cycle(4).unwrap()).unwrap());
        assert!(!sd_is_greater_than_one(&cycle(6).unwrap()).unwrap());
        assert!(sd_is_greater_than_one(&path(2).unwrap()).is_err());
    }

    #[test]
    fn gamma_profile_of_path() {
        // P_4: γ = 2 until the path reaches 7 vertices
        assert_eq!(gamma_profile(&path(4).unwrap(), Edge::new(1, 2)).unwrap(), [2, 2, 3]);
    }
}
