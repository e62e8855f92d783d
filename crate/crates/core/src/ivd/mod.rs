//! Independent `(r, l)`-Vertex Deletion: the deletion set must itself be
//! an independent set.

mod aux;
mod fpt;
mod gadget;
mod mincut;
mod poly;
mod treedec;

pub use aux::{
    independent_oct, reed_auxiliary_graph, restricted_independent_oct, AuxiliaryGraph, OCTWitness, ValidPartition,
};
pub use fpt::independent_22;
pub use gadget::{hardness_gadget, hardness_gadget_with_paths};
pub use mincut::{independent_mincut, MincutBackend, MincutDPState, DEFAULT_WIDTH_CAP};
pub use poly::ivd_12_poly;
pub use treedec::{tree_decompose, TreeDecomposition};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::stats::Stats;
use crate::vd::{append_block, check_restriction, check_supported, finish, ProblemSpec, Solution, SolverConfig};
use crate::witness::RLPartition;

/// Disjoint union with a clique of size `r + 2`. For independent deletion
/// sets, which take at most one vertex of it, `(r, l)` on `g` is equivalent
/// to `(r, l + 1)` on the result.
pub fn lift_iii_small(g: &Graph, r: usize, _l: usize, _k: usize) -> (Graph, Vec<Option<Vertex>>) {
    append_block(g, r + 2, true, false)
}

/// Adds an independent set of size `l + k + 1` joined to every vertex:
/// `(r, l)` on `g` is equivalent to `(r + 1, l)` on the result.
pub fn lift_iv(g: &Graph, _r: usize, l: usize, k: usize) -> (Graph, Vec<Option<Vertex>>) {
    append_block(g, l + k + 1, false, true)
}

/// Independent `(r, l)`-Vertex Deletion for `max(r, l) <= 2`.
pub fn solve_ivd(g: &Graph, spec: &ProblemSpec, cfg: &SolverConfig) -> Result<Solution> {
    if !spec.independent {
        return Err(Error::Contract("solve_ivd handles the independent variant only".into()));
    }
    check_supported(spec.r, spec.l)?;
    check_restriction(g, spec)?;
    let stats = Stats::default();
    let (r, l, k) = (spec.r, spec.l, spec.k);
    let d = spec.restricted.as_ref();
    let found = if (r, l) == (0, 0) {
        let all = g.vertices();
        (g.m() == 0 && all.len() <= k && d.is_none_or(|d| all.is_subset(d))).then(|| (all, RLPartition::empty(0, 0)))
    } else {
        lifted(g, r, l, k, d, cfg, &stats)?
    };
    finish(g, spec, found, &stats)
}

fn lifted(
    g: &Graph,
    r: usize,
    l: usize,
    k: usize,
    d: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    // (n, r, l) before each lift
    let mut steps = Vec::new();
    let mut h = g.clone();
    let (mut r, mut l) = (r, l);
    if r == 0 {
        steps.push((h.n(), r, l));
        h = lift_iv(&h, r, l, k).0;
        r = 1;
    }
    while l < 2 {
        steps.push((h.n(), r, l));
        h = lift_iii_small(&h, r, l, k).0;
        l += 1;
    }
    // a solution never needs the added vertices, so only original ones are deletable
    let base = d.cloned().unwrap_or_else(|| g.vertices());
    let found = if r == 1 {
        poly::ivd_12_with(&h, k, Some(&base), cfg, stats)?
    } else {
        fpt::independent_22_with(&h, k, Some(&base), cfg, stats)?
    };
    let Some((s, mut w)) = found else {
        return Ok(None);
    };
    for &(n, r, l) in steps.iter().rev() {
        w = w
            .restrict(&VertexSet::range(n))
            .shrink_to(r, l)
            .ok_or_else(|| Error::Contract("lifted witness does not project".into()))?;
    }
    let s = s.iter().filter(|&v| v < g.n()).collect();
    Ok(Some((s, w)))
}
