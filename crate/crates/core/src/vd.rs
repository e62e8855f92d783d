//! `(r, l)`-Vertex Deletion for `max(r, l) <= 2`: the disjoint `(2, 2)`
//! solver, its iterative-compression wrapper, the lifts that reduce every
//! other cell to `(2, 2)`, and the dispatcher.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compression::{iterative_compress, CompressionProblem};
use crate::error::{Error, Result};
use crate::graph::{subsets_upto, Graph, Vertex, VertexSet};
use crate::ivd::MincutBackend;
use crate::stats::{Stats, StatsSnapshot};
use crate::subroutines::{solve_restricted_oct_with, solve_vc, RestrictedBackend};
use crate::witness::{is_0l, is_r0, verify_partition_on, RLPartition};

/// A deletion instance apart from the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub r: usize,
    pub l: usize,
    pub k: usize,
    #[serde(default)]
    pub independent: bool,
    /// Deletable vertices; every vertex when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restricted: Option<VertexSet>,
}

impl ProblemSpec {
    pub fn new(r: usize, l: usize, k: usize) -> ProblemSpec {
        ProblemSpec { r, l, k, independent: false, restricted: None }
    }

    pub fn independent(mut self) -> ProblemSpec {
        self.independent = true;
        self
    }

    pub fn restricted(mut self, d: VertexSet) -> ProblemSpec {
        self.restricted = Some(d);
        self
    }

    pub fn is_supported(&self) -> bool {
        self.r.max(self.l) <= 2
    }
}

/// Solver output. `deletion_set` and `witness` are present iff feasible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub feasible: bool,
    pub deletion_set: Option<VertexSet>,
    pub witness: Option<RLPartition>,
    pub stats: StatsSnapshot,
}

/// Knobs shared by all solvers. Answers never depend on `threads`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub threads: usize,
    pub restricted_backend: RestrictedBackend,
    pub mincut_backend: MincutBackend,
    /// Largest tree-decomposition width the DP mincut backend accepts.
    pub width_cap: usize,
    /// Solve `(1,0)`, `(0,1)`, `(2,0)`, `(0,2)` directly instead of lifting.
    pub fast_paths: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            threads: 1,
            restricted_backend: RestrictedBackend::Gadget,
            mincut_backend: MincutBackend::Brute,
            width_cap: 25,
            fast_paths: true,
        }
    }
}

pub(crate) fn check_supported(r: usize, l: usize) -> Result<()> {
    if r.max(l) >= 3 {
        Err(Error::Unsupported { r, l })
    } else {
        Ok(())
    }
}

pub(crate) fn check_restriction(g: &Graph, spec: &ProblemSpec) -> Result<()> {
    match &spec.restricted {
        Some(d) if d.last().is_some_and(|v| v >= g.n()) => Err(Error::Contract(format!(
            "restricted vertex {} out of range for {} vertices",
            d.last().unwrap_or(0),
            g.n()
        ))),
        _ => Ok(()),
    }
}

/// Packs a solver result into a [`Solution`] after re-checking it.
pub(crate) fn finish(
    g: &Graph,
    spec: &ProblemSpec,
    found: Option<(VertexSet, RLPartition)>,
    stats: &Stats,
) -> Result<Solution> {
    let stats = stats.snapshot();
    let Some((s, w)) = found else {
        return Ok(Solution { feasible: false, deletion_set: None, witness: None, stats });
    };
    let rest = g.vertices().difference(&s);
    let ok = s.len() <= spec.k
        && w.r() == spec.r
        && w.l() == spec.l
        && spec.restricted.as_ref().is_none_or(|d| s.is_subset(d))
        && (!spec.independent || g.is_independent(s.as_slice()))
        && verify_partition_on(g, &rest, &w);
    if !ok {
        return Err(Error::Contract("solver produced an unverifiable solution".into()));
    }
    Ok(Solution { feasible: true, deletion_set: Some(s), witness: Some(w), stats })
}

/// Every split of `set` into a bipartite part and a co-bipartite part, by
/// bipartite part in size-then-colex order.
pub(crate) fn coarse_splits(g: &Graph, set: &VertexSet) -> Vec<(VertexSet, VertexSet)> {
    subsets_upto(set.as_slice(), set.len())
        .filter(|r0| is_r0(g, r0, 2))
        .map(VertexSet::from_sorted)
        .filter_map(|r0| {
            let l0 = set.difference(&r0);
            is_0l(g, l0.as_slice(), 2).then_some((r0, l0))
        })
        .collect()
}

/// Perturbation candidates for a fixed `(R0, L0)`: vertices moved into the
/// clique side must stay co-bipartite together with `L0`, and vice versa.
pub(crate) fn perturbation_lists(
    g: &Graph,
    r0: &VertexSet,
    l0: &VertexSet,
    rs: &VertexSet,
    ls: &VertexSet,
) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let l_sels = subsets_upto(rs.as_slice(), 4)
        .map(VertexSet::from_sorted)
        .filter(|sel| is_0l(g, l0.union(sel).as_slice(), 2))
        .collect();
    let r_sels = subsets_upto(ls.as_slice(), 4)
        .map(VertexSet::from_sorted)
        .filter(|sel| is_r0(g, r0.union(sel).as_slice(), 2))
        .collect();
    (l_sels, r_sels)
}

/// Disjoint `(2, 2)`-Vertex Deletion with every vertex deletable.
pub fn disjoint_22(
    g: &Graph,
    k: usize,
    s: &VertexSet,
    witness_s: &RLPartition,
) -> Result<Option<(VertexSet, RLPartition)>> {
    let deletable = g.vertices();
    disjoint_22_with(g, k, s, witness_s, &deletable, &SolverConfig::default(), &Stats::default())
}

pub(crate) fn disjoint_22_with(
    g: &Graph,
    k: usize,
    s: &VertexSet,
    witness_s: &RLPartition,
    deletable: &VertexSet,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    let outside = g.vertices().difference(s);
    if witness_s.r() != 2 || witness_s.l() != 2 || !verify_partition_on(g, &outside, witness_s) {
        return Err(Error::Contract("promise witness is not a (2,2)-partition of G - S".into()));
    }
    let splits = coarse_splits(g, s);
    if splits.is_empty() {
        return Ok(None);
    }
    let (rs, ls) = witness_s.coarse();
    let side_cost = |set: &VertexSet, del: &VertexSet, clique_side: bool| {
        side_oct(g, set, &del.intersection(deletable), 0, k, clique_side, true, cfg, stats).map(|s| s.len())
    };
    // Each side's cost only grows when vertices join it, so the cost of a
    // side with the other perturbation empty is a lower bound for every pair.
    let mut plans = Vec::new();
    for (idx, (r0, l0)) in splits.iter().enumerate() {
        let (l_sels, r_sels) = perturbation_lists(g, r0, l0, &rs, &ls);
        let l_costs: Vec<Option<usize>> = r_sels
            .iter()
            .map(|r_sel| {
                let l1 = ls.difference(r_sel);
                side_cost(&l0.union(&l1), &l1, true)
            })
            .collect();
        for l_sel in l_sels {
            let r1 = rs.difference(&l_sel);
            let Some(r_bound) = side_cost(&r0.union(&r1), &r1, false) else {
                continue;
            };
            let partners: Vec<(VertexSet, usize)> = r_sels
                .iter()
                .zip(&l_costs)
                .filter_map(|(r_sel, lc)| lc.filter(|lc| lc + r_bound <= k).map(|lc| (r_sel.clone(), lc)))
                .collect();
            if !partners.is_empty() {
                plans.push(Plan { split: idx, l_sel, r_bound, partners });
            }
        }
    }

    let tried = std::sync::atomic::AtomicU64::new(0);
    let attempt = |plan: &Plan| -> Result<Option<(VertexSet, RLPartition)>> {
        let (r0, l0) = &splits[plan.split];
        let kept_r = rs.difference(&plan.l_sel);
        let grown_l = ls.union(&plan.l_sel);
        for (r_sel, l_bound) in &plan.partners {
            tried.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            let r1 = kept_r.union(r_sel);
            let l1 = grown_l.difference(r_sel);
            let bounds = (*l_bound, plan.r_bound);
            if let Some(found) = finish_guess(g, k, bounds, r0, l0, &r1, &l1, deletable, cfg, stats)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    };
    let result = if cfg.threads > 1 {
        plans.par_iter().map(|p| attempt(p).transpose()).find_map_first(|x| x).transpose()
    } else {
        plans.iter().map(|p| attempt(p).transpose()).find_map(|x| x).transpose()
    };
    stats.add_perturbations(tried.into_inner());
    result
}

/// A perturbation `l_sel` of one `(R0, L0)` guess with the `r_sel` partners
/// that survive the lower bounds.
struct Plan {
    split: usize,
    l_sel: VertexSet,
    r_bound: usize,
    partners: Vec<(VertexSet, usize)>,
}

/// The two OCT calls for one `(R0, L0, R1, L1)` guess; `bounds` are lower
/// bounds on the clique-side and bipartite-side costs.
#[allow(clippy::too_many_arguments)]
fn finish_guess(
    g: &Graph,
    k: usize,
    bounds: (usize, usize),
    r0: &VertexSet,
    l0: &VertexSet,
    r1: &VertexSet,
    l1: &VertexSet,
    deletable: &VertexSet,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    let (l_bound, r_bound) = bounds;
    let l_all = l0.union(l1);
    let l_del = l1.intersection(deletable);
    let Some(l_prime) = side_oct(g, &l_all, &l_del, l_bound, k - r_bound, true, true, cfg, stats) else {
        return Ok(None);
    };
    let r_all = r0.union(r1);
    let r_del = r1.intersection(deletable);
    let room = k - l_prime.len();
    let Some(r_prime) = side_oct(g, &r_all, &r_del, r_bound, room, false, false, cfg, stats) else {
        return Ok(None);
    };
    let keep_r = r_all.difference(&r_prime);
    let keep_l = l_all.difference(&l_prime);
    let indep = g.two_coloring_of(keep_r.as_slice());
    let cliques = g.clique_cover_of(keep_l.as_slice());
    match (indep, cliques) {
        (Some(a), Some(b)) => {
            Ok(Some((l_prime.union(&r_prime), RLPartition::new(vec![a.side_a, a.side_b], vec![b.side_a, b.side_b]))))
        }
        _ => Err(Error::Contract("restricted OCT returned a non-transversal".into())),
    }
}

/// A restricted OCT of `G[set]`, or of its complement for the clique side,
/// deleting only from `del`. With `minimal`, budgets `from..=cap` are tried
/// in ascending order (the caller knows nothing smaller than `from`
/// works), so the result is a smallest one; otherwise a single call with
/// budget `cap` returns any solution.
#[allow(clippy::too_many_arguments)]
fn side_oct(
    g: &Graph,
    set: &VertexSet,
    del: &VertexSet,
    from: usize,
    cap: usize,
    clique_side: bool,
    minimal: bool,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Option<VertexSet> {
    let fine = if clique_side {
        g.clique_cover_of(set.as_slice()).is_some()
    } else {
        g.two_coloring_of(set.as_slice()).is_some()
    };
    if fine {
        return Some(VertexSet::new());
    }
    if cap == 0 || from > cap {
        return None;
    }
    let (mut h, map) = g.induced_subgraph(set);
    if clique_side {
        h = h.complement();
    }
    let mut local = vec![usize::MAX; g.n()];
    map.iter().enumerate().for_each(|(i, &v)| local[v] = i);
    let d = del.map(|v| local[v]);
    let call = |i: usize| solve_restricted_oct_with(&h, &d, i, cfg.restricted_backend, Some(stats));
    let found = if minimal { (from.max(1)..=cap).find_map(call) } else { call(cap) };
    found.map(|sol| sol.map(|v| map[v]))
}

/// The `(2, 2)` property with the disjoint solver plugged into compression.
struct TwoTwo<'a> {
    cfg: &'a SolverConfig,
}

impl CompressionProblem for TwoTwo<'_> {
    type Witness = RLPartition;

    fn empty_witness(&self) -> RLPartition {
        RLPartition::empty(2, 2)
    }

    fn relabel(&self, w: &RLPartition, map: &dyn Fn(Vertex) -> Vertex) -> RLPartition {
        w.map(map)
    }

    fn solve_disjoint(
        &self,
        g: &Graph,
        budget: usize,
        promise: &VertexSet,
        promise_witness: &RLPartition,
        deletable: &VertexSet,
        stats: &Stats,
    ) -> Result<Option<(VertexSet, RLPartition)>> {
        disjoint_22_with(g, budget, promise, promise_witness, deletable, self.cfg, stats)
    }
}

/// `(2, 2)`-Vertex Deletion.
pub fn solve_22(g: &Graph, k: usize) -> Result<Solution> {
    solve_vd(g, &ProblemSpec::new(2, 2, k), &SolverConfig::default())
}

pub(crate) fn solve_22_with(
    g: &Graph,
    k: usize,
    deletable: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    iterative_compress(g, k, &TwoTwo { cfg }, deletable, stats)
}

/// Appends `size` new vertices (ids `n..n+size`) forming a clique or an
/// independent set, joined to every original vertex when `joined`. The
/// relabeling maps each vertex to its original, `None` for new ones.
pub(crate) fn append_block(g: &Graph, size: usize, clique: bool, joined: bool) -> (Graph, Vec<Option<Vertex>>) {
    let n = g.n();
    let mut adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    adj.resize(n + size, Vec::new());
    for a in n..n + size {
        if clique {
            adj[a].extend((n..n + size).filter(|&b| b != a));
        }
        if joined {
            for v in 0..n {
                adj[a].push(v);
                adj[v].push(a);
            }
        }
    }
    let relabel = (0..n + size).map(|v| (v < n).then_some(v)).collect();
    (Graph::from_adjacency(adj), relabel)
}

/// Disjoint union with a clique of size `r + k + 1`: `(r, l)` deletion on
/// `g` is equivalent to `(r, l + 1)` deletion on the result.
pub fn lift_add_clique(g: &Graph, r: usize, _l: usize, k: usize) -> (Graph, Vec<Option<Vertex>>) {
    append_block(g, r + k + 1, true, false)
}

/// `(r, l)` deletion on `g` is `(l, r)` deletion on the complement.
pub fn lift_complement(g: &Graph, r: usize, l: usize, k: usize) -> (Graph, ProblemSpec) {
    (g.complement(), ProblemSpec::new(l, r, k))
}

/// `(r, l)`-Vertex Deletion for `max(r, l) <= 2`.
pub fn solve_vd(g: &Graph, spec: &ProblemSpec, cfg: &SolverConfig) -> Result<Solution> {
    if spec.independent {
        return Err(Error::Contract("solve_vd handles the plain variant only".into()));
    }
    check_supported(spec.r, spec.l)?;
    check_restriction(g, spec)?;
    let stats = Stats::default();
    let (r, l, k) = (spec.r, spec.l, spec.k);
    let d = spec.restricted.as_ref();
    let found = match (r, l) {
        (0, 0) => {
            let all = g.vertices();
            (all.len() <= k && d.is_none_or(|d| all.is_subset(d))).then(|| (all, RLPartition::empty(0, 0)))
        }
        (1, 0) | (0, 1) | (2, 0) | (0, 2) if cfg.fast_paths => fast_path(g, r, l, k, d, cfg, &stats),
        _ => lifted(g, r, l, k, d, cfg, &stats)?,
    };
    finish(g, spec, found, &stats)
}

fn fast_path(
    g: &Graph,
    r: usize,
    l: usize,
    k: usize,
    d: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Option<(VertexSet, RLPartition)> {
    if r == 0 {
        let (s, w) = fast_path(&g.complement(), l, r, k, d, cfg, stats)?;
        return Some((s, w.swap_roles()));
    }
    let s = if r == 1 {
        solve_vc(g, k, d)?
    } else {
        let all = g.vertices();
        solve_restricted_oct_with(g, d.unwrap_or(&all), k, cfg.restricted_backend, Some(stats))?
    };
    let rest = g.vertices().difference(&s);
    let classes = if r == 1 {
        vec![rest]
    } else {
        let b = g.two_coloring_of(rest.as_slice())?;
        vec![b.side_a, b.side_b]
    };
    Some((s, RLPartition::new(classes, vec![])))
}

/// One reversible step on the way up to `(2, 2)`.
enum Step {
    /// A clique was appended to a graph on `n` vertices with target `(r, l)`.
    Clique {
        n: usize,
        r: usize,
        l: usize,
    },
    Complement,
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
    let mut h = g.clone();
    let (mut r, mut l) = (r, l);
    let mut steps = Vec::new();
    let raise_l = |h: &mut Graph, r: usize, l: &mut usize, steps: &mut Vec<Step>| {
        while *l < 2 {
            steps.push(Step::Clique { n: h.n(), r, l: *l });
            *h = lift_add_clique(h, r, *l, k).0;
            *l += 1;
        }
    };
    raise_l(&mut h, r, &mut l, &mut steps);
    if r < 2 {
        // raise r as l of the complement, then come back
        steps.push(Step::Complement);
        h = h.complement();
        std::mem::swap(&mut r, &mut l);
        raise_l(&mut h, r, &mut l, &mut steps);
        steps.push(Step::Complement);
        h = h.complement();
    }
    // a solution never needs the added vertices, so only original ones are deletable
    let base = d.cloned().unwrap_or_else(|| g.vertices());
    let Some((s, mut w)) = solve_22_with(&h, k, Some(&base), cfg, stats)? else {
        return Ok(None);
    };
    for step in steps.iter().rev() {
        w = match *step {
            Step::Complement => w.swap_roles(),
            Step::Clique { n, r, l } => w
                .restrict(&VertexSet::range(n))
                .shrink_to(r, l)
                .ok_or_else(|| Error::Contract("lifted witness does not project".into()))?,
        };
    }
    let s = s.iter().filter(|&v| v < g.n()).collect();
    Ok(Some((s, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_partition;

    fn three_c5() -> Graph {
        Graph::cycle(5).disjoint_union(&Graph::cycle(5)).disjoint_union(&Graph::cycle(5))
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    fn feasible(g: &Graph, r: usize, l: usize, k: usize) -> bool {
        solve_vd(g, &ProblemSpec::new(r, l, k), &SolverConfig::default()).unwrap().feasible
    }

    #[test]
    fn cliques_are_22() {
        let sol = solve_22(&Graph::complete(6), 0).unwrap();
        assert!(sol.feasible);
        assert_eq!(sol.deletion_set, Some(VertexSet::new()));
        let w = sol.witness.unwrap();
        assert_eq!(w.cliques[0], VertexSet::range(6));
    }

    #[test]
    fn c5_is_22() {
        assert!(solve_22(&Graph::cycle(5), 0).unwrap().feasible);
    }

    #[test]
    fn three_c5_needs_one_deletion() {
        let g = three_c5();
        assert!(!solve_22(&g, 0).unwrap().feasible);
        let sol = solve_22(&g, 1).unwrap();
        assert_eq!(sol.deletion_set.unwrap().len(), 1);
    }

    #[test]
    fn disjoint_solver_examples() {
        let g = Graph::cycle(6);
        let s = VertexSet::from([0]);
        let (h, map) = g.remove_vertices(&s);
        let b = h.two_coloring().unwrap();
        let w = RLPartition::new(
            vec![b.side_a.map(|v| map[v]), b.side_b.map(|v| map[v])],
            vec![VertexSet::new(), VertexSet::new()],
        );
        let (sol, wit) = disjoint_22(&g, 0, &s, &w).unwrap().unwrap();
        assert!(sol.is_empty());
        assert!(verify_partition(&g, &wit));

        // 3·C5 with one component's vertex promised: delete in another one
        let g = three_c5();
        let s = VertexSet::from([0, 5]);
        let keep = g.vertices().difference(&s);
        let w = crate::oracle::brute_is_rl(&g.induced_subgraph(&keep).0, 2, 2).unwrap();
        let (_, map) = g.induced_subgraph(&keep);
        let w = w.map(|v| map[v]);
        let (sol, _) = disjoint_22(&g, 1, &s, &w).unwrap().unwrap();
        assert_eq!(sol.len(), 1);
        assert!(sol.first().unwrap() >= 10);
        assert!(disjoint_22(&g, 0, &s, &w).unwrap().is_none());
    }

    #[test]
    fn broken_promise_is_a_contract_error() {
        let g = Graph::cycle(5);
        let w = RLPartition::empty(2, 2);
        assert!(matches!(disjoint_22(&g, 1, &VertexSet::new(), &w), Err(Error::Contract(_))));
    }

    #[test]
    fn dispatch_examples() {
        let sol = solve_vd(&Graph::path(3), &ProblemSpec::new(1, 0, 1), &SolverConfig::default()).unwrap();
        assert_eq!(sol.deletion_set, Some(VertexSet::from([1])));
        assert!(feasible(&Graph::cycle(5), 2, 0, 1));
        assert!(!feasible(&Graph::cycle(5), 2, 0, 0));
        assert!(feasible(&petersen(), 2, 0, 3));
        assert!(!feasible(&petersen(), 2, 0, 2));
        assert!(feasible(&Graph::empty(3), 0, 0, 3));
        assert!(!feasible(&Graph::empty(3), 0, 0, 2));
        let err = solve_vd(&Graph::cycle(5), &ProblemSpec::new(3, 0, 1), &SolverConfig::default());
        assert!(matches!(err, Err(Error::Unsupported { r: 3, l: 0 })));
    }

    #[test]
    fn lifted_path_agrees_with_fast_paths() {
        let slow = SolverConfig { fast_paths: false, ..Default::default() };
        for g in [Graph::cycle(5), petersen(), Graph::complete(4), Graph::path(4)] {
            for (r, l) in [(1, 0), (0, 1), (2, 0), (0, 2)] {
                for k in 0..3 {
                    let spec = ProblemSpec::new(r, l, k);
                    let a = solve_vd(&g, &spec, &SolverConfig::default()).unwrap();
                    let b = solve_vd(&g, &spec, &slow).unwrap();
                    assert_eq!(a.feasible, b.feasible, "r={r} l={l} k={k}");
                }
            }
        }
    }

    #[test]
    fn lift_examples() {
        let (h, relabel) = lift_add_clique(&Graph::empty(0), 1, 0, 0);
        assert_eq!(h, Graph::complete(2));
        assert_eq!(relabel, vec![None, None]);
        let (h, _) = lift_add_clique(&Graph::cycle(5), 2, 1, 1);
        assert_eq!(h.n(), 9);
        assert_eq!(h.m(), 5 + 6);
        let (h, spec) = lift_complement(&Graph::complete(5), 0, 1, 0);
        assert_eq!(h, Graph::empty(5));
        assert_eq!((spec.r, spec.l), (1, 0));
        let (back, _) = lift_complement(&h, 1, 0, 0);
        assert_eq!(back, Graph::complete(5));
    }

    #[test]
    fn restricted_lifted_solution_stays_inside() {
        let g = three_c5();
        let d = VertexSet::from([7]);
        let spec = ProblemSpec::new(2, 2, 1).restricted(d.clone());
        let sol = solve_vd(&g, &spec, &SolverConfig::default()).unwrap();
        assert_eq!(sol.deletion_set, Some(d));
        let spec = ProblemSpec::new(2, 1, 2).restricted(VertexSet::new());
        assert!(!solve_vd(&g, &spec, &SolverConfig::default()).unwrap().feasible);
    }

    #[test]
    fn threads_do_not_change_answers() {
        let par = SolverConfig { threads: 4, ..Default::default() };
        let g = three_c5();
        for k in 0..3 {
            let spec = ProblemSpec::new(2, 2, k);
            let a = solve_vd(&g, &spec, &SolverConfig::default()).unwrap();
            let b = crate::solve(&g, &spec, &par).unwrap();
            assert_eq!(a.deletion_set, b.deletion_set);
            assert_eq!(a.witness, b.witness);
        }
    }
}
