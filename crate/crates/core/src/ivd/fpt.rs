use rayon::prelude::*;

use super::aux::restricted_independent_oct_with;
use crate::error::{Error, Result};
use crate::graph::{subsets_upto, Graph, Vertex, VertexSet};
use crate::stats::Stats;
use crate::subroutines::solve_restricted_oct_with;
use crate::vd::{coarse_splits, finish, perturbation_lists, solve_22_with, ProblemSpec, Solution, SolverConfig};
use crate::witness::{is_0l, RLPartition};

/// Independent `(2, 2)`-Vertex Deletion.
pub fn independent_22(g: &Graph, k: usize) -> Result<Solution> {
    let stats = Stats::default();
    let found = independent_22_with(g, k, None, &SolverConfig::default(), &stats)?;
    finish(g, &ProblemSpec::new(2, 2, k).independent(), found, &stats)
}

/// Starts from any deletion set `S` of size `<= k`. The independent answer
/// keeps `S \ I` for some independent `I ⊆ S`; those kept vertices are
/// split as in the disjoint solver, after which at most two vertices leave
/// the clique side and the bipartite side needs an independent OCT.
pub(crate) fn independent_22_with(
    g: &Graph,
    k: usize,
    deletable: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    let Some((s, w)) = solve_22_with(g, k, None, cfg, stats)? else {
        return Ok(None);
    };
    let all = g.vertices();
    let d = deletable.unwrap_or(&all);
    let (rs, ls) = w.coarse();
    let pool = s.intersection(d);
    for i_set in subsets_upto(pool.as_slice(), k) {
        if !g.is_independent(&i_set) {
            continue;
        }
        let i_set = VertexSet::from_sorted(i_set);
        let rest = s.difference(&i_set);
        let splits = coarse_splits(g, &rest);
        let tasks: Vec<(usize, VertexSet, Vec<VertexSet>)> = splits
            .iter()
            .enumerate()
            .flat_map(|(idx, (r0, l0))| {
                let (l_sels, r_sels) = perturbation_lists(g, r0, l0, &rs, &ls);
                l_sels.into_iter().map(move |sel| (idx, sel, r_sels.clone()))
            })
            .collect();
        let attempt = |(idx, l_sel, r_sels): &(usize, VertexSet, Vec<VertexSet>)| {
            let (r0, l0) = &splits[*idx];
            let kept_r = rs.difference(l_sel);
            let grown_l = ls.union(l_sel);
            for r_sel in r_sels {
                let r1 = kept_r.union(r_sel);
                let l1 = grown_l.difference(r_sel);
                let guess = Guess { g, k, i_set: &i_set, r0, l0, r1: &r1, l1: &l1, d };
                if let Some(found) = guess.solve(cfg, stats).transpose() {
                    return Some(found);
                }
            }
            None
        };
        let found =
            if cfg.threads > 1 { tasks.par_iter().find_map_first(attempt) } else { tasks.iter().find_map(attempt) };
        if let Some(found) = found {
            return found.map(Some);
        }
    }
    Ok(None)
}

struct Guess<'a> {
    g: &'a Graph,
    k: usize,
    i_set: &'a VertexSet,
    r0: &'a VertexSet,
    l0: &'a VertexSet,
    r1: &'a VertexSet,
    l1: &'a VertexSet,
    d: &'a VertexSet,
}

impl Guess<'_> {
    fn solve(&self, cfg: &SolverConfig, stats: &Stats) -> Result<Option<(VertexSet, RLPartition)>> {
        let g = self.g;
        let budget = self.k - self.i_set.len();
        let l_all = self.l0.union(self.l1);
        let l_pool = self.l1.intersection(self.d);
        let l_primes: Vec<VertexSet> = subsets_upto(l_pool.as_slice(), budget.min(2))
            .map(VertexSet::from_sorted)
            .filter(|lp| {
                g.is_independent(self.i_set.union(lp).as_slice()) && is_0l(g, l_all.difference(lp).as_slice(), 2)
            })
            .collect();
        let Some(first) = l_primes.first() else {
            return Ok(None);
        };
        let r_all = self.r0.union(self.r1);
        if g.two_coloring_of(r_all.as_slice()).is_some() {
            return self.assemble(first, &VertexSet::new(), &l_all, &r_all).map(Some);
        }
        let (h, map) = g.induced_subgraph(&r_all);
        let mut local = vec![usize::MAX; g.n()];
        map.iter().enumerate().for_each(|(i, &v)| local[v] = i);
        let touches = |v: Vertex, set: &VertexSet| g.neighbors(v).iter().any(|&u| set.contains(u));
        let widest: VertexSet = self.r1.intersection(self.d).iter().filter(|&v| !touches(v, self.i_set)).collect();
        // the widest deletable set and largest budget bound every L' below
        let loosest = widest.map(|v| local[v]);
        let room = budget - first.len();
        if solve_restricted_oct_with(&h, &loosest, room, cfg.restricted_backend, Some(stats)).is_none() {
            return Ok(None);
        }
        for lp in &l_primes {
            let blocked = self.i_set.union(lp);
            let dr: VertexSet = widest.iter().filter(|&v| !touches(v, &blocked)).map(|v| local[v]).collect();
            if let Some(rp) = restricted_independent_oct_with(&h, &dr, budget - lp.len(), cfg, stats)? {
                let rp = rp.map(|v| map[v]);
                return self.assemble(lp, &rp, &l_all, &r_all).map(Some);
            }
        }
        Ok(None)
    }

    fn assemble(
        &self,
        l_prime: &VertexSet,
        r_prime: &VertexSet,
        l_all: &VertexSet,
        r_all: &VertexSet,
    ) -> Result<(VertexSet, RLPartition)> {
        let g = self.g;
        let indep = g.two_coloring_of(r_all.difference(r_prime).as_slice());
        let cliques = g.clique_cover_of(l_all.difference(l_prime).as_slice());
        match (indep, cliques) {
            (Some(a), Some(b)) => Ok((
                self.i_set.union(l_prime).union(r_prime),
                RLPartition::new(vec![a.side_a, a.side_b], vec![b.side_a, b.side_b]),
            )),
            _ => Err(Error::Contract("independent guess does not leave a (2,2)-graph".into())),
        }
    }
}
