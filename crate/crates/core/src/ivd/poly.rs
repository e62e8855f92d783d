use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::stats::Stats;
use crate::subroutines::min_independent_vertex_cover;
use crate::vd::{finish, solve_22_with, ProblemSpec, Solution, SolverConfig};
use crate::witness::{enumerate_partitions, RLPartition};

/// Independent `(1, 2)`-Vertex Deletion. An independent deletion set leaves
/// every split intact on the clique side, so `g` itself must be a
/// `(2, 2)`-graph; each coarse split is then tried with a minimum
/// independent vertex cover of its bipartite side.
pub fn ivd_12_poly(g: &Graph, k: usize) -> Result<Solution> {
    let stats = Stats::default();
    let found = ivd_12_with(g, k, None, &SolverConfig::default(), &stats)?;
    finish(g, &ProblemSpec::new(1, 2, k).independent(), found, &stats)
}

pub(crate) fn ivd_12_with(
    g: &Graph,
    k: usize,
    deletable: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<(VertexSet, RLPartition)>> {
    let Some((_, base)) = solve_22_with(g, 0, None, cfg, stats)? else {
        return Ok(None);
    };
    for split in enumerate_partitions(g, &base)? {
        let (big_r, _) = split.coarse();
        let (h, map) = g.induced_subgraph(&big_r);
        let mut local = vec![usize::MAX; g.n()];
        map.iter().enumerate().for_each(|(i, &v)| local[v] = i);
        let d = deletable.map(|d| d.intersection(&big_r).map(|v| local[v]));
        let Some(cover) = min_independent_vertex_cover(&h, d.as_ref()) else {
            continue;
        };
        if cover.len() > k {
            continue;
        }
        let s = cover.map(|v| map[v]);
        let w = RLPartition::new(vec![big_r.difference(&s)], split.cliques.clone());
        return Ok(Some((s, w)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_need_nothing() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let sol = ivd_12_poly(&g, 0).unwrap();
        assert_eq!(sol.deletion_set, Some(VertexSet::new()));
    }

    #[test]
    fn c5_examples() {
        // {0, 2} | {1} {3, 4}
        assert!(ivd_12_poly(&Graph::cycle(5), 0).unwrap().feasible);
        assert!(ivd_12_poly(&Graph::cycle(5), 1).unwrap().feasible);
        // C7 needs its odd cycle broken inside the bipartite side
        assert!(!ivd_12_poly(&Graph::cycle(7), 0).unwrap().feasible);
    }

    #[test]
    fn non_22_graph_is_never_feasible() {
        let g = Graph::cycle(5).disjoint_union(&Graph::cycle(5)).disjoint_union(&Graph::cycle(5));
        for k in 0..4 {
            assert!(!ivd_12_poly(&g, k).unwrap().feasible);
        }
    }
}
