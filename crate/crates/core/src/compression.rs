//! Generic iterative compression for hereditary graph properties.
//!
//! Vertices are inserted in id order. After each insertion the current
//! deletion set grows by the new vertex; once it exceeds the budget (or
//! holds a vertex that may not be deleted) every split of it into a kept
//! part `S` and a deleted part is tried, and the disjoint solver is asked
//! for a solution avoiding `S`.

use crate::error::{Error, Result};
use crate::graph::{subsets_upto, Graph, Vertex, VertexSet};
use crate::stats::Stats;

/// A hereditary property together with a solver for its disjoint
/// deletion variant. Witnesses certify membership of `G - S` and use the
/// ids of the graph they were produced for.
pub trait CompressionProblem: Sync {
    type Witness: Clone + Send;

    /// Certificate for the graph with no vertices.
    fn empty_witness(&self) -> Self::Witness;

    /// Renames the vertices of a witness.
    fn relabel(&self, w: &Self::Witness, map: &dyn Fn(Vertex) -> Vertex) -> Self::Witness;

    /// Given `promise` with `g - promise` in the property (certified by
    /// `promise_witness`), finds `S' ⊆ deletable \ promise`, `|S'| <= budget`,
    /// with `g - S'` in the property, and a witness for `g - S'`.
    fn solve_disjoint(
        &self,
        g: &Graph,
        budget: usize,
        promise: &VertexSet,
        promise_witness: &Self::Witness,
        deletable: &VertexSet,
        stats: &Stats,
    ) -> Result<Option<(VertexSet, Self::Witness)>>;
}

/// Runs iterative compression. `deletable` restricts which vertices may
/// be deleted (all when `None`). Returns the deletion set and a witness for
/// the remainder, or `None` if no deletion set of size `<= k` exists.
pub fn iterative_compress<P: CompressionProblem>(
    g: &Graph,
    k: usize,
    prob: &P,
    deletable: Option<&VertexSet>,
    stats: &Stats,
) -> Result<Option<(VertexSet, P::Witness)>> {
    let can_delete = |v: Vertex| deletable.is_none_or(|d| d.contains(v));
    let mut current = VertexSet::new();
    let mut witness = prob.empty_witness();
    for v in 0..g.n() {
        // the witness of G_i - S_i also certifies G_{i+1} - (S_i + v)
        current.insert(v);
        let free = current.len() <= k && current.iter().all(can_delete);
        let members = current.as_slice().to_vec();
        let guesses: Box<dyn Iterator<Item = Vec<Vertex>>> = if free {
            // try to keep v outside the solution; otherwise adding it is free
            Box::new(std::iter::once(vec![v]))
        } else {
            Box::new(subsets_upto(&members, members.len()))
        };
        let mut found = None;
        for kept in guesses {
            let kept = VertexSet::from_vec(kept);
            let dropped = current.difference(&kept);
            if dropped.len() > k || !dropped.iter().all(can_delete) {
                continue;
            }
            if kept.is_empty() {
                // nothing left to compress against; `dropped` is a full answer
                found = Some((dropped, witness.clone()));
                break;
            }
            let budget = if free { 0 } else { k - dropped.len() };
            let host = VertexSet::range(v + 1).difference(&dropped);
            let (h, map) = g.induced_subgraph(&host);
            let mut local = vec![usize::MAX; v + 1];
            for (i, &x) in map.iter().enumerate() {
                local[x] = i;
            }
            let local_promise = kept.map(|x| local[x]);
            let local_witness = prob.relabel(&witness, &|x| local[x]);
            let local_deletable: VertexSet = (0..h.n()).filter(|&i| can_delete(map[i])).collect();
            stats.bump_disjoint();
            let result = prob.solve_disjoint(&h, budget, &local_promise, &local_witness, &local_deletable, stats)?;
            if let Some((w, w_witness)) = result {
                if w.len() > budget || !w.is_disjoint(&local_promise) || !w.is_subset(&local_deletable) {
                    return Err(Error::Contract("disjoint solver returned a set that breaks its contract".into()));
                }
                let solution = w.map(|x| map[x]).union(&dropped);
                found = Some((solution, prob.relabel(&w_witness, &|x| map[x])));
                break;
            }
        }
        match found {
            Some((s, w)) => {
                current = s;
                witness = w;
            }
            None if free => {}
            // every guess failed: G_{i+1} has no solution, hence neither has G
            None => return Ok(None),
        }
    }
    Ok(Some((current, witness)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Bipartition;

    /// Bipartiteness with a brute-force disjoint solver, to exercise the
    /// driver on its own.
    struct BruteBipartite {
        calls: std::sync::atomic::AtomicUsize,
    }

    impl CompressionProblem for BruteBipartite {
        type Witness = Bipartition;

        fn empty_witness(&self) -> Bipartition {
            Bipartition { side_a: VertexSet::new(), side_b: VertexSet::new() }
        }

        fn relabel(&self, w: &Bipartition, map: &dyn Fn(Vertex) -> Vertex) -> Bipartition {
            Bipartition { side_a: w.side_a.map(map), side_b: w.side_b.map(map) }
        }

        fn solve_disjoint(
            &self,
            g: &Graph,
            budget: usize,
            promise: &VertexSet,
            promise_witness: &Bipartition,
            deletable: &VertexSet,
            _stats: &Stats,
        ) -> Result<Option<(VertexSet, Bipartition)>> {
            self.calls.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            // the promise must really be a solution
            let (rest, map) = g.remove_vertices(promise);
            assert!(rest.is_bipartite());
            let covered = promise_witness.side_a.union(&promise_witness.side_b);
            assert_eq!(covered, VertexSet::from_vec(map.clone()));
            let pool = deletable.difference(promise);
            for cand in subsets_upto(pool.as_slice(), budget) {
                let s = VertexSet::from_vec(cand);
                let (h, map) = g.remove_vertices(&s);
                if let Some(b) = h.two_coloring() {
                    let w = Bipartition { side_a: b.side_a.map(|x| map[x]), side_b: b.side_b.map(|x| map[x]) };
                    return Ok(Some((s, w)));
                }
            }
            Ok(None)
        }
    }

    fn run(g: &Graph, k: usize, d: Option<&VertexSet>) -> (Option<VertexSet>, usize) {
        let prob = BruteBipartite { calls: Default::default() };
        let out = iterative_compress(g, k, &prob, d, &Stats::default()).unwrap();
        if let Some((s, w)) = &out {
            let (h, map) = g.remove_vertices(s);
            assert!(h.is_bipartite());
            assert_eq!(w.side_a.union(&w.side_b), VertexSet::from_vec(map));
        }
        (out.map(|(s, _)| s), prob.calls.into_inner())
    }

    #[test]
    fn graph_already_in_property() {
        let (s, _) = run(&Graph::cycle(6), 2, None);
        assert_eq!(s, Some(VertexSet::new()));
        let (s, _) = run(&Graph::cycle(6), 0, None);
        assert_eq!(s, Some(VertexSet::new()));
    }

    #[test]
    fn k_zero_decides_membership() {
        assert!(run(&Graph::cycle(5), 0, None).0.is_none());
        assert!(run(&Graph::path(5), 0, None).0.is_some());
    }

    #[test]
    fn call_count_respects_bound() {
        let g = Graph::complete(6);
        for k in 0..5 {
            let (s, calls) = run(&g, k, None);
            assert_eq!(s.is_some(), k >= 4);
            assert!(calls <= g.n() * (1 << (k + 1)), "k={k} calls={calls}");
        }
    }

    #[test]
    fn restriction_is_honoured() {
        let d = VertexSet::from([2]);
        let (s, _) = run(&Graph::cycle(5), 1, Some(&d));
        assert_eq!(s, Some(d));
        assert!(run(&Graph::cycle(5), 3, Some(&VertexSet::new())).0.is_none());
    }
}
