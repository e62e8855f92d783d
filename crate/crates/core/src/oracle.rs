//! Exhaustive reference solvers. They only use adjacency queries and share
//! nothing with the algorithms they check.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::vd::ProblemSpec;
use crate::witness::RLPartition;

pub const MAX_VD_VERTICES: usize = 16;
pub const MAX_SPLIT_VERTICES: usize = 12;

/// First `(r, l)`-partition of `g` in lexicographic order of the class
/// labels (independent sets first), found by backtracking. Classes of one
/// kind are interchangeable, so a vertex only opens the first empty one.
pub fn brute_is_rl(g: &Graph, r: usize, l: usize) -> Option<RLPartition> {
    let n = g.n();
    let slots = r + l;
    if n > 0 && slots == 0 {
        return None;
    }
    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); slots];
    if place(g, 0, r, &mut classes) {
        let (indep, cliques) = classes.split_at(r);
        let to_sets = |cs: &[Vec<Vertex>]| cs.iter().map(|c| VertexSet::from_vec(c.clone())).collect();
        Some(RLPartition::new(to_sets(indep), to_sets(cliques)))
    } else {
        None
    }
}

fn place(g: &Graph, v: Vertex, r: usize, classes: &mut [Vec<Vertex>]) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..classes.len() {
        let independent = c < r;
        if classes[c].is_empty() {
            let kind_start = if independent { 0 } else { r };
            if (kind_start..c).any(|e| classes[e].is_empty()) {
                continue;
            }
        }
        let fits = classes[c].iter().all(|&u| g.has_edge(u, v) != independent);
        if fits {
            classes[c].push(v);
            if place(g, v + 1, r, classes) {
                return true;
            }
            classes[c].pop();
        }
    }
    false
}

/// Second implementation for tiny graphs: tries every labeling as a number
/// in base `r + l` and checks each class with adjacency bitmasks.
pub fn brute_is_rl_bitmask(g: &Graph, r: usize, l: usize) -> Result<bool> {
    let n = g.n();
    if n > 6 {
        return Err(Error::SizeGuard { n, max: 6 });
    }
    let slots = r + l;
    if n == 0 {
        return Ok(true);
    }
    if slots == 0 {
        return Ok(false);
    }
    let adj: Vec<u32> = (0..n).map(|v| (0..n).filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u)).collect();
    let total = slots.pow(n as u32);
    'labeling: for code in 0..total {
        let mut members = vec![0u32; slots];
        let mut c = code;
        for v in 0..n {
            members[c % slots] |= 1 << v;
            c /= slots;
        }
        for (class, &mask) in members.iter().enumerate() {
            for (v, &nbrs) in adj.iter().enumerate() {
                if mask >> v & 1 == 0 {
                    continue;
                }
                let others = mask & !(1 << v);
                let ok = if class < r { nbrs & others == 0 } else { nbrs & others == others };
                if !ok {
                    continue 'labeling;
                }
            }
        }
        return Ok(true);
    }
    Ok(false)
}

fn induced(g: &Graph, keep: &[Vertex]) -> Graph {
    let mut edges = Vec::new();
    for (i, &u) in keep.iter().enumerate() {
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(keep.len(), edges).expect("induced edges are in range")
}

/// Masks of `bits` bits with `size` ones, in increasing numeric order.
fn masks_of_size(bits: usize, size: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << bits).filter(move |m| m.count_ones() as usize == size)
}

/// A minimum deletion set for `spec`, searching subsets by size then colex
/// order. Handles the restricted and independent variants.
pub fn brute_vd(g: &Graph, spec: &ProblemSpec) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > MAX_VD_VERTICES {
        return Err(Error::SizeGuard { n, max: MAX_VD_VERTICES });
    }
    let pool: Vec<Vertex> = match &spec.restricted {
        Some(d) => d.iter().filter(|&v| v < n).collect(),
        None => (0..n).collect(),
    };
    for size in 0..=spec.k.min(pool.len()) {
        for mask in masks_of_size(pool.len(), size) {
            let s: Vec<Vertex> = (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
            if spec.independent && s.iter().enumerate().any(|(i, &u)| s[i + 1..].iter().any(|&v| g.has_edge(u, v))) {
                continue;
            }
            let keep: Vec<Vertex> = (0..n).filter(|v| !s.contains(v)).collect();
            if brute_is_rl(&induced(g, &keep), spec.r, spec.l).is_some() {
                return Ok(Some(VertexSet::from_vec(s)));
            }
        }
    }
    Ok(None)
}

/// Every coarse split `(R, L)` of `g` with `G[R]` an `(r, 0)`-graph and
/// `G[L]` a `(0, l)`-graph, by `R` as a bitmask in increasing order.
pub fn brute_coarse_splits(g: &Graph, r: usize, l: usize) -> Result<Vec<(VertexSet, VertexSet)>> {
    let n = g.n();
    if n > MAX_SPLIT_VERTICES {
        return Err(Error::SizeGuard { n, max: MAX_SPLIT_VERTICES });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let big_r: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let big_l: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        if brute_is_rl(&induced(g, &big_r), r, 0).is_some() && brute_is_rl(&induced(g, &big_l), 0, l).is_some() {
            out.push((VertexSet::from_vec(big_r), VertexSet::from_vec(big_l)));
        }
    }
    Ok(out)
}

/// Number of distinct coarse `(r, l)` splits.
pub fn brute_count_partitions(g: &Graph, r: usize, l: usize) -> Result<usize> {
    Ok(brute_coarse_splits(g, r, l)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_partition;

    fn three_c5() -> Graph {
        Graph::cycle(5).disjoint_union(&Graph::cycle(5)).disjoint_union(&Graph::cycle(5))
    }

    #[test]
    fn recognition_examples() {
        assert!(brute_is_rl(&Graph::cycle(5), 2, 0).is_none());
        let p = brute_is_rl(&Graph::cycle(5), 2, 2).unwrap();
        assert!(verify_partition(&Graph::cycle(5), &p));
        for m in 0..8 {
            assert!(brute_is_rl(&Graph::complete(m), 0, 1).is_some());
        }
        assert!(brute_is_rl(&Graph::empty(0), 0, 0).is_some());
        assert!(brute_is_rl(&Graph::empty(1), 0, 0).is_none());
    }

    #[test]
    fn implementations_agree_on_small_graphs() {
        let graphs =
            [Graph::cycle(5), Graph::complete(4), Graph::path(6), three_c5().induced_subgraph(&VertexSet::range(6)).0];
        for g in &graphs {
            for r in 0..3 {
                for l in 0..3 {
                    assert_eq!(brute_is_rl(g, r, l).is_some(), brute_is_rl_bitmask(g, r, l).unwrap());
                }
            }
        }
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(brute_vd(&Graph::cycle(5), &ProblemSpec::new(2, 2, 0)).unwrap(), Some(VertexSet::new()));
        let s = brute_vd(&three_c5(), &ProblemSpec::new(2, 2, 1)).unwrap().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(brute_vd(&three_c5(), &ProblemSpec::new(2, 2, 0)).unwrap(), None);
        for k in 0..3 {
            let spec = ProblemSpec::new(1, 0, k).independent();
            assert_eq!(brute_vd(&Graph::complete(3), &spec).unwrap(), None);
        }
        let big = Graph::empty(17);
        assert!(matches!(brute_vd(&big, &ProblemSpec::new(1, 0, 0)), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn split_counts() {
        assert_eq!(brute_count_partitions(&Graph::path(3), 1, 1).unwrap(), 3);
        assert_eq!(brute_count_partitions(&Graph::empty(1), 1, 1).unwrap(), 2);
    }
}
