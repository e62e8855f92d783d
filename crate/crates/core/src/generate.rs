//! Seeded instance generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are in range")
}

/// A graph that becomes an `(r, l)`-graph after deleting `deletion`.
#[derive(Clone, Debug)]
pub struct Planted {
    pub graph: Graph,
    pub deletion: VertexSet,
}

/// Random `(r, l)`-graph on `n - k` vertices (each vertex in a random class,
/// cross edges with probability `p`) plus `k` spoiler vertices with random
/// edges, under a random relabeling.
pub fn planted(n: usize, r: usize, l: usize, k: usize, p: f64, seed: u64) -> Planted {
    assert!(k <= n, "more spoilers than vertices");
    assert!(r + l > 0 || n == k, "an (0, 0)-graph has no vertices");
    let mut rng = rng(seed);
    let core = n - k;
    let class: Vec<usize> = (0..core).map(|_| rng.gen_range(0..(r + l).max(1))).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let edge = if v < core && class[u] == class[v] { class[u] >= r } else { rng.gen_bool(p) };
            if edge {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges = edges.into_iter().map(|(u, v)| (perm[u], perm[v]));
    Planted {
        graph: Graph::new(n, edges).expect("generated edges are in range"),
        deletion: (core..n).map(|v| perm[v]).collect(),
    }
}

/// One representative of every isomorphism class of graphs on `n <= 7`
/// vertices, built by adding a vertex to the classes on `n - 1` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "enumeration is only meant for tiny graphs");
    let mut layer: Vec<u32> = vec![0];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &code in &layer {
            for nbrs in 0u32..1 << (size - 1) {
                let mut bits = code;
                for u in 0..size - 1 {
                    if nbrs >> u & 1 == 1 {
                        bits |= 1 << pair_index(u, size - 1);
                    }
                }
                let canon = canonical(bits, size);
                if seen.insert(canon) {
                    next.push(canon);
                }
            }
        }
        next.sort_unstable();
        layer = next;
    }
    layer.into_iter().map(|code| decode(code, n)).collect()
}

/// Bit position of the pair `u < v`, ordered by `v` then `u`, so that codes
/// on `n - 1` vertices are valid codes on `n`.
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn decode(code: u32, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if code >> pair_index(u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("decoded edges are in range")
}

/// Smallest code over relabelings that list vertices by non-decreasing
/// degree. Degree is invariant, so isomorphic graphs share the minimum.
fn canonical(code: u32, n: usize) -> u32 {
    let adj = |u: usize, v: usize| u != v && code >> pair_index(u.min(v), u.max(v)) & 1 == 1;
    let degree: Vec<usize> = (0..n).map(|v| (0..n).filter(|&u| adj(u, v)).count()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| degree[v]);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(grp) if degree[grp[0]] == degree[v] => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u32::MAX;
    let mut slots: Vec<usize> = Vec::with_capacity(n);
    permute_groups(&mut groups, 0, &mut slots, &mut |label_order| {
        let mut c = 0u32;
        for v in 0..n {
            for u in 0..v {
                if adj(label_order[u], label_order[v]) {
                    c |= 1 << pair_index(u, v);
                }
            }
        }
        best = best.min(c);
    });
    best
}

/// Calls `visit` with every concatenation of per-group permutations.
fn permute_groups(groups: &mut [Vec<usize>], g: usize, prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if g == groups.len() {
        visit(prefix);
        return;
    }
    let len = groups[g].len();
    heap_permute(groups, g, len, prefix, visit);
}

fn heap_permute(
    groups: &mut [Vec<usize>],
    g: usize,
    k: usize,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if k <= 1 {
        let before = prefix.len();
        prefix.extend(groups[g].iter().copied());
        permute_groups(groups, g + 1, prefix, visit);
        prefix.truncate(before);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(groups, g, k - 1, prefix, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        groups[g].swap(j, k - 1);
    }
    heap_permute(groups, g, k - 1, prefix, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(random_graph(20, 0.3, 7), random_graph(20, 0.3, 7));
        assert_ne!(random_graph(20, 0.3, 7), random_graph(20, 0.3, 8));
    }

    #[test]
    fn planted_deletion_works() {
        for seed in 0..20 {
            let pl = planted(12, 2, 2, 3, 0.5, seed);
            assert_eq!(pl.deletion.len(), 3);
            let (h, _) = pl.graph.remove_vertices(&pl.deletion);
            assert!(crate::oracle::brute_is_rl(&h, 2, 2).is_some());
        }
    }
}
