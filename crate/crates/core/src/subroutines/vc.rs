//! Vertex cover by bounded search: branch on a maximum-degree vertex or
//! its whole neighbourhood.

use crate::graph::{Graph, Vertex, VertexSet};

/// A vertex cover of size at most `k` using only `deletable` vertices
/// (all vertices when `None`).
pub fn solve_vc(g: &Graph, k: usize, deletable: Option<&VertexSet>) -> Option<VertexSet> {
    let can = |v: Vertex| deletable.is_none_or(|d| d.contains(v));
    let mut removed = vec![false; g.n()];
    let mut chosen = Vec::new();
    if branch(g, k, &can, &mut removed, &mut chosen) {
        Some(VertexSet::from_vec(chosen))
    } else {
        None
    }
}

fn branch(
    g: &Graph,
    budget: usize,
    can: &dyn Fn(Vertex) -> bool,
    removed: &mut [bool],
    chosen: &mut Vec<Vertex>,
) -> bool {
    let live_degree = |v: Vertex, removed: &[bool]| g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
    let pick = (0..g.n())
        .filter(|&v| !removed[v])
        .map(|v| (live_degree(v, removed), v))
        .filter(|&(d, _)| d > 0)
        .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
    let Some((deg, v)) = pick else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    if can(v) {
        removed[v] = true;
        chosen.push(v);
        if branch(g, budget - 1, can, removed, chosen) {
            return true;
        }
        chosen.pop();
        removed[v] = false;
    }
    if deg > budget {
        return false;
    }
    let nbrs: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect();
    if !nbrs.iter().all(|&w| can(w)) {
        return false;
    }
    for &w in &nbrs {
        removed[w] = true;
        chosen.push(w);
    }
    if branch(g, budget - nbrs.len(), can, removed, chosen) {
        return true;
    }
    for &w in &nbrs {
        removed[w] = false;
        chosen.pop();
    }
    false
}
