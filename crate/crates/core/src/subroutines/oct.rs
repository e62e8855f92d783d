//! Odd cycle transversal by iterative compression, with an optional set of
//! undeletable vertices handled natively inside the compression step, and
//! the copy-gadget reduction for the restricted problem.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::stats::Stats;

use super::flow::min_vertex_cut;

/// How [`solve_restricted_oct`] treats undeletable vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RestrictedBackend {
    /// Replace every undeletable vertex by `k + 1` false twins and run plain OCT.
    #[default]
    Gadget,
    /// Forbid undeletable vertices inside the compression step.
    Native,
}

/// A graph with a deletable set `d` and a budget `k`.
#[derive(Clone, Debug)]
pub struct RestrictedInstance {
    pub g: Graph,
    pub d: VertexSet,
    pub k: usize,
}

/// A set of at most `k` vertices whose removal makes `g` bipartite.
pub fn solve_oct(g: &Graph, k: usize) -> Option<VertexSet> {
    oct_compress(g, k, None, None)
}

/// Restricted OCT through the chosen backend.
pub fn solve_restricted_oct(inst: &RestrictedInstance, backend: RestrictedBackend) -> Option<VertexSet> {
    solve_restricted_oct_with(&inst.g, &inst.d, inst.k, backend, None)
}

pub(crate) fn solve_restricted_oct_with(
    g: &Graph,
    d: &VertexSet,
    k: usize,
    backend: RestrictedBackend,
    stats: Option<&Stats>,
) -> Option<VertexSet> {
    if let Some(st) = stats {
        st.bump_oct();
    }
    let sol = match backend {
        RestrictedBackend::Native => {
            let mut deletable = vec![false; g.n()];
            d.iter().for_each(|v| deletable[v] = true);
            oct_compress(g, k, Some(&deletable), stats)?
        }
        RestrictedBackend::Gadget => {
            let (gadget, _) = twin_gadget(g, d, k);
            let raw = oct_compress(&gadget, k, None, stats)?;
            // copies never need to be deleted: a surviving twin pins the
            // side of every deleted one
            let projected: VertexSet = raw.iter().filter(|&v| v < g.n() && d.contains(v)).collect();
            if !g.remove_vertices(&projected).0.is_bipartite() {
                return None;
            }
            projected
        }
    };
    debug_assert!(sol.is_subset(d) && sol.len() <= k);
    debug_assert!(g.remove_vertices(&sol).0.is_bipartite());
    Some(sol)
}

/// The restricted-problem gadget: every vertex outside `d` is replaced by
/// `k + 1` pairwise non-adjacent copies sharing its neighbourhood. Vertex
/// `v < n` keeps its id (the first copy); extra copies follow. The second
/// value maps every gadget vertex to its original.
pub fn twin_gadget(g: &Graph, d: &VertexSet, k: usize) -> (Graph, Vec<Vertex>) {
    let n = g.n();
    let mut origin: Vec<Vertex> = (0..n).collect();
    let mut copies: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    for (v, own) in copies.iter_mut().enumerate() {
        if !d.contains(v) {
            for _ in 0..k {
                own.push(origin.len());
                origin.push(v);
            }
        }
    }
    let mut adj = vec![Vec::new(); origin.len()];
    for (u, v) in g.edges() {
        for &cu in &copies[u] {
            for &cv in &copies[v] {
                adj[cu].push(cv);
                adj[cv].push(cu);
            }
        }
    }
    (Graph::from_adjacency(adj), origin)
}

/// Iterative compression over vertices in id order. `deletable`, when
/// given, marks which vertices may enter the solution.
pub(crate) fn oct_compress(
    g: &Graph,
    k: usize,
    deletable: Option<&[bool]>,
    stats: Option<&Stats>,
) -> Option<VertexSet> {
    let can_delete = |v: Vertex| deletable.is_none_or(|d| d[v]);
    let n = g.n();
    let mut active = vec![false; n];
    let mut solution: Vec<Vertex> = Vec::new();
    for v in 0..n {
        active[v] = true;
        // cheap case: v joins the bipartite remainder unchanged
        if remainder_bipartite(g, &active, &solution) {
            continue;
        }
        if can_delete(v) && solution.len() < k {
            solution.push(v);
            continue;
        }
        let mut promise = solution.clone();
        promise.push(v);
        solution = compress(g, &active, &promise, k, &can_delete, stats)?;
    }
    Some(VertexSet::from_vec(solution))
}

fn remainder_bipartite(g: &Graph, active: &[bool], removed: &[Vertex]) -> bool {
    coloring(g, active, removed).is_some()
}

/// BFS 2-coloring of the active vertices minus `removed`; `u8::MAX` marks
/// vertices outside.
fn coloring(g: &Graph, active: &[bool], removed: &[Vertex]) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut inside = active.to_vec();
    removed.iter().for_each(|&v| inside[v] = false);
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if !inside[root] || color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !inside[w] {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Given an OCT `promise` of the active graph, finds one of size at most
/// `k` avoiding undeletable vertices: every promise vertex is either
/// deleted or pinned to one side, and the rest is a vertex cut separating
/// the vertices whose colour must stay from those whose colour must flip.
fn compress(
    g: &Graph,
    active: &[bool],
    promise: &[Vertex],
    k: usize,
    can_delete: &dyn Fn(Vertex) -> bool,
    stats: Option<&Stats>,
) -> Option<Vec<Vertex>> {
    let base = coloring(g, active, promise).expect("promise must be an odd cycle transversal");
    let mut rest_active = active.to_vec();
    promise.iter().for_each(|&v| rest_active[v] = false);
    let p = promise.len();
    // labels: 0 = deleted, 1 = side A, 2 = side B
    let mut labels = vec![0u8; p];
    let total = 3usize.pow(p as u32);
    for code in 0..total {
        if let Some(st) = stats {
            st.bump_compression_labeling();
        }
        let mut c = code;
        for slot in labels.iter_mut() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        let deleted = labels.iter().filter(|&&l| l == 0).count();
        if deleted > k {
            continue;
        }
        if (0..p).any(|i| labels[i] == 0 && !can_delete(promise[i])) {
            continue;
        }
        let conflict = (0..p).any(|i| {
            labels[i] != 0 && (i + 1..p).any(|j| labels[j] == labels[i] && g.has_edge(promise[i], promise[j]))
        });
        if conflict {
            continue;
        }
        // a neighbour of a side-A pin must take colour B and vice versa
        let mut keep = Vec::new();
        let mut flip = Vec::new();
        let mut forced = vec![0u8; g.n()];
        for i in 0..p {
            if labels[i] == 0 {
                continue;
            }
            let want = if labels[i] == 1 { 1u8 } else { 0u8 };
            for &y in g.neighbors(promise[i]) {
                if rest_active[y] {
                    forced[y] |= 1 << want;
                }
            }
        }
        for y in 0..g.n() {
            if !rest_active[y] || forced[y] == 0 {
                continue;
            }
            for want in 0..2u8 {
                if forced[y] >> want & 1 == 1 {
                    if base[y] == want {
                        keep.push(y);
                    } else {
                        flip.push(y);
                    }
                }
            }
        }
        let budget = k - deleted;
        if let Some(cut) = min_vertex_cut(g, &rest_active, &keep, &flip, can_delete, budget) {
            let mut sol: Vec<Vertex> = (0..p).filter(|&i| labels[i] == 0).map(|i| promise[i]).collect();
            sol.extend(cut.iter());
            return Some(sol);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn bipartite_needs_nothing() {
        assert_eq!(solve_oct(&Graph::cycle(6), 0), Some(VertexSet::new()));
    }

    #[test]
    fn c5_needs_one() {
        assert!(solve_oct(&Graph::cycle(5), 0).is_none());
        assert_eq!(solve_oct(&Graph::cycle(5), 1).unwrap().len(), 1);
    }

    #[test]
    fn k4_needs_two() {
        assert!(solve_oct(&Graph::complete(4), 1).is_none());
        let s = solve_oct(&Graph::complete(4), 2).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn petersen_needs_three() {
        let g = petersen();
        assert!(solve_oct(&g, 2).is_none());
        let s = solve_oct(&g, 3).unwrap();
        assert!(g.remove_vertices(&s).0.is_bipartite());
    }

    #[test]
    fn restricted_examples() {
        let c5 = Graph::cycle(5);
        for backend in [RestrictedBackend::Gadget, RestrictedBackend::Native] {
            let all = RestrictedInstance { g: c5.clone(), d: c5.vertices(), k: 1 };
            assert_eq!(solve_restricted_oct(&all, backend).unwrap().len(), 1);
            let none = RestrictedInstance { g: c5.clone(), d: VertexSet::new(), k: 5 };
            assert!(solve_restricted_oct(&none, backend).is_none());
            let only0 = RestrictedInstance { g: c5.clone(), d: VertexSet::from([0]), k: 1 };
            assert_eq!(solve_restricted_oct(&only0, backend), Some(VertexSet::from([0])));
        }
    }

    #[test]
    fn gadget_shape() {
        let (g, origin) = twin_gadget(&Graph::path(2), &VertexSet::from([0]), 2);
        // vertex 1 gains two copies, each adjacent to 0 only
        assert_eq!(g.n(), 4);
        assert_eq!(origin, vec![0, 1, 1, 1]);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(!g.has_edge(1, 2));
    }
}
