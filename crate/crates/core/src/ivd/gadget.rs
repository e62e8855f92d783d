use crate::graph::{Graph, Vertex};

/// Replaces every edge `{v, w}` by `k + 1` internally disjoint paths
/// `v - a - b - w`. Odd cycle transversals of size `<= k` in `g` correspond
/// to independent ones in the result.
pub fn hardness_gadget(g: &Graph, k: usize) -> (Graph, Vec<Option<Vertex>>) {
    hardness_gadget_with_paths(g, k + 1)
}

/// The gadget with an explicit number of paths per edge. Original vertices
/// keep their ids; the relabeling is `None` for path vertices.
pub fn hardness_gadget_with_paths(g: &Graph, paths: usize) -> (Graph, Vec<Option<Vertex>>) {
    let n = g.n();
    let total = n + 2 * paths * g.m();
    let mut adj = vec![Vec::new(); total];
    let mut next = n;
    for (v, w) in g.edges() {
        for _ in 0..paths {
            let (a, b) = (next, next + 1);
            next += 2;
            for (x, y) in [(v, a), (a, b), (b, w)] {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
    }
    let relabel = (0..total).map(|v| (v < n).then_some(v)).collect();
    (Graph::from_adjacency(adj), relabel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_size() {
        let (h, relabel) = hardness_gadget(&Graph::complete(3), 1);
        assert_eq!(h.n(), 15);
        assert_eq!(h.m(), 3 * 2 * 3);
        assert_eq!(relabel.iter().filter(|r| r.is_some()).count(), 3);
    }

    #[test]
    fn bipartite_stays_bipartite() {
        let (h, _) = hardness_gadget(&Graph::cycle(6), 0);
        assert!(h.is_bipartite());
        let (h, _) = hardness_gadget(&Graph::cycle(5), 0);
        assert!(!h.is_bipartite());
    }
}
