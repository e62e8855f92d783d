//! Independent vertex cover: linear time on bipartite graphs by taking the
//! smaller colour class of every component.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};

/// An independent vertex cover of size at most `k`, or `None`.
pub fn solve_ivc(g: &Graph, k: usize) -> Option<VertexSet> {
    min_independent_vertex_cover(g, None).filter(|s| s.len() <= k)
}

/// A minimum independent vertex cover, optionally drawn from `deletable`
/// only. `None` if `g` is not bipartite or, with a restriction, some
/// component with edges has no colour class inside `deletable`.
///
/// Per component the strictly smaller side is taken; on a tie, the side
/// holding the component's smallest id.
pub fn min_independent_vertex_cover(g: &Graph, deletable: Option<&VertexSet>) -> Option<VertexSet> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    let mut cover: Vec<Vertex> = Vec::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        let mut sides: [Vec<Vertex>; 2] = [vec![root], Vec::new()];
        let mut has_edge = false;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                has_edge = true;
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    sides[color[w] as usize].push(w);
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
        if !has_edge {
            continue;
        }
        // side 0 holds the root, which is the component's smallest id
        let mut order = [0usize, 1];
        if sides[1].len() < sides[0].len() {
            order = [1, 0];
        }
        let allowed = |side: &Vec<Vertex>| deletable.is_none_or(|d| side.iter().all(|&v| d.contains(v)));
        let pick = order.into_iter().find(|&s| allowed(&sides[s]))?;
        cover.extend_from_slice(&sides[pick]);
    }
    Some(VertexSet::from_vec(cover))
}
