use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex, VertexSet};

/// A rooted tree decomposition. Node `i` has bag `bags[i]` and parent
/// `parent[i]`; the root has no parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub parent: Vec<Option<usize>>,
    pub root: usize,
    pub width: usize,
}

impl TreeDecomposition {
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.bags.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                out[*p].push(i);
            }
        }
        out
    }

    /// Nodes ordered so that every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let children = self.children();
        let mut order = Vec::with_capacity(self.bags.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                stack.extend(children[t].iter().rev().map(|&c| (c, false)));
            }
        }
        order
    }

    /// Checks vertex coverage, edge coverage, and that the nodes holding
    /// any one vertex form a connected subtree.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let nodes = self.bags.len();
        if nodes == 0 || self.parent.len() != nodes || self.parent[self.root].is_some() {
            return false;
        }
        if self.post_order().len() != nodes {
            return false;
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (t, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                if v >= g.n() {
                    return false;
                }
                holders[v].push(t);
            }
        }
        if holders.iter().any(|h| h.is_empty()) {
            return false;
        }
        if !g.edges().all(|(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v))) {
            return false;
        }
        // a set of nodes is connected iff exactly one of them has its parent outside
        holders
            .iter()
            .all(|h| h.iter().filter(|&&t| self.parent[t].is_none_or(|p| h.binary_search(&p).is_err())).count() == 1)
    }
}

/// Tree decomposition from a min-degree elimination ordering (ties broken
/// by smaller id).
pub fn tree_decompose(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { bags: vec![VertexSet::new()], parent: vec![None], root: 0, width: 0 };
    }
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut position = vec![0usize; n];
    let mut bags = Vec::with_capacity(n);
    let mut later: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (adj[v].len(), v)).unwrap_or(0);
        alive[v] = false;
        position[v] = step;
        let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut bag = nbrs.clone();
        bag.push(v);
        bags.push(VertexSet::from_vec(bag));
        later.push(nbrs);
    }
    let root = n - 1;
    let parent: Vec<Option<usize>> = (0..n)
        .map(|t| {
            let first = later[t].iter().map(|&u| position[u]).min();
            match first {
                Some(p) => Some(p),
                None if t == root => None,
                None => Some(root),
            }
        })
        .collect();
    let width = bags.iter().map(|b| b.len()).max().unwrap_or(1) - 1;
    TreeDecomposition { bags, parent, root, width }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        for (g, w) in [(star, 1), (Graph::cycle(5), 2), (Graph::complete(5), 4), (Graph::empty(3), 0)] {
            let td = tree_decompose(&g);
            assert!(td.is_valid(&g));
            assert_eq!(td.width, w);
        }
    }

    #[test]
    fn validity_catches_broken_decompositions() {
        let g = Graph::path(3);
        let mut td = tree_decompose(&g);
        assert!(td.is_valid(&g));
        td.bags[0] = VertexSet::new();
        assert!(!td.is_valid(&g));
        let split = TreeDecomposition {
            bags: vec![VertexSet::from([0, 1]), VertexSet::from([2]), VertexSet::from([1, 2])],
            parent: vec![None, Some(0), Some(1)],
            root: 0,
            width: 1,
        };
        assert!(!split.is_valid(&g));
    }
}
