//! Simple undirected graphs over dense vertex ids `0..n`, plus the
//! structural primitives every solver builds on: complements, induced
//! subgraphs, 2-colorings and set classification.

mod io;
mod set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_graph, write_dimacs, write_edgelist, Format};
pub use set::{subsets_upto, Combinations, VertexSet};

pub type Vertex = usize;

/// Above this many vertices no bitset adjacency rows are kept.
const BITSET_LIMIT: usize = 4096;

/// Immutable simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Vertex>>,
    words: usize,
    bits: Vec<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Two disjoint vertex sets covering some vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// How a vertex set sits inside a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Independent,
    Clique,
    Neither,
    /// At most one vertex: trivially both.
    Both,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {{{u},{v}}} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Builds from raw (possibly unsorted, possibly duplicated) adjacency
    /// lists that are already symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Graph {
        let n = adj.len();
        let mut twice_m = 0;
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            twice_m += row.len();
        }
        let (words, bits) = if n <= BITSET_LIMIT {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; words * n];
            for (u, row) in adj.iter().enumerate() {
                for &v in row {
                    bits[u * words + v / 64] |= 1 << (v % 64);
                }
            }
            (words, bits)
        } else {
            (0, Vec::new())
        };
        Graph { n, m: twice_m / 2, adj, words, bits }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_adjacency((0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect())
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if self.words > 0 {
            self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n).map(|u| (0..self.n).filter(|&v| v != u && !self.has_edge(u, v)).collect()).collect();
        Graph::from_adjacency(adj)
    }

    /// The subgraph induced by `keep`, relabelled to `0..|keep|`. The
    /// returned map sends each new id to its original id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = keep.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (local[w] != usize::MAX).then_some(local[w])).collect())
            .collect();
        (Graph::from_adjacency(adj), map)
    }

    /// `G - S`, keeping original ids in the returned map.
    pub fn remove_vertices(&self, s: &VertexSet) -> (Graph, Vec<Vertex>) {
        self.induced_subgraph(&self.vertices().difference(s))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row.iter().map(|&v| v + shift).collect()));
        Graph::from_adjacency(adj)
    }

    /// Proper 2-coloring, or `None` when an odd cycle exists. The lowest id
    /// of every component is placed on side A.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side_a = (0..self.n).filter(|&v| color[v] == 0).collect::<Vec<_>>();
        let side_b = (0..self.n).filter(|&v| color[v] == 1).collect::<Vec<_>>();
        Some(Bipartition { side_a: VertexSet::from_sorted(side_a), side_b: VertexSet::from_sorted(side_b) })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn classify_set(&self, s: &VertexSet) -> SetKind {
        if s.len() <= 1 {
            return SetKind::Both;
        }
        let members = s.as_slice();
        let mut internal = 0usize;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if self.has_edge(u, v) {
                    internal += 1;
                }
            }
        }
        let full = members.len() * (members.len() - 1) / 2;
        if internal == 0 {
            SetKind::Independent
        } else if internal == full {
            SetKind::Clique
        } else {
            SetKind::Neither
        }
    }

    pub fn is_independent(&self, s: &[Vertex]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Maximal connected pieces, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from_vec(comp));
        }
        out
    }

    /// 2-coloring of `G[subset]` without materializing the subgraph.
    /// Same tie-breaking as [`Graph::two_coloring`].
    pub fn two_coloring_of(&self, subset: &[Vertex]) -> Option<Bipartition> {
        self.color_subset(subset, false)
    }

    /// 2-coloring of the complement of `G[subset]`, i.e. a cover of the
    /// subset by two cliques of `G`.
    pub fn clique_cover_of(&self, subset: &[Vertex]) -> Option<Bipartition> {
        self.color_subset(subset, true)
    }

    fn color_subset(&self, subset: &[Vertex], complemented: bool) -> Option<Bipartition> {
        let k = subset.len();
        let mut color = vec![u8::MAX; k];
        let mut queue = VecDeque::new();
        let adjacent = |i: usize, j: usize| self.has_edge(subset[i], subset[j]) != complemented;
        for root in 0..k {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(i) = queue.pop_front() {
                for j in 0..k {
                    if j == i || !adjacent(i, j) {
                        continue;
                    }
                    if color[j] == u8::MAX {
                        color[j] = 1 - color[i];
                        queue.push_back(j);
                    } else if color[j] == color[i] {
                        return None;
                    }
                }
            }
        }
        let side = |c: u8| VertexSet::from_vec((0..k).filter(|&i| color[i] == c).map(|i| subset[i]).collect());
        Some(Bipartition { side_a: side(0), side_b: side(1) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_empty_is_complete() {
        assert_eq!(Graph::empty(4).complement(), Graph::complete(4));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        // the complement of 0-1-2-3-4-0 is the pentagram 0-2-4-1-3-0
        let pentagram = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(comp, pentagram);
        assert_eq!(comp.m(), 5);
        assert!(comp.neighbors(0).len() == 2);
    }

    #[test]
    fn induced_subgraphs() {
        let (k2, map) = Graph::complete(4).induced_subgraph(&VertexSet::from([0, 1]));
        assert_eq!(k2, Graph::complete(2));
        assert_eq!(map, vec![0, 1]);
        let (e, _) = Graph::cycle(5).induced_subgraph(&VertexSet::new());
        assert_eq!(e.n(), 0);
        let (p3, _) = Graph::cycle(5).induced_subgraph(&VertexSet::from([0, 1, 2]));
        assert_eq!(p3, Graph::path(3));
    }

    #[test]
    fn two_colorings() {
        let c4 = Graph::cycle(4).two_coloring().unwrap();
        assert_eq!(c4.side_a, VertexSet::from([0, 2]));
        assert_eq!(c4.side_b, VertexSet::from([1, 3]));
        assert!(Graph::cycle(5).two_coloring().is_none());
        let single = Graph::empty(1).two_coloring().unwrap();
        assert_eq!(single.side_a, VertexSet::from([0]));
        assert!(single.side_b.is_empty());
    }

    #[test]
    fn classify() {
        let p3 = Graph::path(3);
        assert_eq!(p3.classify_set(&VertexSet::new()), SetKind::Both);
        assert_eq!(Graph::complete(2).classify_set(&VertexSet::from([0, 1])), SetKind::Clique);
        assert_eq!(p3.classify_set(&VertexSet::from([0, 1, 2])), SetKind::Neither);
        assert_eq!(p3.classify_set(&VertexSet::from([0, 2])), SetKind::Independent);
    }

    #[test]
    fn components() {
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let comps = two_triangles.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
        assert_eq!(Graph::path(4).connected_components().len(), 1);
    }

    #[test]
    fn subset_colorings_match_materialized() {
        let g = Graph::cycle(6);
        let sub = [0, 1, 2, 3];
        let direct = g.two_coloring_of(&sub).unwrap();
        assert_eq!(direct.side_a, VertexSet::from([0, 2]));
        // complement of P4 is P4, so two cliques cover it
        assert!(g.clique_cover_of(&sub).is_some());
        assert!(Graph::empty(3).clique_cover_of(&[0, 1, 2]).is_none());
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn large_graphs_skip_bitsets() {
        let g = Graph::path(BITSET_LIMIT + 10);
        assert!(g.has_edge(BITSET_LIMIT + 3, BITSET_LIMIT + 4));
        assert!(!g.has_edge(0, 2));
    }
}
