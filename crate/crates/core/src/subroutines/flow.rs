//! Unit-capacity augmenting-path max-flow and the vertex-cut wrapper used
//! by the OCT compression step.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};

const INF: u32 = u32::MAX / 2;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired forward/backward arcs.
#[derive(Clone, Debug, Default)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Pushes flow from `s` to `t` one augmenting path at a time and stops
    /// once `limit` units are exceeded. Returns the flow value, capped at
    /// `limit + 1`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.out.len()];
        while flow <= limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    reached = true;
                    break;
                }
                for &a in &self.out[u] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && arc.to != s && pred[arc.to] == usize::MAX {
                        pred[arc.to] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut bottleneck = INF;
            let mut v = t;
            while v != s {
                let a = pred[v];
                bottleneck = bottleneck.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            if bottleneck >= INF {
                // an uncuttable path: flow is unbounded for our purposes
                return limit + 1;
            }
            let mut v = t;
            while v != s {
                let a = pred[v];
                self.arcs[a].cap -= bottleneck;
                self.arcs[a ^ 1].cap += bottleneck;
                v = self.arcs[a ^ 1].to;
            }
            flow += bottleneck as usize;
        }
        flow.min(limit + 1)
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }
}

/// Minimum vertex set `C` among `active` vertices, of size at most `limit`,
/// whose removal leaves no path from `sources` to `sinks` inside `active`.
/// Terminals may be cut themselves when `cuttable` allows it; a vertex in
/// both `sources` and `sinks` must be cut.
pub fn min_vertex_cut(
    g: &Graph,
    active: &[bool],
    sources: &[Vertex],
    sinks: &[Vertex],
    cuttable: &dyn Fn(Vertex) -> bool,
    limit: usize,
) -> Option<VertexSet> {
    let n = g.n();
    let s = 2 * n;
    let t = 2 * n + 1;
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        if !active[v] {
            continue;
        }
        net.add_arc(2 * v, 2 * v + 1, if cuttable(v) { 1 } else { INF });
        for &w in g.neighbors(v) {
            if active[w] {
                net.add_arc(2 * v + 1, 2 * w, INF);
            }
        }
    }
    for &v in sources {
        net.add_arc(s, 2 * v, INF);
    }
    for &v in sinks {
        net.add_arc(2 * v + 1, t, INF);
    }
    if net.max_flow(s, t, limit) > limit {
        return None;
    }
    let seen = net.reachable(s);
    Some(VertexSet::from_vec((0..n).filter(|&v| active[v] && seen[2 * v] && !seen[2 * v + 1]).collect()))
}
