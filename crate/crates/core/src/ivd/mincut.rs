//! Independent vertex cuts between two terminal sets: exhaustive search and
//! a dynamic program over a tree decomposition.

use std::collections::{HashMap, VecDeque};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::treedec::tree_decompose;
use crate::error::{Error, Result};
use crate::graph::{subsets_upto, Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MincutBackend {
    #[default]
    Brute,
    Twdp,
}

impl FromStr for MincutBackend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(MincutBackend::Brute),
            "twdp" => Ok(MincutBackend::Twdp),
            other => Err(format!("unknown backend `{other}` (expected brute or twdp)")),
        }
    }
}

pub const DEFAULT_WIDTH_CAP: usize = 25;

/// One labeling of a bag in the DP: source side, sink side, cut, and the
/// number of cut vertices in the subtree below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MincutDPState {
    pub s_side: VertexSet,
    pub t_side: VertexSet,
    pub cut: VertexSet,
    pub used_budget: usize,
}

impl MincutDPState {
    /// The local constraints every stored state satisfies.
    pub fn is_consistent(&self, g: &Graph, k: usize) -> bool {
        let crosses = self.s_side.iter().any(|u| self.t_side.iter().any(|v| g.has_edge(u, v)));
        self.s_side.is_disjoint(&self.t_side)
            && self.s_side.is_disjoint(&self.cut)
            && self.t_side.is_disjoint(&self.cut)
            && !crosses
            && g.is_independent(self.cut.as_slice())
            && self.used_budget <= k
    }
}

/// A minimum independent set `C ⊆ allowed`, `|C| <= k`, with no member
/// adjacent to `forbidden_adjacency`, separating `sources` from `sinks`.
pub fn independent_mincut(
    g: &Graph,
    sources: &VertexSet,
    sinks: &VertexSet,
    allowed: &VertexSet,
    forbidden_adjacency: &VertexSet,
    k: usize,
    backend: MincutBackend,
) -> Result<Option<VertexSet>> {
    independent_mincut_capped(g, sources, sinks, allowed, forbidden_adjacency, k, backend, DEFAULT_WIDTH_CAP)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn independent_mincut_capped(
    g: &Graph,
    sources: &VertexSet,
    sinks: &VertexSet,
    allowed: &VertexSet,
    forbidden_adjacency: &VertexSet,
    k: usize,
    backend: MincutBackend,
    width_cap: usize,
) -> Result<Option<VertexSet>> {
    if !sources.is_disjoint(sinks) {
        return Err(Error::Contract("sources and sinks overlap".into()));
    }
    if !allowed.is_disjoint(sources) || !allowed.is_disjoint(sinks) {
        return Err(Error::Contract("terminals may not be cut".into()));
    }
    if [sources, sinks, allowed, forbidden_adjacency].iter().any(|s| s.last().is_some_and(|v| v >= g.n())) {
        return Err(Error::Contract("vertex out of range".into()));
    }
    let candidates: VertexSet =
        allowed.iter().filter(|&v| !g.neighbors(v).iter().any(|&u| forbidden_adjacency.contains(u))).collect();
    match backend {
        MincutBackend::Brute => Ok(brute(g, sources, sinks, &candidates, k)),
        MincutBackend::Twdp => twdp(g, sources, sinks, &candidates, k, width_cap),
    }
}

fn separates(g: &Graph, sources: &VertexSet, sinks: &VertexSet, cut: &VertexSet) -> bool {
    let mut seen = vec![false; g.n()];
    let mut queue: VecDeque<Vertex> = sources.iter().collect();
    sources.iter().for_each(|v| seen[v] = true);
    while let Some(u) = queue.pop_front() {
        if sinks.contains(u) {
            return false;
        }
        for &w in g.neighbors(u) {
            if !seen[w] && !cut.contains(w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    true
}

fn brute(g: &Graph, sources: &VertexSet, sinks: &VertexSet, candidates: &VertexSet, k: usize) -> Option<VertexSet> {
    subsets_upto(candidates.as_slice(), k)
        .filter(|c| g.is_independent(c))
        .map(VertexSet::from_sorted)
        .find(|c| separates(g, sources, sinks, c))
}

/// Labels: bit set in `s` = source side, in `t` = sink side, neither = cut.
type Key = (u32, u32);

fn twdp(
    g: &Graph,
    sources: &VertexSet,
    sinks: &VertexSet,
    candidates: &VertexSet,
    k: usize,
    width_cap: usize,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    let (ss, tt) = (n, n + 1);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.extend(sources.iter().map(|v| (ss, v)));
    edges.extend(sinks.iter().map(|v| (tt, v)));
    let h = Graph::new(n + 2, edges)?;
    let td = tree_decompose(&h);
    debug_assert!(td.is_valid(&h));
    if td.width > width_cap {
        return Err(Error::WidthExceeded { width: td.width, cap: width_cap });
    }
    let children = td.children();
    let nodes = td.bags.len();
    let mut tables: Vec<HashMap<Key, u32>> = vec![HashMap::new(); nodes];
    // for each child, the best child labeling per labeling of the shared vertices
    let mut best_child: Vec<HashMap<Key, (u32, Key)>> = vec![HashMap::new(); nodes];
    let mut shared_mask = vec![0u32; nodes];

    for t in td.post_order() {
        let bag = td.bags[t].as_slice();
        let size = bag.len();
        let full: u32 = if size == 32 { u32::MAX } else { (1u32 << size) - 1 };
        let mut adj_mask = vec![0u32; size];
        for i in 0..size {
            for j in 0..size {
                if i != j && h.has_edge(bag[i], bag[j]) {
                    adj_mask[i] |= 1 << j;
                }
            }
        }
        let cuttable: u32 = (0..size).filter(|&i| candidates.contains(bag[i])).fold(0, |m, i| m | 1 << i);
        let forced_s: u32 = (0..size).filter(|&i| bag[i] == ss).fold(0, |m, i| m | 1 << i);
        let forced_t: u32 = (0..size).filter(|&i| bag[i] == tt).fold(0, |m, i| m | 1 << i);

        for &c in &children[t] {
            let cbag = td.bags[c].as_slice();
            // child position -> parent position for shared vertices
            let to_parent: Vec<Option<usize>> = cbag.iter().map(|v| bag.binary_search(v).ok()).collect();
            let mut c_shared = 0u32;
            let mut p_shared = 0u32;
            for (i, p) in to_parent.iter().enumerate() {
                if let Some(p) = p {
                    c_shared |= 1 << i;
                    p_shared |= 1 << p;
                }
            }
            let lift = |mask: u32| {
                to_parent
                    .iter()
                    .enumerate()
                    .filter(|(i, p)| p.is_some() && mask >> i & 1 == 1)
                    .fold(0u32, |m, (_, p)| m | 1 << p.unwrap_or(0))
            };
            let cfull: u32 = (1u32 << cbag.len()) - 1;
            let mut proj: HashMap<Key, (u32, Key)> = HashMap::new();
            for (&(s, tmask), &cost) in &tables[c] {
                let cut = cfull & !s & !tmask;
                let rest = cost - (cut & c_shared).count_ones();
                let key = (lift(s), lift(tmask));
                let cand = (rest, (s, tmask));
                proj.entry(key).and_modify(|e| *e = (*e).min(cand)).or_insert(cand);
            }
            best_child[c] = proj;
            shared_mask[c] = p_shared;
        }

        let mut table: HashMap<Key, u32> = HashMap::new();
        let mut stack: Vec<(usize, u32, u32)> = vec![(0, 0, 0)];
        while let Some((i, s, tmask)) = stack.pop() {
            if i == size {
                let cut = full & !s & !tmask;
                let mut cost = cut.count_ones();
                let mut ok = cost as usize <= k;
                for &c in &children[t] {
                    if !ok {
                        break;
                    }
                    let m = shared_mask[c];
                    match best_child[c].get(&(s & m, tmask & m)) {
                        Some(&(rest, _)) => cost += rest,
                        None => ok = false,
                    }
                    ok &= cost as usize <= k;
                }
                if ok {
                    table.insert((s, tmask), cost);
                }
                continue;
            }
            let bit = 1u32 << i;
            let below = bit - 1;
            let cut_so_far = below & !s & !tmask;
            // source side
            if forced_t & bit == 0 && adj_mask[i] & tmask == 0 {
                stack.push((i + 1, s | bit, tmask));
            }
            // sink side
            if forced_s & bit == 0 && adj_mask[i] & s == 0 {
                stack.push((i + 1, s, tmask | bit));
            }
            // cut
            if cuttable & bit != 0 && adj_mask[i] & cut_so_far == 0 {
                stack.push((i + 1, s, tmask));
            }
        }
        if cfg!(debug_assertions) {
            for (&(s, tmask), &cost) in &table {
                let pick = |m: u32| (0..size).filter(|&i| m >> i & 1 == 1).map(|i| bag[i]).collect();
                let state = MincutDPState {
                    s_side: pick(s),
                    t_side: pick(tmask),
                    cut: pick(full & !s & !tmask),
                    used_budget: cost as usize,
                };
                debug_assert!(state.is_consistent(&h, k));
            }
        }
        tables[t] = table;
    }

    let Some((&root_key, _)) = tables[td.root].iter().min_by_key(|(&key, &cost)| (cost, key)) else {
        return Ok(None);
    };
    let mut cut = Vec::new();
    let mut stack = vec![(td.root, root_key)];
    while let Some((t, (s, tmask))) = stack.pop() {
        let bag = td.bags[t].as_slice();
        let full: u32 = (1u32 << bag.len()) - 1;
        let cmask = full & !s & !tmask;
        cut.extend((0..bag.len()).filter(|&i| cmask >> i & 1 == 1).map(|i| bag[i]));
        for &c in &children[t] {
            let m = shared_mask[c];
            let (_, child_key) = best_child[c][&(s & m, tmask & m)];
            stack.push((c, child_key));
        }
    }
    let cut = VertexSet::from_vec(cut);
    debug_assert!(separates(g, sources, sinks, &cut));
    Ok(Some(cut))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(g: &Graph, s: &[Vertex], t: &[Vertex], k: usize, backend: MincutBackend) -> Option<VertexSet> {
        let src = VertexSet::from_vec(s.to_vec());
        let snk = VertexSet::from_vec(t.to_vec());
        let allowed = g.vertices().difference(&src).difference(&snk);
        independent_mincut(g, &src, &snk, &allowed, &VertexSet::new(), k, backend).unwrap()
    }

    #[test]
    fn path_examples() {
        for b in [MincutBackend::Brute, MincutBackend::Twdp] {
            assert_eq!(run(&Graph::path(3), &[0], &[2], 1, b), Some(VertexSet::from([1])));
            assert_eq!(run(&Graph::path(2), &[0], &[1], 5, b), None);
        }
    }

    #[test]
    fn two_paths_with_a_chord() {
        // s=0, t=5, paths 0-1-2-5 and 0-3-4-5, chord 1-3
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        for b in [MincutBackend::Brute, MincutBackend::Twdp] {
            assert_eq!(run(&g, &[0], &[5], 1, b), None);
            let c = run(&g, &[0], &[5], 2, b).unwrap();
            assert_eq!(c.len(), 2);
            assert!(g.is_independent(c.as_slice()));
        }
    }

    #[test]
    fn forbidden_adjacency_excludes_neighbours() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let src = VertexSet::from([0]);
        let snk = VertexSet::from([2]);
        let allowed = VertexSet::from([1, 3]);
        for b in [MincutBackend::Brute, MincutBackend::Twdp] {
            let got = independent_mincut(&g, &src, &snk, &allowed, &VertexSet::from([3]), 3, b).unwrap();
            assert_eq!(got, None);
        }
    }

    #[test]
    fn preconditions_and_width_cap() {
        let g = Graph::complete(6);
        let src = VertexSet::from([0]);
        let bad = independent_mincut(&g, &src, &src, &VertexSet::new(), &VertexSet::new(), 1, MincutBackend::Brute);
        assert!(matches!(bad, Err(Error::Contract(_))));
        let snk = VertexSet::from([1]);
        let allowed = VertexSet::from([2, 3, 4, 5]);
        let capped = independent_mincut_capped(&g, &src, &snk, &allowed, &VertexSet::new(), 1, MincutBackend::Twdp, 3);
        assert!(matches!(capped, Err(Error::WidthExceeded { cap: 3, .. })));
    }
}
