//! The auxiliary graph that turns "which side does each OCT vertex land
//! on" into a cut problem, and the independent OCT built on it.

use serde::{Deserialize, Serialize};

use super::mincut::independent_mincut_capped;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Vertex, VertexSet};
use crate::stats::Stats;
use crate::subroutines::{flow::min_vertex_cut, oct_compress, twin_gadget, RestrictedBackend};
use crate::vd::SolverConfig;

/// An odd cycle transversal `x` with a proper 2-colouring of `g - x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OCTWitness {
    pub x: VertexSet,
    pub sides: Bipartition,
}

impl OCTWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (a, b) = (&self.sides.side_a, &self.sides.side_b);
        a.is_disjoint(b)
            && a.union(b) == g.vertices().difference(&self.x)
            && g.is_independent(a.as_slice())
            && g.is_independent(b.as_slice())
    }
}

/// The auxiliary graph: vertices of `g - x` in ascending order, then two
/// copies `(x1, x2)` per member of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub g_prime: Graph,
    /// `copy_map[i]` holds the copies of the `i`-th member of `x`.
    pub copy_map: Vec<(Vertex, Vertex)>,
    /// Original vertex of every auxiliary vertex.
    pub origin_map: Vec<Vertex>,
    /// Number of auxiliary vertices that are not copies.
    pub base: usize,
}

/// A choice of surviving OCT vertices `y` and of which copy of each goes to
/// the source side `y_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidPartition {
    pub y: VertexSet,
    pub y_a: VertexSet,
    pub y_b: VertexSet,
}

impl ValidPartition {
    pub fn is_valid(&self, aux: &AuxiliaryGraph, x: &VertexSet) -> bool {
        self.y.is_subset(x)
            && self.y_a.is_disjoint(&self.y_b)
            && self.y_a.len() + self.y_b.len() == 2 * self.y.len()
            && x.iter().zip(&aux.copy_map).all(|(v, &(c1, c2))| {
                if self.y.contains(v) {
                    self.y_a.contains(c1) != self.y_a.contains(c2) && self.y_a.contains(c1) == self.y_b.contains(c2)
                } else {
                    ![c1, c2].iter().any(|&c| self.y_a.contains(c) || self.y_b.contains(c))
                }
            })
    }
}

/// Builds the auxiliary graph: `g - x` unchanged, `y` in side `i` joined to
/// the copy `x_{3-i}` of each neighbour `x`, and crossed copies `x1 y2`,
/// `x2 y1` for every edge inside `x`. The result is bipartite with sides
/// `(S1 + x1, S2 + x2)`.
pub fn reed_auxiliary_graph(g: &Graph, w: &OCTWitness) -> Result<AuxiliaryGraph> {
    if !w.is_valid(g) {
        return Err(Error::Contract("OCT witness does not match the graph".into()));
    }
    let rest = g.vertices().difference(&w.x);
    let base = rest.len();
    let mut id = vec![usize::MAX; g.n()];
    let mut origin_map: Vec<Vertex> = rest.iter().collect();
    for (i, v) in rest.iter().enumerate() {
        id[v] = i;
    }
    let mut copy_map = Vec::with_capacity(w.x.len());
    let mut copy_of = vec![(usize::MAX, usize::MAX); g.n()];
    for x in w.x.iter() {
        let pair = (origin_map.len(), origin_map.len() + 1);
        origin_map.extend([x, x]);
        copy_map.push(pair);
        copy_of[x] = pair;
    }
    let mut adj = vec![Vec::new(); origin_map.len()];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (u, v) in g.edges() {
        match (w.x.contains(u), w.x.contains(v)) {
            (false, false) => link(id[u], id[v]),
            (true, true) => {
                let (u1, u2) = copy_of[u];
                let (v1, v2) = copy_of[v];
                link(u1, v2);
                link(u2, v1);
            }
            (xu, _) => {
                let (x, y) = if xu { (u, v) } else { (v, u) };
                let (x1, x2) = copy_of[x];
                link(id[y], if w.sides.side_a.contains(y) { x2 } else { x1 });
            }
        }
    }
    let aux = AuxiliaryGraph { g_prime: Graph::from_adjacency(adj), copy_map, origin_map, base };
    if !aux.g_prime.is_bipartite() {
        return Err(Error::Contract("auxiliary graph is not bipartite".into()));
    }
    Ok(aux)
}

/// An independent odd cycle transversal of size at most `k`.
pub fn independent_oct(g: &Graph, k: usize) -> Option<VertexSet> {
    independent_oct_with(g, k, None, &SolverConfig::default(), &Stats::default()).ok().flatten()
}

/// An independent odd cycle transversal of size at most `k` inside `d`,
/// through the twin-copy reduction.
pub fn restricted_independent_oct(g: &Graph, d: &VertexSet, k: usize) -> Option<VertexSet> {
    let cfg = SolverConfig { restricted_backend: RestrictedBackend::Gadget, ..Default::default() };
    restricted_independent_oct_with(g, d, k, &cfg, &Stats::default()).ok().flatten()
}

pub(crate) fn restricted_independent_oct_with(
    g: &Graph,
    d: &VertexSet,
    k: usize,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<VertexSet>> {
    match cfg.restricted_backend {
        RestrictedBackend::Native => independent_oct_with(g, k, Some(d), cfg, stats),
        RestrictedBackend::Gadget => {
            let (h, _) = twin_gadget(g, d, k);
            let Some(z) = independent_oct_with(&h, k, None, cfg, stats)? else {
                return Ok(None);
            };
            // twins of undeletable vertices survive, so projecting keeps both properties
            let z: VertexSet = z.iter().filter(|&v| v < g.n() && d.contains(v)).collect();
            let ok = g.remove_vertices(&z).0.is_bipartite() && g.is_independent(z.as_slice());
            if !ok {
                return Err(Error::Contract("copy gadget projection failed".into()));
            }
            Ok(Some(z))
        }
    }
}

/// Core search: fix an OCT `X`, then for every labeling of `X` as deleted,
/// side A or side B, look for an independent cut in the auxiliary graph
/// between the copies that must end up on opposite sides.
pub(crate) fn independent_oct_with(
    g: &Graph,
    k: usize,
    deletable: Option<&VertexSet>,
    cfg: &SolverConfig,
    stats: &Stats,
) -> Result<Option<VertexSet>> {
    let can_delete = |v: Vertex| deletable.is_none_or(|d| d.contains(v));
    stats.bump_oct();
    let Some(x) = oct_compress(g, k, None, Some(stats)) else {
        return Ok(None);
    };
    if x.is_empty() {
        return Ok(Some(x));
    }
    let sides = g
        .two_coloring_of(g.vertices().difference(&x).as_slice())
        .ok_or_else(|| Error::Contract("OCT left an odd cycle".into()))?;
    let w = OCTWitness { x: x.clone(), sides };
    let aux = reed_auxiliary_graph(g, &w)?;
    let xs = x.as_slice();
    let p = xs.len();
    let mut labels = vec![0u8; p];
    for code in 0..3usize.pow(p as u32) {
        let mut c = code;
        for slot in labels.iter_mut() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        let deleted: Vec<Vertex> = (0..p).filter(|&i| labels[i] == 0).map(|i| xs[i]).collect();
        if deleted.len() > k || !deleted.iter().all(|&v| can_delete(v)) || !g.is_independent(&deleted) {
            continue;
        }
        let mut part = ValidPartition { y: VertexSet::new(), y_a: VertexSet::new(), y_b: VertexSet::new() };
        for i in 0..p {
            let (c1, c2) = aux.copy_map[i];
            match labels[i] {
                1 => {
                    part.y_a.insert(c1);
                    part.y_b.insert(c2);
                }
                2 => {
                    part.y_a.insert(c2);
                    part.y_b.insert(c1);
                }
                _ => continue,
            }
            part.y.insert(xs[i]);
        }
        debug_assert!(part.is_valid(&aux, &x));
        // drop the copies of deleted vertices
        let keep: VertexSet = (0..aux.base).chain(part.y_a.iter()).chain(part.y_b.iter()).collect();
        let (h, map) = aux.g_prime.induced_subgraph(&keep);
        let mut local = vec![usize::MAX; aux.origin_map.len()];
        map.iter().enumerate().for_each(|(i, &v)| local[v] = i);
        let near_deleted = |v: Vertex| g.neighbors(v).iter().any(|u| deleted.contains(u));
        let allowed: VertexSet = (0..aux.base)
            .filter(|&a| {
                let v = aux.origin_map[a];
                can_delete(v) && !near_deleted(v)
            })
            .map(|a| local[a])
            .collect();
        let sources = part.y_a.map(|v| local[v]);
        let sinks = part.y_b.map(|v| local[v]);
        let budget = k - deleted.len();
        // a plain vertex cut is a lower bound on the independent one
        let active = vec![true; h.n()];
        let plain = min_vertex_cut(&h, &active, sources.as_slice(), sinks.as_slice(), &|v| allowed.contains(v), budget);
        if plain.is_none() {
            continue;
        }
        stats.bump_mincut();
        let cut = independent_mincut_capped(
            &h,
            &sources,
            &sinks,
            &allowed,
            &VertexSet::new(),
            budget,
            cfg.mincut_backend,
            cfg.width_cap,
        )?;
        if let Some(cut) = cut {
            let z = VertexSet::from_vec(deleted.clone()).union(&cut.map(|v| aux.origin_map[map[v]]));
            if !g.is_independent(z.as_slice()) || !g.remove_vertices(&z).0.is_bipartite() {
                return Err(Error::Contract("independent cut does not give an independent OCT".into()));
            }
            return Ok(Some(z));
        }
    }
    Ok(None)
}
