//! `(r, l)`-partitions: representation, verification, perturbation of a
//! coarse split and enumeration of every coarse split from a single one.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{subsets_upto, Graph, Vertex, VertexSet};
use crate::vd::{solve_vd, ProblemSpec, SolverConfig};

/// A partition of a vertex set into `r` independent sets and `l` cliques.
/// Empty classes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RLPartition {
    pub independent_sets: Vec<VertexSet>,
    pub cliques: Vec<VertexSet>,
}

/// A perturbation of a coarse split `(R, L)`: `l_sel` moves from `R` to
/// `L`, `r_sel` moves from `L` to `R`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Perturbation {
    pub l_sel: VertexSet,
    pub r_sel: VertexSet,
}

fn sort_classes(classes: &mut [VertexSet]) {
    classes.sort_by_key(|c| c.first().map_or((1, 0), |v| (0, v)));
}

impl RLPartition {
    /// Builds a partition in canonical form.
    pub fn new(independent_sets: Vec<VertexSet>, cliques: Vec<VertexSet>) -> RLPartition {
        let mut p = RLPartition { independent_sets, cliques };
        p.canonicalize();
        p
    }

    /// The partition of the empty vertex set with `r + l` empty classes.
    pub fn empty(r: usize, l: usize) -> RLPartition {
        RLPartition::new(vec![VertexSet::new(); r], vec![VertexSet::new(); l])
    }

    pub fn r(&self) -> usize {
        self.independent_sets.len()
    }

    pub fn l(&self) -> usize {
        self.cliques.len()
    }

    pub fn canonicalize(&mut self) {
        sort_classes(&mut self.independent_sets);
        sort_classes(&mut self.cliques);
    }

    /// The coarse split `(R, L)`: union of independent sets, union of cliques.
    pub fn coarse(&self) -> (VertexSet, VertexSet) {
        let union = |cs: &[VertexSet]| VertexSet::from_vec(cs.iter().flat_map(|c| c.iter()).collect::<Vec<_>>());
        (union(&self.independent_sets), union(&self.cliques))
    }

    pub fn vertices(&self) -> VertexSet {
        let (r, l) = self.coarse();
        r.union(&l)
    }

    /// Renames every vertex through `f`.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> RLPartition {
        RLPartition::new(
            self.independent_sets.iter().map(|c| c.map(&f)).collect(),
            self.cliques.iter().map(|c| c.map(&f)).collect(),
        )
    }

    /// Keeps only the members of `keep` in every class.
    pub fn restrict(&self, keep: &VertexSet) -> RLPartition {
        RLPartition::new(
            self.independent_sets.iter().map(|c| c.intersection(keep)).collect(),
            self.cliques.iter().map(|c| c.intersection(keep)).collect(),
        )
    }

    /// Independent sets of `G` are cliques of its complement and vice versa.
    pub fn swap_roles(&self) -> RLPartition {
        RLPartition::new(self.cliques.clone(), self.independent_sets.clone())
    }

    /// Drops empty classes until at most `r` independent sets and `l`
    /// cliques remain, padding with empty classes if there are fewer.
    /// Returns `None` when a non-empty class would have to go.
    pub fn shrink_to(&self, r: usize, l: usize) -> Option<RLPartition> {
        fn fit(classes: &[VertexSet], want: usize) -> Option<Vec<VertexSet>> {
            let mut kept: Vec<VertexSet> = classes.iter().filter(|c| !c.is_empty()).cloned().collect();
            if kept.len() > want {
                return None;
            }
            kept.resize(want, VertexSet::new());
            Some(kept)
        }
        Some(RLPartition::new(fit(&self.independent_sets, r)?, fit(&self.cliques, l)?))
    }

    /// Splits a coarse `(R, L)` into `r` independent sets and `l` cliques,
    /// exactly for `r, l <= 2`.
    pub fn from_coarse(
        g: &Graph,
        big_r: &VertexSet,
        big_l: &VertexSet,
        r: usize,
        l: usize,
    ) -> Result<Option<RLPartition>> {
        let Some(indep) = split_independent(g, big_r, r)? else {
            return Ok(None);
        };
        let Some(cliques) = split_cliques(g, big_l, l)? else {
            return Ok(None);
        };
        Ok(Some(RLPartition::new(indep, cliques)))
    }
}

/// Splits `set` into `r <= 2` independent sets of `g`.
pub fn split_independent(g: &Graph, set: &VertexSet, r: usize) -> Result<Option<Vec<VertexSet>>> {
    Ok(match r {
        0 => set.is_empty().then(Vec::new),
        1 => g.is_independent(set.as_slice()).then(|| vec![set.clone()]),
        2 => g.two_coloring_of(set.as_slice()).map(|b| vec![b.side_a, b.side_b]),
        _ => return Err(Error::Unsupported { r, l: 0 }),
    })
}

/// Splits `set` into `l <= 2` cliques of `g`.
pub fn split_cliques(g: &Graph, set: &VertexSet, l: usize) -> Result<Option<Vec<VertexSet>>> {
    Ok(match l {
        0 => set.is_empty().then(Vec::new),
        1 => g.is_clique(set.as_slice()).then(|| vec![set.clone()]),
        2 => g.clique_cover_of(set.as_slice()).map(|b| vec![b.side_a, b.side_b]),
        _ => return Err(Error::Unsupported { r: 0, l }),
    })
}

/// Whether `set` induces an `(r, 0)`-graph, for `r <= 2`.
pub(crate) fn is_r0(g: &Graph, set: &[Vertex], r: usize) -> bool {
    match r {
        0 => set.is_empty(),
        1 => g.is_independent(set),
        _ => {
            debug_assert_eq!(r, 2);
            g.two_coloring_of(set).is_some()
        }
    }
}

/// Whether `set` induces a `(0, l)`-graph, for `l <= 2`.
pub(crate) fn is_0l(g: &Graph, set: &[Vertex], l: usize) -> bool {
    match l {
        0 => set.is_empty(),
        1 => g.is_clique(set),
        _ => {
            debug_assert_eq!(l, 2);
            g.clique_cover_of(set).is_some()
        }
    }
}

/// True iff `p` partitions exactly `vertices` into independent sets and
/// cliques of `g`.
pub fn verify_partition_on(g: &Graph, vertices: &VertexSet, p: &RLPartition) -> bool {
    let mut seen = vec![false; g.n()];
    let classes = p.independent_sets.iter().chain(p.cliques.iter());
    let mut total = 0;
    for class in classes {
        for v in class.iter() {
            if v >= g.n() || seen[v] || !vertices.contains(v) {
                return false;
            }
            seen[v] = true;
            total += 1;
        }
    }
    total == vertices.len()
        && p.independent_sets.iter().all(|c| g.is_independent(c.as_slice()))
        && p.cliques.iter().all(|c| g.is_clique(c.as_slice()))
}

/// True iff `p` is an `(r, l)`-partition of all of `g`.
pub fn verify_partition(g: &Graph, p: &RLPartition) -> bool {
    verify_partition_on(g, &g.vertices(), p)
}

fn check_params(r: usize, l: usize) -> Result<()> {
    if r.max(l) >= 3 {
        Err(Error::Unsupported { r, l })
    } else {
        Ok(())
    }
}

/// Applies a perturbation to the coarse split of `base` and re-splits both
/// sides; `None` if either side no longer admits its split.
pub fn apply_perturbation(g: &Graph, base: &RLPartition, pert: &Perturbation) -> Result<Option<RLPartition>> {
    let (r, l) = (base.r(), base.l());
    check_params(r, l)?;
    let (big_r, big_l) = base.coarse();
    if !pert.l_sel.is_subset(&big_r) || !pert.r_sel.is_subset(&big_l) {
        return Err(Error::Contract("perturbation must take l_sel from R and r_sel from L".into()));
    }
    if pert.l_sel.len() > r * l || pert.r_sel.len() > r * l {
        return Err(Error::Contract(format!("perturbation sides must have at most r*l = {} vertices", r * l)));
    }
    if pert.l_sel.is_empty() && pert.r_sel.is_empty() {
        let mut copy = base.clone();
        copy.canonicalize();
        return Ok(Some(copy));
    }
    let r1 = big_r.difference(&pert.l_sel).union(&pert.r_sel);
    let l1 = big_l.difference(&pert.r_sel).union(&pert.l_sel);
    RLPartition::from_coarse(g, &r1, &l1, r, l)
}

/// Every distinct coarse split of `g`, one canonical fine split each,
/// generated from `base` by perturbations of size at most `r * l`.
///
/// Only perturbations whose moved vertices can coexist on their new side
/// are tried: `G[l_sel]` must be a `(0, l)`-graph and `G[r_sel]` an
/// `(r, 0)`-graph, since they end up inside one.
pub fn enumerate_partitions(g: &Graph, base: &RLPartition) -> Result<Vec<RLPartition>> {
    let (r, l) = (base.r(), base.l());
    check_params(r, l)?;
    if !verify_partition(g, base) {
        return Err(Error::Contract("base is not a valid partition of the graph".into()));
    }
    let (big_r, big_l) = base.coarse();
    let bound = r * l;
    let l_sels: Vec<Vec<Vertex>> = subsets_upto(big_r.as_slice(), bound).filter(|s| is_0l(g, s, l)).collect();
    let r_sels: Vec<Vec<Vertex>> = subsets_upto(big_l.as_slice(), bound).filter(|s| is_r0(g, s, r)).collect();

    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut out = Vec::new();
    for l_sel in &l_sels {
        let kept_r = big_r.difference(&VertexSet::from_sorted(l_sel.clone()));
        for r_sel in &r_sels {
            let pert = Perturbation {
                l_sel: VertexSet::from_sorted(l_sel.clone()),
                r_sel: VertexSet::from_sorted(r_sel.clone()),
            };
            let r1 = kept_r.union(&pert.r_sel);
            if seen.contains(&r1) {
                continue;
            }
            if let Some(p) = apply_perturbation(g, base, &pert)? {
                seen.insert(r1);
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// An `(r, l)`-partition of `g` if one exists, for `max(r, l) <= 2`.
pub fn recognize(g: &Graph, r: usize, l: usize) -> Result<Option<RLPartition>> {
    check_params(r, l)?;
    let sol = solve_vd(g, &ProblemSpec::new(r, l, 0), &SolverConfig::default())?;
    Ok(sol.witness)
}
