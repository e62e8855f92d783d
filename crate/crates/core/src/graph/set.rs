use std::fmt;

use serde::{Deserialize, Serialize};

use super::Vertex;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary ids, sorting and removing duplicates.
    pub fn from_vec(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// Wraps an already sorted and deduplicated vector.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Maps every member through `map` (e.g. local-to-global ids).
    pub fn map(&self, map: impl Fn(Vertex) -> Vertex) -> VertexSet {
        VertexSet::from_vec(self.0.iter().map(|&v| map(v)).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        VertexSet::from_vec(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        VertexSet::from_vec(v.to_vec())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Iterates subsets of `items` with at most `max_size` members, ordered by
/// size and then colexicographically. Every yielded subset is sorted when
/// `items` is.
pub fn subsets_upto(items: &[Vertex], max_size: usize) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    let max_size = max_size.min(items.len());
    (0..=max_size).flat_map(move |size| Combinations::new(items, size))
}

/// Colex-ordered `size`-subsets of a slice.
pub struct Combinations<'a> {
    items: &'a [Vertex],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub fn new(items: &'a [Vertex], size: usize) -> Self {
        Combinations { items, idx: (0..size).collect(), done: size > items.len() }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Vec<Vertex>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i]).collect();
        // colex successor: bump the lowest position that can move up
        let k = self.idx.len();
        let mut j = 0;
        loop {
            if j == k {
                self.done = true;
                break;
            }
            let limit = if j + 1 < k { self.idx[j + 1] } else { self.items.len() };
            if self.idx[j] + 1 < limit {
                self.idx[j] += 1;
                for (t, slot) in self.idx.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    }
}
