use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

/// Work counters shared by the solvers. Atomic so that parallel guess loops
/// can bump them through a shared reference.
#[derive(Debug, Default)]
pub struct Stats {
    disjoint_calls: AtomicU64,
    perturbations: AtomicU64,
    max_perturbations_per_call: AtomicU64,
    oct_calls: AtomicU64,
    compression_labelings: AtomicU64,
    mincut_calls: AtomicU64,
}

/// Plain snapshot of [`Stats`], as stored in solution records.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsSnapshot {
    pub disjoint_calls: u64,
    pub perturbations: u64,
    pub max_perturbations_per_call: u64,
    pub oct_calls: u64,
    pub compression_labelings: u64,
    pub mincut_calls: u64,
    /// Wall time, only filled in when timing is requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_millis: Option<u64>,
}

impl Stats {
    pub fn bump_disjoint(&self) {
        self.disjoint_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn add_perturbations(&self, n: u64) {
        self.perturbations.fetch_add(n, Ordering::Relaxed);
        self.max_perturbations_per_call.fetch_max(n, Ordering::Relaxed);
    }

    pub fn bump_oct(&self) {
        self.oct_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn bump_compression_labeling(&self) {
        self.compression_labelings.fetch_add(1, Ordering::Relaxed);
    }

    pub fn bump_mincut(&self) {
        self.mincut_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> StatsSnapshot {
        StatsSnapshot {
            disjoint_calls: self.disjoint_calls.load(Ordering::Relaxed),
            perturbations: self.perturbations.load(Ordering::Relaxed),
            max_perturbations_per_call: self.max_perturbations_per_call.load(Ordering::Relaxed),
            oct_calls: self.oct_calls.load(Ordering::Relaxed),
            compression_labelings: self.compression_labelings.load(Ordering::Relaxed),
            mincut_calls: self.mincut_calls.load(Ordering::Relaxed),
            wall_millis: None,
        }
    }
}
