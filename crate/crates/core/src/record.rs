use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vd::{ProblemSpec, Solution};
use crate::witness::verify_partition_on;

/// Where an instance came from and what it looked like.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub path: String,
    pub format: String,
    /// Hex SHA-256 of the file contents.
    pub sha256: String,
    pub n: usize,
    pub m: usize,
}

/// Everything needed to re-check one solver run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub instance: InstanceInfo,
    pub spec: ProblemSpec,
    pub solution: Solution,
    pub backend: String,
    pub seed: Option<u64>,
    pub tool_version: String,
    /// Only set when timing was requested, so records stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Why a record does not check out against its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordIssue {
    GraphMismatch,
    MissingParts,
    TooLarge,
    NotInRestriction,
    NotIndependent,
    BadWitness,
}

impl RunRecord {
    /// Re-checks the stored answer against `g`. Infeasible answers carry no
    /// certificate and are accepted as long as they are well formed.
    pub fn check(&self, g: &Graph) -> Result<(), RecordIssue> {
        if g.n() != self.instance.n || g.m() != self.instance.m {
            return Err(RecordIssue::GraphMismatch);
        }
        let sol = &self.solution;
        let (s, w) = match (sol.feasible, &sol.deletion_set, &sol.witness) {
            (true, Some(s), Some(w)) => (s, w),
            (false, None, None) => return Ok(()),
            _ => return Err(RecordIssue::MissingParts),
        };
        if s.len() > self.spec.k || s.last().is_some_and(|v| v >= g.n()) {
            return Err(RecordIssue::TooLarge);
        }
        if self.spec.restricted.as_ref().is_some_and(|d| !s.is_subset(d)) {
            return Err(RecordIssue::NotInRestriction);
        }
        if self.spec.independent && !g.is_independent(s.as_slice()) {
            return Err(RecordIssue::NotIndependent);
        }
        let rest = g.vertices().difference(s);
        if w.r() != self.spec.r || w.l() != self.spec.l || !verify_partition_on(g, &rest, w) {
            return Err(RecordIssue::BadWitness);
        }
        Ok(())
    }
}
