//! Exact solvers for `(r, l)`-Vertex Deletion with `max(r, l) <= 2`: delete
//! at most `k` vertices so that the rest splits into `r` independent sets
//! and `l` cliques, optionally requiring the deleted set to be independent.
//!
//! ```
//! use rlvd::{solve, Graph, ProblemSpec, SolverConfig};
//!
//! let c5 = Graph::cycle(5);
//! let sol = solve(&c5, &ProblemSpec::new(2, 0, 1), &SolverConfig::default()).unwrap();
//! assert!(sol.feasible);
//! assert_eq!(sol.deletion_set.unwrap().len(), 1);
//! ```

pub mod compression;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ivd;
pub mod oracle;
pub mod record;
pub mod stats;
pub mod subroutines;
pub mod vd;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{parse_graph, Bipartition, Format, Graph, Vertex, VertexSet};
pub use ivd::{solve_ivd, MincutBackend};
pub use record::{InstanceInfo, RunRecord};
pub use stats::StatsSnapshot;
pub use subroutines::RestrictedBackend;
pub use vd::{solve_vd, ProblemSpec, Solution, SolverConfig};
pub use witness::{recognize, verify_partition, RLPartition};

/// Solves either variant, running the guess loops on `cfg.threads` workers.
pub fn solve(g: &Graph, spec: &ProblemSpec, cfg: &SolverConfig) -> Result<Solution> {
    let run = || {
        if spec.independent {
            solve_ivd(g, spec, cfg)
        } else {
            solve_vd(g, spec, cfg)
        }
    };
    if cfg.threads > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Error::Contract(format!("cannot start worker pool: {e}"))),
        }
    } else {
        run()
    }
}
