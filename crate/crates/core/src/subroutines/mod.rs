//! Inner engines shared by the deletion solvers: odd cycle transversal
//! (plain and restricted), vertex cover and independent vertex cover.

pub mod flow;
mod ivc;
mod oct;
mod vc;

pub use ivc::{min_independent_vertex_cover, solve_ivc};
pub use oct::{solve_oct, solve_restricted_oct, twin_gadget, RestrictedBackend, RestrictedInstance};
pub use vc::solve_vc;

pub(crate) use oct::{oct_compress, solve_restricted_oct_with};
