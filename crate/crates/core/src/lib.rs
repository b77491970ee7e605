pub mod cli;
pub mod error;
pub mod exact;
pub mod edge_polytope;
pub mod graph;
pub mod harness;
pub mod io;
pub mod polytope;
pub mod semigroup;

pub use error::{Error, Result};
