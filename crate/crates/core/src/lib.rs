//! Exact combinatorial and homological invariants of finite simple graphs and
//! their edge ideals.

pub mod census;
pub mod claims;
pub mod covers;
pub mod error;
pub mod families;
pub mod graph;
pub mod homology;
pub mod io;
pub mod matchings;
pub mod par;
pub mod resolutions;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
pub use par::Exec;
