//! Exact-arithmetic toolkit for membership of edge-weight vectors in the
//! cone, lattice and integer cone generated by a graph's cuts, with minimal
//! Hilbert basis computation, fixed-pattern minor search, and a structural
//! classifier for the Hilbert property of graph cut systems.

pub mod catalog;
pub mod cone;
pub mod dd;
pub mod graph;
pub mod iso;
pub mod linalg;
pub mod simplex;
pub mod textio;

pub use graph::{Graph, GraphError};
pub use linalg::Rat;
