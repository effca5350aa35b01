//! Exact enumeration and cross-verification of Hamiltonian paths, cycle
//! covers, acyclic orientations and chromatic symmetric functions on small
//! labeled digraphs, graphs and posets.
//!
//! Every count is exact. Symmetric functions carry arbitrary-precision
//! rational coefficients, and every identity the library implements is
//! paired with an independent route that the [`verify`] module checks
//! exhaustively at small sizes.

pub mod bijections;
pub mod det;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod partition;
pub mod samples;
pub mod setmaps;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CycleCover, Digraph, Graph, Orientation, PathCover, Poset, VertexSet};
pub use partition::Partition;
pub use symfunc::{Basis, SymFunc};
