//! Abstract rigidity matroids on the edge set of a complete graph.
//!
//! The crate builds matroids on `K(V)` (explicit bases, exact linear
//! representations, the cycle matroid), decides whether they are
//! `m`-dimensional abstract rigidity matroids through several equivalent
//! axiom systems, and searches small instances for matroids whose hyperplanes
//! contain the family `H_m(V)` without being rigidity matroids.

pub mod checks;
pub mod connectivity;
pub mod error;
pub mod explore;
pub mod families;
pub mod ground;
pub mod linalg;
pub mod matroid;
pub mod report;
pub mod rigidity;

pub use error::{Error, Result};
pub use ground::{
    complete_edges, edge_count, edge_rank, edge_unrank, Edge, EdgeSet, VertexId, VertexSet,
};
pub use matroid::{BackendKind, ClosureOperator, FamilyKind, FamilyReport, Matroid};
pub use report::{AxiomReport, Scope, Violation};
