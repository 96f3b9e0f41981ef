//! Hamiltonian paths and cycles in squares of small graphs: the structural
//! toolkit (blocks, EPS decompositions), constrained witness search, and an
//! exhaustive verification harness.

pub mod decomposition;
pub mod eps;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod report;
pub mod witness;

pub use decomposition::{Block, BlockDecomposition, Chain};
pub use eps::{EpsDecomposition, EpsOrJeps, JepsDecomposition};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, MAX_VERTICES};
pub use harness::{CampaignConfig, Filter, Property};
pub use report::{FailureRecord, PropertyReport, Status};
pub use witness::{HamWitness, IncidenceSpec, Requirement, Search, SearchOptions};
