//! Deciders, certificate constructors and exhaustive oracles for balanceable
//! and simply balanceable graphs.

pub mod balance;
pub mod characterize;
pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod search;
pub mod set;

pub use balance::{BalanceCertificate, BalanceCounts, Property, Refutation, Status, Verdict};
pub use error::{Error, Result};
pub use graph::{Graph, RegularityInfo};
pub use set::VertexSet;
