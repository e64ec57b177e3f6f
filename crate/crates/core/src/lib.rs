//! Symmetry breaking on small graphs.
//!
//! Computes distinguishing numbers `D(G)` (vertex labelings) and distinguishing
//! indices `D'(G)` (edge labelings) exactly, transfers a distinguishing vertex
//! labeling of a graph with a cycle into a distinguishing edge labeling that
//! uses no more labels, and recognizes the trees whose distinguishing index
//! exceeds their distinguishing number.
//!
//! Everything here is exhaustive and aimed at graphs of roughly ten vertices.

pub mod analysis;
mod error;
pub mod graph;
pub mod group;
pub mod labeling;
pub mod transfer;
pub mod tree_family;

pub use error::{Error, Result};
pub use graph::{Cycle, DistanceField, Graph};
pub use group::{AutomorphismGroup, CycleOrbit, Permutation};
pub use labeling::{EdgeLabeling, VertexLabeling};
pub use transfer::TransferCertificate;
pub use tree_family::{RootedTree, TreeFamilyReport};

/// Work caps shared by the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum automorphism group order.
    pub group_budget: u64,
    /// Maximum number of complete labelings examined by one search.
    pub search_budget: u64,
    /// Maximum number of simple cycles enumerated.
    pub cycle_budget: usize,
    /// Work cap for the local cycle-orbit labeling search, counted in label
    /// assignments plus constraint checks.
    pub step1_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_budget: 10_000_000,
            search_budget: 100_000_000,
            cycle_budget: 1_000_000,
            step1_budget: 10_000_000,
        }
    }
}
