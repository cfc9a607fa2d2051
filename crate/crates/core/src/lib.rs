//! Structure analysis for vertex-transitive graphs and their automorphism groups.

pub mod bounds;
pub mod cli;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod io;
pub mod local;
pub mod group;
pub mod pair;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::PermGroup;
pub use pair::{validate_pair, VTPair};
pub use perm::Permutation;
