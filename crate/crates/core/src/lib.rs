//! Domination in token graphs of stars and complete graphs.
//!
//! The crate builds `k`-token graphs, evaluates the classical bounds on their
//! domination numbers, produces explicit dominating sets, and certifies
//! small cases with an exact branch-and-bound solver.

pub mod combinatorics;
pub mod constructions;
pub mod coverings;
pub mod domination;
pub mod error;
pub mod graph;
pub mod par;
pub mod report;
pub mod token;

pub use error::{Error, Result};
pub use graph::{AdjacencyList, BaseGraph, Family, Graph};
pub use token::{BuildOptions, Mode, TokenGraph, TokenVertex};
