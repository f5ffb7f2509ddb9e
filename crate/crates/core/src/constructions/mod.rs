//! Explicit dominating sets for token graphs of stars and complete graphs,
//! and the closed-form bounds on their domination numbers.

mod complete;
mod star;
mod theory;

pub use complete::{
    complete_f2_construction, complete_f3_construction, complete_fk_construction, CompleteF3, HalfCover,
    HalfMethod,
};
pub use star::{
    d1_undominated_witness, smallest_prime_factor, star_f2_construction, star_fk_construction, star_fk_plan,
    StarFkPlan,
};
pub use theory::{theoretical_gamma, GammaBounds};

use crate::token::DEFAULT_VERTEX_BUDGET;

pub const METHOD_STAR_F2: &str = "star-f2-Dij";
pub const METHOD_STAR_FK: &str = "star-fk-residue";
pub const METHOD_COMPLETE_F2: &str = "complete-f2-disjoint";
pub const METHOD_COMPLETE_F3: &str = "complete-f3-split-sts";
pub const METHOD_COMPLETE_FK: &str = "complete-fk-mis";

/// Shared knobs for the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionOptions {
    /// Token graphs with more vertices than this are not checked for domination.
    pub verify_budget: u64,
    /// Vertex budget for constructions that materialize the token graph.
    pub vertex_budget: u64,
}

impl Default for ConstructionOptions {
    fn default() -> Self {
        ConstructionOptions {
            verify_budget: DEFAULT_VERTEX_BUDGET,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}
