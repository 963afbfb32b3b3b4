//! Simplicial and chain-level machinery: triangulation, Smith normal form,
//! homology, fundamental group presentations and collapsing.

mod chain;
mod collapse;
mod presentation;
mod simplicial;
pub mod snf;
mod triangulate;

pub use chain::{homology, ChainComplex, HomologyGroup, HomologyResult};
pub use collapse::{collapse_search, replay, CollapseBudget, CollapseOutcome, CollapseResult, CollapseStep, CollapseTarget};
pub use presentation::{
    pi1_presentation, pi1_presentation_with_budget, raw_presentation, simplify_presentation, Certificate, Pi1Status,
    Presentation, DEFAULT_MOVES,
};
pub use simplicial::{Sheet, SimplicialComplex2};
pub use snf::{smith_normal_form, Snf, SparseMatrix};
pub use triangulate::triangulate;

use crate::model::SimplePolyhedron;
use crate::Error;

/// Homology of the canonical triangulation.
pub fn polyhedron_homology(p: &SimplePolyhedron) -> Result<HomologyResult, Error> {
    homology(&triangulate(p)?.chain_complex())
}
