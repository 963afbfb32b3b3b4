//! Simple polyhedra as combinatorial data, the Y-bundle monodromy of their
//! singular sets, integer homology and fundamental-group presentations, and
//! orientable 3-dimensional thickenings built block by block.
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod cli;
pub mod codec;
pub mod complexes;
pub mod decisions;
pub mod model;
pub mod monodromy;
pub mod perm;
pub mod thickening;
pub mod util;

pub use model::{catalog, euler_characteristic, validate, SimplePolyhedron, ValidationReport};
pub use perm::Perm3;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error("not compatible with the natural orientation: loop {witness} has transposition monodromy")]
    Incompatible { witness: String },
    #[error("chart '{0}' has no thickening table")]
    ChartUnsupported(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("boundary maps do not compose to zero in degree {0}")]
    NotAComplex(usize),
    #[error("complex is disconnected")]
    Disconnected,
    #[error("walk is not a closed composable loop: {0}")]
    NotALoop(String),
    #[error("internal verification failure: {0}")]
    Internal(String),
    #[error("H2 has torsion {0:?}; not a pseudo quotient space of this kind")]
    TorsionAnomaly(Vec<i64>),
}
