//! Orientable 3-manifolds thickening compatible simple polyhedra, and the
//! checks applied to them.

mod build;
mod tri;
mod verify;
mod witness;

pub use build::{thicken, thicken_detailed, Thickening};
pub use tri::{face_vertices, inverse_perm3, vertex_map, Gluing, Tet, Triangulation3};
pub use verify::{homology3, verify_manifold, BoundaryComponent, ManifoldReport};
pub use witness::{projection_witness, WitnessReport};

use crate::complexes::{polyhedron_homology, HomologyResult};
use crate::model::SimplePolyhedron;
use crate::Error;

/// A thickening together with the checks it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified {
    pub manifold: ManifoldReport,
    pub witness: WitnessReport,
    pub homology: HomologyResult,
}

/// Re-checks a constructed thickening of `p`: a connected orientable
/// manifold with nonempty boundary, χ(W) = χ(p), χ(∂W) = 2χ(W), homology
/// equal to that of `p` with H3 = 0, and a cellular covering projection.
/// Any failure is an [`Error::Internal`].
pub fn certify(p: &SimplePolyhedron, t: &Triangulation3) -> Result<Certified, Error> {
    let manifold = verify_manifold(t);
    let witness = projection_witness(t, p);
    let mut bad = Vec::new();
    if !manifold.is_manifold {
        bad.push(format!("not a manifold: {}", manifold.issues.first().map(String::as_str).unwrap_or("?")));
    }
    if !manifold.orientable {
        bad.push("not orientable".to_string());
    }
    if !manifold.connected {
        bad.push("not connected".to_string());
    }
    if manifold.boundary.is_empty() {
        bad.push("empty boundary".to_string());
    }
    let target = polyhedron_homology(p)?;
    if manifold.euler != target.euler() {
        bad.push(format!("euler {} != {}", manifold.euler, target.euler()));
    }
    if manifold.boundary_euler() != 2 * manifold.euler {
        bad.push(format!("boundary euler {} != 2 * {}", manifold.boundary_euler(), manifold.euler));
    }
    let homology = if manifold.is_manifold { homology3(t) } else { HomologyResult { groups: Vec::new() } };
    if manifold.is_manifold && ((0..3).any(|k| homology.degree(k) != target.degree(k)) || !homology.degree(3).is_zero()) {
        bad.push(format!("homology {homology} differs from {target}"));
    }
    if !witness.cellular || !witness.covering {
        bad.push("projection witness is not cellular and covering".to_string());
    }
    if bad.is_empty() {
        Ok(Certified { manifold, witness, homology })
    } else {
        Err(Error::Internal(bad.join("; ")))
    }
}
