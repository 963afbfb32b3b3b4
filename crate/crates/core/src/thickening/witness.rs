//! The projection from the thickening back onto the polyhedron, read off
//! the provenance tags.

use std::collections::BTreeSet;

use super::tri::Triangulation3;
use crate::model::{Cell, SimplePolyhedron};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    /// Glued tetrahedra project to equal or incident cells.
    pub cellular: bool,
    /// Every cell of the polyhedron is the image of some tetrahedron.
    pub covering: bool,
    pub violations: Vec<String>,
    pub uncovered: Vec<String>,
}

pub fn projection_witness(t: &Triangulation3, p: &SimplePolyhedron) -> WitnessReport {
    let known: BTreeSet<Cell> = p.cells().into_iter().collect();
    let mut violations = Vec::new();
    let cells: Vec<Option<Cell>> = t
        .tets
        .iter()
        .enumerate()
        .map(|(i, tet)| {
            let c = Cell::parse_tag(&tet.cell).filter(|c| known.contains(c));
            if c.is_none() {
                violations.push(format!("tet {i}: '{}' is not a cell of {}", tet.cell, p.name));
            }
            c
        })
        .collect();
    for (i, tet) in t.tets.iter().enumerate() {
        for (f, g) in tet.gluings.iter().enumerate() {
            let Some(g) = g else { continue };
            if g.tet < i || g.tet >= cells.len() {
                continue;
            }
            if let (Some(a), Some(b)) = (&cells[i], &cells[g.tet]) {
                if !p.cell_incident(a, b) && !p.cell_incident(b, a) {
                    violations.push(format!(
                        "glue {i}.{f} {}.{}: {} and {} are not incident",
                        g.tet,
                        g.face,
                        a.tag(),
                        b.tag()
                    ));
                }
            }
        }
    }
    let covered: BTreeSet<&Cell> = cells.iter().flatten().collect();
    let uncovered: Vec<String> = known.iter().filter(|c| !covered.contains(c)).map(Cell::tag).collect();
    WitnessReport { cellular: violations.is_empty(), covering: uncovered.is_empty(), violations, uncovered }
}
