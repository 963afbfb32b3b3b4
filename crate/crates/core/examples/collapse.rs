//! Simplicial collapse search: greedy with seeded restarts, exhaustive on
//! small complexes, and an Euler-characteristic obstruction.
//!
//!     cargo run --example collapse

use spoly::complexes::{collapse_search, replay, triangulate, CollapseBudget, CollapseTarget, SimplicialComplex2};
use spoly::model::catalog;

fn main() -> Result<(), spoly::Error> {
    let budget = CollapseBudget::default();
    for (name, target) in [("disc", CollapseTarget::Point), ("disc", CollapseTarget::Disc), ("bing_house", CollapseTarget::Point)] {
        let k = triangulate(&catalog(name)?)?;
        let r = collapse_search(&k, target, budget);
        println!("{name} -> {target:?}: {} in {} steps, residual {:?}", r.outcome.as_str(), r.sequence.len(), r.residual_counts());
        println!("    {}", r.note);
        if !r.sequence.is_empty() {
            assert_eq!(replay(&k, &r.sequence).expect("replayable"), r.residual);
        }
    }

    // An annulus (a triangulated square with two sides identified) has
    // chi = 0, so it cannot collapse to a point.
    let v = |r: usize, c: usize| r * 3 + c % 3;
    let mut tris = Vec::new();
    for c in 0..3 {
        tris.push([v(0, c), v(0, c + 1), v(1, c)]);
        tris.push([v(0, c + 1), v(1, c + 1), v(1, c)]);
    }
    let annulus = SimplicialComplex2::from_triangles("annulus", &tris)?;
    let r = collapse_search(&annulus, CollapseTarget::Point, budget);
    println!("annulus -> Point: {} ({})", r.outcome.as_str(), r.note);

    // Small enough for the exhaustive search, which settles the question.
    let house = triangulate(&catalog("bing_house")?)?;
    let n = house.num_vertices() + house.edges.len() + house.triangles.len();
    println!("bing_house has {n} simplices; exhaustive search applies at exhaustive_max >= {n}");
    Ok(())
}
