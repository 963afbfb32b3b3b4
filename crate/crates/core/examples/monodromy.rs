//! Compatibility with the natural orientation: the monodromy of the
//! Y-shaped neighbourhood along a cycle basis of the singular graph.
//!
//!     cargo run --example monodromy

use spoly::model::catalog;
use spoly::monodromy::{check_compatibility, check_compatibility_seeded};

fn main() -> Result<(), spoly::Error> {
    for name in ["round_bundle", "bing_house", "two_crossings", "incompatible_circle"] {
        let p = catalog(name)?;
        let r = check_compatibility(&p)?;
        println!(
            "{name}: {} nodes, {} arcs, {} basis cycles, compatible {}",
            r.graph.nodes.len(),
            r.graph.arcs.len(),
            r.cycles.len(),
            r.compatible
        );
        for c in &r.cycles {
            println!("    {:<16} perm {} sign {:+}", c.walk.describe(&r.graph), c.perm, c.sign);
        }
        if let Some(w) = &r.witness {
            println!("    witness {}", w.describe(&r.graph));
        }
        // Another spanning forest, same answer.
        assert_eq!(check_compatibility_seeded(&p, 7)?.compatible, r.compatible);
    }
    Ok(())
}
