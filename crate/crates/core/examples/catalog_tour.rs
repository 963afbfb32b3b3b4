//! Every built-in polyhedron: validation summary and Euler characteristic.
//!
//!     cargo run --example catalog_tour

use spoly::model::{catalog, validate, CATALOG_NAMES};

fn main() -> Result<(), spoly::Error> {
    println!("{:<20} {:>3} {:>5} {:>6} {:>5} {:>7} {:>6}", "name", "dp", "ivals", "circles", "free", "regions", "euler");
    for name in CATALOG_NAMES {
        let p = catalog(name)?;
        let r = validate(&p);
        assert!(r.ok, "{name}: {}", r.first_error());
        let s = &r.summary;
        println!(
            "{:<20} {:>3} {:>5} {:>6} {:>5} {:>7} {:>6}",
            name,
            s.double_points,
            s.triple_intervals,
            s.triple_circles,
            s.free_circles,
            s.regions,
            spoly::euler_characteristic(&p)?
        );
        for w in &r.warnings {
            println!("    warning {w}");
        }
    }
    Ok(())
}
