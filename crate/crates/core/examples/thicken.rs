//! Thickening a compatible polyhedron to an orientable 3-manifold W_P with
//! boundary, then checking it independently of the construction.
//!
//!     cargo run --example thicken [-- out_dir]

use spoly::codec::emit_tri3;
use spoly::model::catalog;
use spoly::thickening::{certify, thicken_detailed};

fn main() -> Result<(), spoly::Error> {
    let out_dir = std::env::args().nth(1);
    for name in ["disc", "round_bundle", "round_sum2", "suzuoka", "bing_house", "two_crossings"] {
        let p = catalog(name)?;
        let th = thicken_detailed(&p)?;
        let c = certify(&p, &th.triangulation)?;
        let m = &c.manifold;
        let boundary: Vec<i64> = m.boundary.iter().map(|b| b.euler).collect();
        println!(
            "{name:<14} {:>4} tets  cells {:?}  chi {}  boundary chi {:?}  {}",
            th.triangulation.len(),
            m.cells,
            m.euler,
            boundary,
            c.homology
        );
        if let Some(dir) = &out_dir {
            let path = std::path::Path::new(dir).join(format!("{name}.tri3"));
            std::fs::write(&path, emit_tri3(&th.triangulation)?).expect("writable output directory");
        }
    }

    // The hypothesis is checked before anything is built.
    match thicken_detailed(&catalog("incompatible_circle")?) {
        Err(e) => println!("incompatible_circle: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
