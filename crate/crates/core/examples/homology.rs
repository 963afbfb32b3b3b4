//! Integer homology of the canonical triangulation, via Smith normal form.
//!
//!     cargo run --example homology

use spoly::complexes::{smith_normal_form, triangulate};
use spoly::model::{catalog, CATALOG_NAMES};

fn main() -> Result<(), spoly::Error> {
    for name in CATALOG_NAMES {
        let p = catalog(name)?;
        let k = triangulate(&p)?;
        let h = spoly::complexes::homology(&k.chain_complex())?;
        println!(
            "{name:<20} V={:<4} E={:<4} T={:<4} chi={:<2} {h}",
            k.num_vertices(),
            k.edges.len(),
            k.triangles.len(),
            k.euler()
        );
        assert_eq!(h.euler(), k.euler());
    }

    // Torsion shows up in the invariant factors.
    let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let s = smith_normal_form(&m)?;
    println!("snf of {m:?}: factors {:?}, rank {}, torsion {:?}", s.factors, s.rank, s.torsion());
    Ok(())
}
