//! What the theorems say about the source manifold M, for a polyhedron and
//! a source dimension m, with every hypothesis listed.
//!
//!     cargo run --example decisions

use spoly::decisions::{source_invariants, special_generic_decision, sphere_recognition};
use spoly::model::catalog;

fn main() -> Result<(), spoly::Error> {
    for (name, m) in [("round_bundle", 4), ("round_sum2", 4), ("bing_house", 6)] {
        let r = source_invariants(&catalog(name)?, m)?;
        print!("{name}, m = {m}:\n{r}");
    }
    println!();

    for (name, m) in [("bing_house", 4), ("disc", 3), ("round_bundle", 4)] {
        println!("sphere recognition, {name}, m = {m}");
        print!("{}", sphere_recognition(&catalog(name)?, m)?);
    }
    println!();

    for (name, m) in [("bing_house", 5), ("incompatible_circle", 4), ("disc", 7)] {
        println!("special generic maps, {name}, m = {m}");
        print!("{}", special_generic_decision(&catalog(name)?, m)?);
    }
    Ok(())
}
