//! Writing a polyhedron by hand in the .spoly format and seeing what the
//! validator and the invariants say about it.
//!
//!     cargo run --example custom_polyhedron

use spoly::codec::parse_spoly;
use spoly::complexes::{pi1_presentation, polyhedron_homology, triangulate};
use spoly::monodromy::check_compatibility;

// A disc with a handle: one region of genus 1 bounded by a fold circle.
const HANDLE: &str = "\
spoly 1
polyhedron handle
region h genus 1 orientable yes
  boundary free c
";

// A triple circle whose third sheet comes back with the other two swapped:
// ident 102 exchanges slots 0 and 1 once around.
const SWAPPED: &str = "\
polyhedron swapped
edge t circle ident 102
region a genus 0 orientable yes
  boundary free c0
  boundary attached (t 0 +) (t 1 +)
region b genus 0 orientable yes
  boundary attached (t 2 +)
";

// Typos are reported all at once, with line and column.
const BROKEN: &str = "\
polyhedron broken
edge t circle ident 112
region a genus -1 orientable maybe
";

fn main() -> Result<(), spoly::Error> {
    let p = parse_spoly(HANDLE).expect("handle parses");
    let k = triangulate(&p)?;
    let pi = pi1_presentation(&k)?;
    println!("{}: homology {}", p.name, polyhedron_homology(&p)?);
    println!("  pi1 {} {}", pi.status.as_str(), pi);

    let q = parse_spoly(SWAPPED).expect("swapped parses");
    let m = check_compatibility(&q)?;
    println!("{}: compatible {}", q.name, m.compatible);
    if let Some(w) = &m.witness {
        println!("  witness loop {}", w.describe(&m.graph));
    }

    match parse_spoly(BROKEN) {
        Ok(_) => unreachable!(),
        Err(errs) => {
            for e in errs {
                println!("broken:{e}");
            }
        }
    }
    Ok(())
}
