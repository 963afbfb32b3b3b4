//! The three interchange formats: canonical .spoly text, .tri3 gluing
//! tables and sorted-key JSON reports.
//!
//!     cargo run --example formats

use spoly::codec::{emit_report_json, emit_spoly, emit_tri3, parse_spoly, parse_tri3};
use spoly::decisions::{analyze, DecisionOptions};
use spoly::model::catalog;
use spoly::thickening::thicken;

fn main() -> Result<(), spoly::Error> {
    let p = catalog("round_bundle")?;
    let text = emit_spoly(&p)?;
    print!("{text}");
    let back = parse_spoly(&text).expect("emitted text parses");
    assert_eq!(back, p);
    assert_eq!(emit_spoly(&back)?, text);

    let t = thicken(&p)?;
    let tri = emit_tri3(&t)?;
    println!("\n.tri3: {} lines, first three:", tri.lines().count());
    for l in tri.lines().take(3) {
        println!("    {l}");
    }
    assert_eq!(parse_tri3(&tri).expect("emitted gluings parse"), t);

    let json = emit_report_json(&analyze(&p, 4, &DecisionOptions::default())?);
    println!("\nanalysis JSON, {} bytes; homology and source fields:", json.len());
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    println!("    {}", v["homology"]);
    println!("    {}", v["source"]);
    Ok(())
}
