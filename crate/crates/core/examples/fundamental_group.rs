//! Fundamental-group presentations: raw edge-path presentation, Tietze
//! simplification, and certificates for the verdict.
//!
//!     cargo run --example fundamental_group

use spoly::complexes::{
    pi1_presentation, raw_presentation, simplify_presentation, triangulate, Certificate, Presentation, DEFAULT_MOVES,
};
use spoly::model::catalog;

fn show(label: &str, p: &Presentation) {
    let cert = match &p.certificate {
        None => "none".to_string(),
        Some(Certificate::Empty) => "empty presentation".to_string(),
        Some(Certificate::Abelianization { rank, torsion }) => format!("abelianization rank {rank} torsion {torsion:?}"),
        Some(Certificate::FiniteImage { degree, .. }) => format!("nontrivial image in Sym({degree})"),
    };
    println!("{label}: {} after {} moves, certificate: {cert}", p.status.as_str(), p.moves);
    if p.total_length() < 80 {
        println!("    {p}");
    }
}

fn main() -> Result<(), spoly::Error> {
    let k = triangulate(&catalog("bing_house")?)?;
    let raw = raw_presentation(&k)?;
    println!("bing_house raw: {} generators, {} relators", raw.generators.len(), raw.relators.len());
    show("bing_house", &pi1_presentation(&k)?);

    // A balanced presentation of the trivial group with trivial abelianization.
    let twisted = Presentation::from_letters("ab", &["abABB", "baBAA"])?;
    for budget in [2, 20, DEFAULT_MOVES] {
        show(&format!("<a,b | abABB, baBAA> budget {budget}"), &simplify_presentation(&twisted, budget));
    }

    // Perfect groups defeat the abelianization; a finite image still decides.
    let a5 = Presentation::from_letters("ab", &["aa", "bbb", "ababababab"])?;
    show("<a,b | a^2, b^3, (ab)^5>", &simplify_presentation(&a5, DEFAULT_MOVES));
    Ok(())
}
