//! Drops rules whose left-hand side contains another one.
use diamond_lemma::ambiguity::{enumerate_inclusions, simplify_system};
use diamond_lemma::presentation::parse_presentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(include_str!("../corpus/inclusion.pres"))?;
    println!(
        "before: {} inclusion(s)\n{p}",
        enumerate_inclusions(&p.system).len()
    );
    let simplified = p.with_system(simplify_system(&p.system)?);
    println!(
        "after: {} inclusion(s)\n{simplified}",
        enumerate_inclusions(&simplified.system).len()
    );
    Ok(())
}
