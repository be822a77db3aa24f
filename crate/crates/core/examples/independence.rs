//! Certifies that dropping relations of sl(2) gives a strictly smaller ideal.
use diamond_lemma::presentation::parse_presentation;
use diamond_lemma::quotient::independence_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(include_str!("../corpus/sl2.pres"))?;
    let rules = p.system.rules();
    for (keep, rule) in rules.iter().enumerate() {
        let smaller = p.system.with_rules(vec![rule.clone()])?;
        let verdict = independence_check(&smaller, &p.system, &p.ordering)?;
        println!(
            "keeping rule {keep} only: strict = {}, witnesses {:?}",
            verdict.strict, verdict.witnesses
        );
    }
    Ok(())
}
