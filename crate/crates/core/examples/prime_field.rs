//! The same machinery over a prime field.
use diamond_lemma::ambiguity::check_all;
use diamond_lemma::presentation::parse_presentation;
use diamond_lemma::QuotientRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(include_str!("../corpus/idempotent_f7.pres"))?;
    println!("confluent: {}", check_all(&p.system, &p.ordering)?.confluent);
    let ring = QuotientRing::new(p.system.clone(), p.ordering.clone())?;
    let mut power = ring.reduce(&p.parse_expr("1")?)?;
    let a = p.parse_expr("a")?;
    for n in 1..=6 {
        power = ring.multiply(&power, &a)?;
        println!("a^{n} = {}", p.show_poly(&power));
    }
    println!(
        "a^2 - 3*a in the ideal: {}",
        ring.ideal_member(&p.parse_expr("a^2 - 3*a")?)?
    );
    Ok(())
}
