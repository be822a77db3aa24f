//! Normal forms and products in the first Weyl algebra, where `y` acts as
//! `d/dx`.
use diamond_lemma::ambiguity::check_all;
use diamond_lemma::presentation::parse_presentation;
use diamond_lemma::QuotientRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(include_str!("../corpus/weyl.pres"))?;
    let report = check_all(&p.system, &p.ordering)?;
    println!(
        "{} ambiguities, confluent: {}",
        report.verdicts.len(),
        report.confluent
    );

    let a = p.parse_expr("y*x*y*x")?;
    let nf = p.system.normal_form(&a, &p.ordering)?;
    println!("nf({}) = {}", p.show_poly(&a), p.show_poly(&nf.value));
    print!("{}", p.system.format_trace(&nf.trace));

    let ring = QuotientRing::new(p.system.clone(), p.ordering.clone())?;
    let y2 = ring.reduce(&p.parse_expr("y^2")?)?;
    let x3 = ring.reduce(&p.parse_expr("x^3")?)?;
    println!("y^2 . x^3 = {}", p.show_poly(&ring.multiply(&y2, &x3)?));
    Ok(())
}
