//! Exhaustive search over all reduction sequences, compared with the fixed
//! strategy.
use diamond_lemma::presentation::parse_presentation;
use diamond_lemma::rewrite::DEFAULT_ORACLE_BUDGET;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (text, expr) in [
        (include_str!("../corpus/sl2.pres"), "h*h*f*e*e"),
        (include_str!("../corpus/self_overlap.pres"), "a*b*a*b*a"),
    ] {
        let p = parse_presentation(text)?;
        let a = p.parse_expr(expr)?;
        let outcome = p.system.all_normal_forms(&a, DEFAULT_ORACLE_BUDGET)?;
        let strategy = p.system.normal_form(&a, &p.ordering)?.value;
        println!("{expr}: {} state(s)", outcome.visited);
        for nf in &outcome.normal_forms {
            let mark = if *nf == strategy { " (strategy)" } else { "" };
            println!("  {}{mark}", p.show_poly(nf));
        }
    }
    Ok(())
}
