//! Resolvability relative to the ordering: the branch difference of the
//! overlap `zyx` written as a combination of smaller relations.
use diamond_lemma::ambiguity::{check_resolvable_relative, enumerate_ambiguities};
use diamond_lemma::presentation::parse_presentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(include_str!("../corpus/commuting3.pres"))?;
    for amb in enumerate_ambiguities(&p.system) {
        let (left, right) = amb.branches(&p.system);
        let outcome = check_resolvable_relative(&p.system, &p.ordering, &amb)?;
        println!(
            "{}: {} - ({}) over a span of {} relations",
            p.show_word(&amb.word()),
            p.show_poly(&left),
            p.show_poly(&right),
            outcome.span_size
        );
        let Some(cert) = outcome.certificate else {
            println!("  not in the span");
            continue;
        };
        for (c, occ) in &cert.terms {
            let rule = p.system.rule(occ.rule);
            println!(
                "  {c} * {} ({} - {}) {}",
                p.show_word(&occ.prefix),
                p.show_word(&rule.lhs),
                p.show_poly(&rule.rhs),
                p.show_word(&occ.suffix)
            );
        }
        println!("  expands to {}", p.show_poly(&cert.expand(&p.system)));
    }
    Ok(())
}
