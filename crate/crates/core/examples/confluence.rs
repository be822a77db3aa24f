//! Checks every ambiguity of confluent and non-confluent systems.
use diamond_lemma::ambiguity::check_all;
use diamond_lemma::presentation::parse_presentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        include_str!("../corpus/sl2.pres"),
        include_str!("../corpus/duplicate_lhs.pres"),
        include_str!("../corpus/self_overlap.pres"),
    ] {
        let p = parse_presentation(text)?;
        let report = check_all(&p.system, &p.ordering)?;
        println!("{}", text.lines().next().unwrap_or_default());
        for v in &report.verdicts {
            println!(
                "  {} at {}: {} vs {}",
                v.ambiguity.kind.as_str(),
                p.show_word(&v.ambiguity.word()),
                p.show_poly(&v.nf_left),
                p.show_poly(&v.nf_right)
            );
        }
        println!("  confluent: {}", report.confluent);
    }
    Ok(())
}
