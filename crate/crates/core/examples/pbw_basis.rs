//! Irreducible words of the polynomial ring in four variables and of the
//! enveloping algebra of sl(2), counted by degree.
use diamond_lemma::presentation::parse_presentation;
use diamond_lemma::quotient::basis_words;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text, max) in [
        ("commuting, n = 4", include_str!("../corpus/commuting4.pres"), 5),
        ("sl(2)", include_str!("../corpus/sl2.pres"), 4),
    ] {
        let p = parse_presentation(text)?;
        let words = basis_words(&p.system, &p.ordering, max);
        let counts: Vec<usize> = (0..=max)
            .map(|d| words.iter().filter(|w| p.ordering.degree(w) == d).count())
            .collect();
        println!("{name}: counts by degree {counts:?}");
        let top: Vec<String> = words
            .iter()
            .filter(|w| p.ordering.degree(w) == 2)
            .map(|w| p.show_word(w))
            .collect();
        println!("  degree 2: {}", top.join(", "));
    }
    Ok(())
}
