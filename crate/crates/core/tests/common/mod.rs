//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use diamond_lemma::presentation::{parse_presentation, Presentation};
use diamond_lemma::{Coeff, Field, Occurrence, Polynomial, Word};
use rand::Rng;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

pub fn load(name: &str) -> Presentation {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap();
    parse_presentation(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// The same presentation with its `field` line replaced.
pub fn load_over(name: &str, field: &str) -> Presentation {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap();
    let text: String = text
        .lines()
        .map(|l| {
            if l.starts_with("field") {
                format!("field {field}")
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    parse_presentation(&text).unwrap()
}

/// All words of length at most `max_len` over `n` letters, shortest first.
pub fn words_up_to_len(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..n as u32 {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::from));
        layer = next;
    }
    out
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from((0..len).map(|_| rng.gen_range(0..n as u32)).collect::<Vec<_>>())
}

/// Small rationals with denominators up to 3, or residues.
pub fn random_coeff<R: Rng>(rng: &mut R, field: Field) -> Coeff {
    let num = field.from_i64(rng.gen_range(-6..=6));
    match field {
        Field::Rationals => num.mul(&field.from_i64(rng.gen_range(1..=3)).inv().unwrap()),
        Field::Prime(_) => num,
    }
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    field: Field,
    n: usize,
    max_terms: usize,
    max_len: usize,
) -> Polynomial {
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| (random_coeff(rng, field), random_word(rng, n, max_len)))
        .collect();
    Polynomial::from_terms(field, terms).unwrap()
}

pub fn random_occurrence<R: Rng>(rng: &mut R, n: usize, rules: usize, max_len: usize) -> Occurrence {
    Occurrence::new(
        random_word(rng, n, max_len),
        rng.gen_range(0..rules),
        random_word(rng, n, max_len),
    )
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
