//! Words of the free semigroup and polynomials of the free associative algebra.

mod poly;
mod word;

pub use poly::{PolyDisplay, Polynomial};
pub use word::{Alphabet, Letter, Word, WordDisplay};

/// A place where a rule applies: the scanned word is `prefix ++ W_rule ++ suffix`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub prefix: Word,
    pub rule: usize,
    pub suffix: Word,
}

impl Occurrence {
    pub fn new(prefix: Word, rule: usize, suffix: Word) -> Self {
        Occurrence { prefix, rule, suffix }
    }
}
