//! Semigroup orderings on words.
//!
//! The built-in ordering is weighted degree-lexicographic: words are compared
//! by the sum of their letter weights, and ties are broken left to right by
//! generator precedence. It is total, satisfies the descending chain
//! condition (finitely many words lie below any weighted degree), and is
//! multiplicative: `u < v` implies `a u b < a v b`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Letter, Word};
use crate::rewrite::ReductionSystem;

/// Weighted deglex ordering on the words of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingSpec {
    // rank[letter] = position of the letter in the precedence chain
    rank: Vec<u32>,
    weights: Vec<u32>,
}

impl OrderingSpec {
    /// Precedence follows the alphabet's declaration order.
    pub fn from_alphabet(alphabet: &Alphabet) -> Self {
        OrderingSpec {
            rank: (0..alphabet.len() as u32).collect(),
            weights: alphabet.weights().to_vec(),
        }
    }

    /// `precedence` lists every letter once, smallest first.
    pub fn with_precedence(alphabet: &Alphabet, precedence: &[Letter]) -> Result<Self> {
        let n = alphabet.len();
        let mut rank = vec![u32::MAX; n];
        if precedence.len() != n {
            return Err(Error::AlphabetMismatch(
                "precedence must list every generator exactly once".into(),
            ));
        }
        for (pos, &l) in precedence.iter().enumerate() {
            let slot = rank
                .get_mut(l as usize)
                .ok_or_else(|| Error::AlphabetMismatch(format!("unknown letter {l}")))?;
            if *slot != u32::MAX {
                return Err(Error::AlphabetMismatch(format!(
                    "generator `{}` appears twice in the precedence",
                    alphabet.name(l)
                )));
            }
            *slot = pos as u32;
        }
        Ok(OrderingSpec {
            rank,
            weights: alphabet.weights().to_vec(),
        })
    }

    /// Letters from smallest to largest.
    pub fn precedence(&self) -> Vec<Letter> {
        let mut letters: Vec<Letter> = (0..self.rank.len() as Letter).collect();
        letters.sort_by_key(|&l| self.rank[l as usize]);
        letters
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn degree(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weights[l as usize] as u64).sum()
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        self.degree(u).cmp(&self.degree(v)).then_with(|| {
            u.letters()
                .iter()
                .map(|&l| self.rank[l as usize])
                .cmp(v.letters().iter().map(|&l| self.rank[l as usize]))
        })
    }

    /// Like [`compare`](Self::compare), but rejects letters the ordering does not know.
    pub fn checked_compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        for w in [u, v] {
            if let Some(l) = w.letters().iter().find(|&&l| l as usize >= self.rank.len()) {
                return Err(Error::AlphabetMismatch(format!("letter {l} is not ordered")));
            }
        }
        Ok(self.compare(u, v))
    }

    pub fn less(&self, u: &Word, v: &Word) -> bool {
        self.compare(u, v) == Ordering::Less
    }

    /// All words of weighted degree at most `max_degree`, in ascending order.
    pub fn words_up_to(&self, max_degree: u64) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut frontier = vec![(Vec::<Letter>::new(), 0u64)];
        while let Some((letters, deg)) = frontier.pop() {
            for l in 0..self.rank.len() as Letter {
                let d = deg + self.weights[l as usize] as u64;
                if d <= max_degree {
                    let mut next = letters.clone();
                    next.push(l);
                    out.push(Word::from(next.clone()));
                    frontier.push((next, d));
                }
            }
        }
        out.sort_by(|a, b| self.compare(a, b));
        out
    }
}

/// A monomial of `f_rule` that is not strictly below `W_rule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: usize,
    pub monomial: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub violations: Vec<Violation>,
}

impl CompatibilityReport {
    pub fn compatible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every right-hand side is a combination of words strictly
/// below its left-hand side.
pub fn check_compatibility(system: &ReductionSystem, spec: &OrderingSpec) -> CompatibilityReport {
    let violations = system
        .rules()
        .iter()
        .enumerate()
        .flat_map(|(i, rule)| {
            rule.rhs
                .monomials()
                .filter(|z| !spec.less(z, &rule.lhs))
                .map(move |z| Violation {
                    rule: i,
                    monomial: z.clone(),
                })
        })
        .collect();
    CompatibilityReport { violations }
}
