use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator in its [`Alphabet`].
pub type Letter = u32;

/// The generators of the free semigroup, with a positive weight each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Alphabet {
    /// An alphabet with unit weights.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Self::with_weights(names, weights)
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::InvalidAlphabet(
                "one weight is required per generator".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty generator name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidAlphabet(format!(
                "generator `{}` has weight 0",
                names[i]
            )));
        }
        Ok(Alphabet { names, weights })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter as usize]
    }

    pub fn weight(&self, letter: Letter) -> u32 {
        self.weights[letter as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// Builds a word from generator names.
    pub fn word(&self, names: &[&str]) -> Result<Word> {
        names
            .iter()
            .map(|n| {
                self.letter(n)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("unknown generator `{n}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    /// Sum of the weights of the letters of `w`.
    pub fn degree(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weight(l) as u64).sum()
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l as usize >= self.len()) {
            Some(l) => Err(Error::AlphabetMismatch(format!(
                "letter index {l} outside an alphabet of {} generators",
                self.len()
            ))),
            None => Ok(()),
        }
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            alphabet: self,
            word: w,
        }
    }
}

/// An element of the free semigroup; the empty word is the identity `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `a * self * b`.
    pub fn sandwich(&self, a: &Word, b: &Word) -> Word {
        let mut letters = Vec::with_capacity(a.len() + self.len() + b.len());
        letters.extend_from_slice(&a.0);
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&b.0);
        Word(letters)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Offsets at which `pattern` starts inside `self`, overlapping ones included.
    pub fn match_offsets<'a>(&'a self, pattern: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let (w, p) = (&self.0, &pattern.0);
        let last = if p.len() <= w.len() {
            w.len() - p.len() + 1
        } else {
            0
        };
        (0..last).filter(move |&i| !p.is_empty() && &w[i..i + p.len()] == p.as_slice())
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.match_offsets(pattern).next().is_some()
    }

    /// Every split `self = prefix ++ pattern ++ suffix`, ordered by prefix length.
    pub fn find_occurrences(&self, pattern: &Word) -> Result<Vec<(Word, Word)>> {
        if pattern.is_one() {
            return Err(Error::EmptyPattern);
        }
        Ok(self
            .match_offsets(pattern)
            .map(|i| (self.slice(0..i), self.slice(i + pattern.len()..self.len())))
            .collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_one() {
            return write!(f, "1");
        }
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.alphabet.name(l))?;
        }
        Ok(())
    }
}
