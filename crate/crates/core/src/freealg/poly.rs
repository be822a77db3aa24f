use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Word};
use crate::order::OrderingSpec;

/// An element of the free algebra: a finite linear combination of words.
///
/// No stored coefficient is ever zero, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Word, Coeff>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::word(field, Word::one())
    }

    pub fn word(field: Field, w: Word) -> Self {
        Self::term(field.one(), w)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Word::one())
    }

    /// `c * w`; the field is taken from `c`.
    pub fn term(c: Coeff, w: Word) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert(w, c);
        }
        p
    }

    /// Builds a polynomial from (coefficient, word) pairs, collecting like terms.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Coeff, Word)>) -> Result<Self> {
        let mut p = Self::zero(field);
        for (c, w) in terms {
            if c.field() != field {
                return Err(mismatch(field, c.field()));
            }
            p.add_term(&c, w);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &OrderingSpec) -> Vec<(&Word, &Coeff)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        terms
    }

    /// Largest monomial under `order`.
    pub fn leading_word(&self, order: &OrderingSpec) -> Option<&Word> {
        self.terms.keys().max_by(|a, b| order.compare(a, b))
    }

    pub(crate) fn add_term(&mut self, c: &Coeff, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(mismatch(self.field, other.field))
        }
    }

    /// `alpha * a + b`.
    pub fn combine(alpha: &Coeff, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        a.check_field(b)?;
        if alpha.field() != a.field {
            return Err(mismatch(a.field, alpha.field()));
        }
        let mut out = b.clone();
        if !alpha.is_zero() {
            for (w, c) in &a.terms {
                out.add_term(&alpha.mul(c), w.clone());
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        Self::combine(&self.field.one(), self, other)
    }

    /// `self - other`.
    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        Self::combine(&self.field.one().neg(), other, self)
    }

    pub fn scale(&self, alpha: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        if alpha.is_zero() {
            return out;
        }
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), alpha.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.field.one().neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let mut out = Polynomial::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(&a.mul(b), u.concat(v));
            }
        }
        Ok(out)
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left, right), c.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet, order: &'a OrderingSpec) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            alphabet,
            order,
        }
    }
}

fn mismatch(left: Field, right: Field) -> Error {
    Error::FieldMismatch {
        left: left.to_string(),
        right: right.to_string(),
    }
}

/// Renders terms in descending order, e.g. `x*x*y*y + 3*x*y + 1`.
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    alphabet: &'a Alphabet,
    order: &'a OrderingSpec,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.poly.sorted_terms(self.order).into_iter().enumerate() {
            let negative = c.is_negative_literal();
            let magnitude = if negative { c.neg() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", self.alphabet.display_word(w))?;
            } else {
                write!(f, "{magnitude}*{}", self.alphabet.display_word(w))?;
            }
        }
        Ok(())
    }
}
