//! The presented algebra `k<X>/I`, realized on irreducible polynomials.

use crate::ambiguity::{check_all, enumerate_ambiguities, ConfluenceReport};
use crate::error::{Error, Result};
use crate::freealg::{Polynomial, Word};
use crate::order::{check_compatibility, OrderingSpec};
use crate::rewrite::ReductionSystem;

/// A confluent reduction system viewed as a ring whose elements are
/// irreducible polynomials and whose product is `a . b = nf(ab)`.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    system: ReductionSystem,
    spec: OrderingSpec,
    report: ConfluenceReport,
}

impl QuotientRing {
    /// Runs the confluence check and refuses systems that fail it.
    pub fn new(system: ReductionSystem, spec: OrderingSpec) -> Result<Self> {
        let report = check_all(&system, &spec)?;
        if !report.compatibility.compatible() {
            return Err(Error::Incompatible {
                violations: report.compatibility.violations.len(),
            });
        }
        if !report.confluent {
            return Err(Error::NotConfluent {
                unresolvable: report.unresolvable().count(),
            });
        }
        Ok(QuotientRing { system, spec, report })
    }

    pub fn system(&self) -> &ReductionSystem {
        &self.system
    }

    pub fn spec(&self) -> &OrderingSpec {
        &self.spec
    }

    pub fn report(&self) -> &ConfluenceReport {
        &self.report
    }

    /// The canonical representative of `a`.
    pub fn reduce(&self, a: &Polynomial) -> Result<Polynomial> {
        Ok(self.system.normal_form(a, &self.spec)?.value)
    }

    pub fn multiply(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        if !self.system.is_irreducible(a) || !self.system.is_irreducible(b) {
            return Err(Error::ReducibleInput);
        }
        self.reduce(&a.mul(b)?)
    }

    /// Whether `a` lies in the ideal generated by the relations `W - f`.
    pub fn ideal_member(&self, a: &Polynomial) -> Result<bool> {
        Ok(self.reduce(a)?.is_zero())
    }

    /// Irreducible words of weighted degree at most `max_degree`.
    pub fn basis_words(&self, max_degree: u64) -> Vec<Word> {
        basis_words(&self.system, &self.spec, max_degree)
    }
}

/// Words of weighted degree at most `max_degree` containing no left-hand
/// side, in ascending order. For a confluent system these span the quotient.
pub fn basis_words(system: &ReductionSystem, spec: &OrderingSpec, max_degree: u64) -> Vec<Word> {
    spec.words_up_to(max_degree)
        .into_iter()
        .filter(|w| !system.is_reducible_word(w))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceVerdict {
    /// Rules of the larger system whose left-hand side is irreducible with
    /// respect to the smaller one.
    pub witnesses: Vec<usize>,
    /// Some witness exists, so the smaller ideal is strictly contained.
    pub strict: bool,
    /// When the larger system has no ambiguities: for each rule, whether its
    /// left-hand side is irreducible with respect to the other rules.
    pub per_rule: Option<Vec<bool>>,
}

impl IndependenceVerdict {
    /// Every relation is independent of the others.
    pub fn all_independent(&self) -> bool {
        self.per_rule.as_ref().is_some_and(|v| v.iter().all(|&b| b))
    }
}

/// Certifies that the ideal of `smaller` is strictly inside the ideal of
/// `larger` by exhibiting a rule of `larger` whose left-hand side is
/// irreducible under `smaller`.
pub fn independence_check(
    smaller: &ReductionSystem,
    larger: &ReductionSystem,
    spec: &OrderingSpec,
) -> Result<IndependenceVerdict> {
    if smaller.alphabet() != larger.alphabet() || smaller.field() != larger.field() {
        return Err(Error::Precondition(
            "both systems must share alphabet and field".into(),
        ));
    }
    if let Some(i) = smaller.rules().iter().position(|r| !larger.rules().contains(r)) {
        return Err(Error::Precondition(format!(
            "rule {i} of the smaller system is not a rule of the larger one"
        )));
    }
    let compat = check_compatibility(larger, spec);
    if !compat.compatible() {
        return Err(Error::Incompatible {
            violations: compat.violations.len(),
        });
    }
    let report = check_all(larger, spec)?;
    if !report.confluent {
        return Err(Error::NotConfluent {
            unresolvable: report.unresolvable().count(),
        });
    }

    let witnesses: Vec<usize> = larger
        .rules()
        .iter()
        .enumerate()
        .filter(|(_, r)| !smaller.is_reducible_word(&r.lhs))
        .map(|(i, _)| i)
        .collect();
    let per_rule = enumerate_ambiguities(larger).is_empty().then(|| {
        let rules = larger.rules();
        (0..rules.len())
            .map(|i| {
                !rules
                    .iter()
                    .enumerate()
                    .any(|(j, s)| j != i && rules[i].lhs.contains(&s.lhs))
            })
            .collect()
    });
    Ok(IndependenceVerdict {
        strict: !witnesses.is_empty(),
        witnesses,
        per_rule,
    })
}
