//! Reduction systems and the reductions they induce on the free algebra.
//!
//! A rule `W -> f` gives, for every pair of words `A`, `B`, the linear map
//! that sends the monomial `A W B` to `A f B` and fixes every other monomial.
//! [`ReductionSystem::normal_form`] applies these maps with a fixed strategy
//! under a compatible ordering; [`ReductionSystem::all_normal_forms`]
//! explores every reduction sequence and is used as an independent oracle.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::rc::Rc;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Occurrence, Polynomial, Word};
use crate::order::{check_compatibility, OrderingSpec};

/// Default number of states [`ReductionSystem::all_normal_forms`] may visit.
pub const DEFAULT_ORACLE_BUDGET: usize = 10_000;

/// A rule `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Polynomial,
}

impl Rule {
    /// `lhs - rhs`, the generator of the ideal contributed by this rule.
    pub fn relation(&self) -> Polynomial {
        Polynomial::word(self.rhs.field(), self.lhs.clone())
            .sub(&self.rhs)
            .expect("rule sides share a field")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSystem {
    alphabet: Alphabet,
    field: Field,
    rules: Vec<Rule>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Fatal,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub rules: Vec<usize>,
    pub message: String,
}

/// One nontrivial reduction: `coefficient * prefix W suffix` was rewritten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub occurrence: Occurrence,
    pub coefficient: Coeff,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub value: Polynomial,
    pub trace: Vec<ReductionStep>,
}

/// Result of the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    /// Every irreducible polynomial reachable from the input.
    pub normal_forms: BTreeSet<Polynomial>,
    /// Number of distinct polynomials visited.
    pub visited: usize,
}

impl OracleOutcome {
    pub fn is_unique(&self) -> bool {
        self.normal_forms.len() == 1
    }
}

impl ReductionSystem {
    /// Checks that every word uses the alphabet and every polynomial the field.
    /// Semantic problems (empty left-hand sides, ...) are reported by
    /// [`validate`](Self::validate).
    pub fn new(alphabet: Alphabet, field: Field, rules: Vec<Rule>) -> Result<Self> {
        for rule in &rules {
            alphabet.check_word(&rule.lhs)?;
            for w in rule.rhs.monomials() {
                alphabet.check_word(w)?;
            }
            if rule.rhs.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: rule.rhs.field().to_string(),
                });
            }
        }
        Ok(ReductionSystem {
            alphabet,
            field,
            rules,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, index: usize) -> &Rule {
        &self.rules[index]
    }

    /// The same alphabet and field with a different rule list.
    pub fn with_rules(&self, rules: Vec<Rule>) -> Result<Self> {
        Self::new(self.alphabet.clone(), self.field, rules)
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for (i, rule) in self.rules.iter().enumerate() {
            if rule.lhs.is_one() {
                out.push(Diagnostic {
                    severity: Severity::Fatal,
                    rules: vec![i],
                    message: format!("rule {i} has the empty word as its left-hand side"),
                });
            }
        }
        for (i, r) in self.rules.iter().enumerate() {
            for (j, s) in self.rules.iter().enumerate().skip(i + 1) {
                if r.lhs == s.lhs && !r.lhs.is_one() {
                    out.push(Diagnostic {
                        severity: Severity::Warning,
                        rules: vec![i, j],
                        message: format!("rules {i} and {j} share a left-hand side"),
                    });
                }
            }
        }
        for (i, r) in self.rules.iter().enumerate() {
            for (j, s) in self.rules.iter().enumerate() {
                if i != j && !s.lhs.is_one() && r.lhs.len() > s.lhs.len() && r.lhs.contains(&s.lhs) {
                    out.push(Diagnostic {
                        severity: Severity::Warning,
                        rules: vec![i, j],
                        message: format!("left-hand side of rule {i} properly contains that of rule {j}"),
                    });
                }
            }
        }
        out
    }

    /// Errors out on the first fatal diagnostic.
    pub fn ensure_valid(&self) -> Result<()> {
        match self
            .validate()
            .into_iter()
            .find(|d| d.severity == Severity::Fatal)
        {
            Some(d) => Err(Error::InvalidSystem(d.message)),
            None => Ok(()),
        }
    }

    fn check_poly(&self, a: &Polynomial) -> Result<()> {
        if a.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: a.field().to_string(),
            });
        }
        a.monomials().try_for_each(|w| self.alphabet.check_word(w))
    }

    /// Applies the reduction at `occ`: `a - lambda * A (W - f) B`, where
    /// `lambda` is the coefficient of `A W B` in `a`.
    pub fn apply_reduction(&self, a: &Polynomial, occ: &Occurrence) -> Result<Polynomial> {
        self.check_poly(a)?;
        if occ.rule >= self.rules.len() {
            return Err(Error::Precondition(format!(
                "rule index {} out of range",
                occ.rule
            )));
        }
        self.alphabet.check_word(&occ.prefix)?;
        self.alphabet.check_word(&occ.suffix)?;
        Ok(self.reduce_unchecked(a, occ).0)
    }

    fn reduce_unchecked(&self, a: &Polynomial, occ: &Occurrence) -> (Polynomial, Coeff) {
        let rule = &self.rules[occ.rule];
        let site = rule.lhs.sandwich(&occ.prefix, &occ.suffix);
        let lambda = a.coeff(&site);
        if lambda.is_zero() {
            return (a.clone(), lambda);
        }
        let mut out = a.clone();
        out.add_term(&lambda.neg(), site);
        for (w, c) in rule.rhs.terms() {
            out.add_term(&lambda.mul(c), w.sandwich(&occ.prefix, &occ.suffix));
        }
        (out, lambda)
    }

    /// Occurrences of left-hand sides inside a single word, ordered by
    /// prefix length and then rule index.
    pub fn word_sites(&self, w: &Word) -> Vec<Occurrence> {
        let mut sites: Vec<(usize, usize)> = self
            .rules
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.lhs.is_one())
            .flat_map(|(i, r)| w.match_offsets(&r.lhs).map(move |off| (off, i)))
            .collect();
        sites.sort_unstable();
        sites
            .into_iter()
            .map(|(off, i)| {
                let end = off + self.rules[i].lhs.len();
                Occurrence::new(w.slice(0..off), i, w.slice(end..w.len()))
            })
            .collect()
    }

    pub fn is_reducible_word(&self, w: &Word) -> bool {
        self.rules.iter().any(|r| !r.lhs.is_one() && w.contains(&r.lhs))
    }

    /// Every reduction acting nontrivially on `a`.
    pub fn reducible_sites(&self, a: &Polynomial) -> Vec<Occurrence> {
        a.monomials().flat_map(|w| self.word_sites(w)).collect()
    }

    pub fn is_irreducible(&self, a: &Polynomial) -> bool {
        a.monomials().all(|w| !self.is_reducible_word(w))
    }

    /// Reduces `a` to an irreducible polynomial.
    ///
    /// Each step rewrites the largest reducible monomial at its leftmost
    /// site, choosing the lowest rule index among rules matching there.
    /// Refuses to run unless the system is compatible with `spec`, which is
    /// what guarantees termination.
    pub fn normal_form(&self, a: &Polynomial, spec: &OrderingSpec) -> Result<NormalForm> {
        self.check_poly(a)?;
        self.ensure_valid()?;
        let report = check_compatibility(self, spec);
        if !report.compatible() {
            return Err(Error::Incompatible {
                violations: report.violations.len(),
            });
        }
        Ok(self.normal_form_unchecked(a, spec))
    }

    /// [`normal_form`](Self::normal_form) without the precondition checks.
    pub(crate) fn normal_form_unchecked(&self, a: &Polynomial, spec: &OrderingSpec) -> NormalForm {
        let mut value = a.clone();
        let mut trace = Vec::new();
        loop {
            let target = value
                .monomials()
                .filter(|w| self.is_reducible_word(w))
                .max_by(|u, v| spec.compare(u, v))
                .cloned();
            let Some(target) = target else {
                return NormalForm { value, trace };
            };
            let occ = self
                .word_sites(&target)
                .into_iter()
                .next()
                .expect("reducible word has a site");
            let (next, coefficient) = self.reduce_unchecked(&value, &occ);
            trace.push(ReductionStep {
                occurrence: occ,
                coefficient,
            });
            value = next;
        }
    }

    /// Replays a trace from `input`, checking that each step acted with the
    /// recorded coefficient.
    pub fn replay(&self, input: &Polynomial, trace: &[ReductionStep]) -> Result<Polynomial> {
        let mut value = input.clone();
        for (i, step) in trace.iter().enumerate() {
            let site = self
                .rules
                .get(step.occurrence.rule)
                .ok_or_else(|| Error::Precondition(format!("step {i}: unknown rule")))?
                .lhs
                .sandwich(&step.occurrence.prefix, &step.occurrence.suffix);
            if value.coeff(&site) != step.coefficient {
                return Err(Error::Precondition(format!(
                    "step {i}: coefficient does not match the trace"
                )));
            }
            value = self.apply_reduction(&value, &step.occurrence)?;
        }
        Ok(value)
    }

    /// One line per step: `A | rule | B | coefficient`.
    pub fn format_trace(&self, trace: &[ReductionStep]) -> String {
        let mut out = String::new();
        for step in trace {
            let _ = writeln!(
                out,
                "{} | {} | {} | {}",
                self.alphabet.display_word(&step.occurrence.prefix),
                step.occurrence.rule,
                self.alphabet.display_word(&step.occurrence.suffix),
                step.coefficient
            );
        }
        out
    }

    /// Explores every sequence of nontrivial reductions from `a` and collects
    /// the irreducible end points. Needs no ordering; `budget` bounds the
    /// number of distinct polynomials visited.
    ///
    /// When the words reachable from `a` form an acyclic graph, every
    /// polynomial over them is reduction-finite, and a polynomial whose
    /// monomials each have a single normal form has exactly one normal form,
    /// the corresponding linear combination. Such polynomials are settled
    /// without enumerating their reduction orders; every other state is
    /// expanded at all of its sites. With a cycle among the reachable words
    /// the search falls back to plain exploration of polynomial states.
    pub fn all_normal_forms(&self, a: &Polynomial, budget: usize) -> Result<OracleOutcome> {
        self.check_poly(a)?;
        self.ensure_valid()?;
        if self.word_graph_is_acyclic(a, budget)? {
            let mut memo = OracleMemo::default();
            let normal_forms = self.poly_normal_forms(a, budget, &mut memo)?;
            Ok(OracleOutcome {
                normal_forms,
                visited: memo.len(),
            })
        } else {
            self.search_states(a, budget)
        }
    }

    /// Whether no word reachable from `a` by rewriting reaches itself again.
    fn word_graph_is_acyclic(&self, a: &Polynomial, budget: usize) -> Result<bool> {
        // 1 = on the current path, 2 = finished.
        let mut state: HashMap<Word, u8> = HashMap::new();
        for root in a.monomials() {
            if state.contains_key(root) {
                continue;
            }
            let mut stack = vec![(root.clone(), self.children(root))];
            state.insert(root.clone(), 1);
            while let Some((_, pending)) = stack.last_mut() {
                match pending.pop() {
                    Some(child) => match state.get(&child) {
                        Some(1) => return Ok(false),
                        Some(_) => {}
                        None => {
                            if state.len() >= budget {
                                return Err(Error::BudgetExhausted { budget });
                            }
                            state.insert(child.clone(), 1);
                            let next = self.children(&child);
                            stack.push((child, next));
                        }
                    },
                    None => {
                        let (w, _) = stack.pop().expect("nonempty");
                        state.insert(w, 2);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Monomials of every one-step reduct of `w`.
    fn children(&self, w: &Word) -> Vec<Word> {
        let mut out = BTreeSet::new();
        for occ in self.word_sites(w) {
            for v in self.rules[occ.rule].rhs.monomials() {
                out.insert(v.sandwich(&occ.prefix, &occ.suffix));
            }
        }
        out.into_iter().collect()
    }

    fn word_normal_forms(
        &self,
        w: &Word,
        budget: usize,
        memo: &mut OracleMemo,
    ) -> Result<Rc<BTreeSet<Polynomial>>> {
        if let Some(found) = memo.words.get(w) {
            return Ok(found.clone());
        }
        let sites = self.word_sites(w);
        let mut out = BTreeSet::new();
        if sites.is_empty() {
            out.insert(Polynomial::word(self.field, w.clone()));
        }
        for occ in &sites {
            let reduct = self.rules[occ.rule].rhs.sandwich(&occ.prefix, &occ.suffix);
            out.extend(self.poly_normal_forms(&reduct, budget, memo)?);
        }
        memo.charge(budget)?;
        let out = Rc::new(out);
        memo.words.insert(w.clone(), out.clone());
        Ok(out)
    }

    fn poly_normal_forms(
        &self,
        p: &Polynomial,
        budget: usize,
        memo: &mut OracleMemo,
    ) -> Result<BTreeSet<Polynomial>> {
        if let Some(found) = memo.polys.get(p) {
            return Ok(found.clone());
        }
        let mut combined = Some(Polynomial::zero(self.field));
        for (w, c) in p.terms() {
            let forms = self.word_normal_forms(w, budget, memo)?;
            combined = match (combined, forms.len()) {
                (Some(acc), 1) => {
                    let nf = forms.iter().next().expect("one element");
                    Some(Polynomial::combine(c, nf, &acc).expect("same field"))
                }
                _ => None,
            };
        }
        let out = match combined {
            Some(value) => BTreeSet::from([value]),
            None => {
                let mut out = BTreeSet::new();
                for occ in self.reducible_sites(p) {
                    let next = self.reduce_unchecked(p, &occ).0;
                    out.extend(self.poly_normal_forms(&next, budget, memo)?);
                }
                out
            }
        };
        memo.charge(budget)?;
        memo.polys.insert(p.clone(), out.clone());
        Ok(out)
    }

    /// Depth-first search over polynomial states with a visited set.
    fn search_states(&self, a: &Polynomial, budget: usize) -> Result<OracleOutcome> {
        let mut visited: HashSet<Polynomial> = HashSet::new();
        let mut normal_forms = BTreeSet::new();
        let mut stack = vec![a.clone()];
        visited.insert(a.clone());
        while let Some(p) = stack.pop() {
            let sites = self.reducible_sites(&p);
            if sites.is_empty() {
                normal_forms.insert(p);
                continue;
            }
            for occ in &sites {
                let (next, _) = self.reduce_unchecked(&p, occ);
                if visited.contains(&next) {
                    continue;
                }
                if visited.len() >= budget {
                    return Err(Error::BudgetExhausted { budget });
                }
                visited.insert(next.clone());
                stack.push(next);
            }
        }
        Ok(OracleOutcome {
            normal_forms,
            visited: visited.len(),
        })
    }
}

#[derive(Default)]
struct OracleMemo {
    words: HashMap<Word, Rc<BTreeSet<Polynomial>>>,
    polys: HashMap<Polynomial, BTreeSet<Polynomial>>,
}

impl OracleMemo {
    fn len(&self) -> usize {
        self.words.len() + self.polys.len()
    }

    fn charge(&self, budget: usize) -> Result<()> {
        if self.len() >= budget {
            Err(Error::BudgetExhausted { budget })
        } else {
            Ok(())
        }
    }
}
