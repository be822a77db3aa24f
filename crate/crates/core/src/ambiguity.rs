//! Critical-pair analysis.
//!
//! An overlap ambiguity is a word `ABC` where `W_sigma = AB` and
//! `W_tau = BC`; an inclusion ambiguity is a word `ABC = W_tau` containing
//! `W_sigma = B`. A system compatible with a DCC ordering is confluent
//! exactly when every ambiguity resolves, and since any fixed reduction
//! strategy then computes the unique normal form, resolvability is decided
//! by normalizing both one-step branches with [`ReductionSystem::normal_form`].

use std::collections::{BTreeMap, HashMap};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::freealg::{Occurrence, Polynomial, Word};
use crate::order::{check_compatibility, CompatibilityReport, OrderingSpec};
use crate::rewrite::ReductionSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

impl AmbiguityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AmbiguityKind::Overlap => "overlap",
            AmbiguityKind::Inclusion => "inclusion",
        }
    }
}

/// The 5-tuple `(sigma, tau, A, B, C)`.
///
/// Overlap: `W_sigma = AB`, `W_tau = BC`, all of `A`, `B`, `C` nonempty.
/// Inclusion: `W_sigma = B`, `W_tau = ABC`, `sigma != tau`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub sigma: usize,
    pub tau: usize,
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

impl Ambiguity {
    /// The ambiguous word `ABC`.
    pub fn word(&self) -> Word {
        self.b.sandwich(&self.a, &self.c)
    }

    /// The two one-step reducts of `ABC`.
    pub fn branches(&self, system: &ReductionSystem) -> (Polynomial, Polynomial) {
        let (fs, ft) = (&system.rule(self.sigma).rhs, &system.rule(self.tau).rhs);
        match self.kind {
            AmbiguityKind::Overlap => (
                fs.sandwich(&Word::one(), &self.c),
                ft.sandwich(&self.a, &Word::one()),
            ),
            AmbiguityKind::Inclusion => (fs.sandwich(&self.a, &self.c), ft.clone()),
        }
    }
}

/// Every overlap, self-overlaps included, ordered by `(sigma, tau, |A|)`.
pub fn enumerate_overlaps(system: &ReductionSystem) -> Vec<Ambiguity> {
    let rules = system.rules();
    let mut out = Vec::new();
    for (sigma, rs) in rules.iter().enumerate() {
        for (tau, rt) in rules.iter().enumerate() {
            let (ws, wt) = (rs.lhs.letters(), rt.lhs.letters());
            let max = ws.len().min(wt.len());
            // B must be a proper nonempty suffix of W_sigma and proper prefix of W_tau.
            for overlap in (1..max).rev() {
                if ws[ws.len() - overlap..] == wt[..overlap] {
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        sigma,
                        tau,
                        a: rs.lhs.slice(0..ws.len() - overlap),
                        b: rs.lhs.slice(ws.len() - overlap..ws.len()),
                        c: rt.lhs.slice(overlap..wt.len()),
                    });
                }
            }
        }
    }
    out
}

/// Every inclusion, one per occurrence of `W_sigma` in `W_tau`. Rules with
/// identical left-hand sides give a single ambiguity with `sigma < tau`.
pub fn enumerate_inclusions(system: &ReductionSystem) -> Vec<Ambiguity> {
    let rules = system.rules();
    let mut out = Vec::new();
    for (tau, rt) in rules.iter().enumerate() {
        for (sigma, rs) in rules.iter().enumerate() {
            if sigma == tau || rs.lhs.is_one() {
                continue;
            }
            if rs.lhs == rt.lhs && sigma > tau {
                continue;
            }
            for (a, c) in rt.lhs.find_occurrences(&rs.lhs).expect("nonempty pattern") {
                out.push(Ambiguity {
                    kind: AmbiguityKind::Inclusion,
                    sigma,
                    tau,
                    a,
                    b: rs.lhs.clone(),
                    c,
                });
            }
        }
    }
    out.sort_by_key(|x| (x.sigma, x.tau, x.a.len()));
    out
}

pub fn enumerate_ambiguities(system: &ReductionSystem) -> Vec<Ambiguity> {
    let mut all = enumerate_overlaps(system);
    all.extend(enumerate_inclusions(system));
    all
}

/// Outcome of normalizing both branches of one ambiguity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbiguityVerdict {
    pub ambiguity: Ambiguity,
    pub branch_left: Polynomial,
    pub branch_right: Polynomial,
    pub nf_left: Polynomial,
    pub nf_right: Polynomial,
    pub resolvable: bool,
    /// Filled in when the relative check was requested.
    pub relative: Option<RelativeOutcome>,
}

fn ensure_compatible(system: &ReductionSystem, spec: &OrderingSpec) -> Result<()> {
    system.ensure_valid()?;
    let report = check_compatibility(system, spec);
    if report.compatible() {
        Ok(())
    } else {
        Err(Error::Incompatible {
            violations: report.violations.len(),
        })
    }
}

pub fn check_resolvable(
    system: &ReductionSystem,
    spec: &OrderingSpec,
    amb: &Ambiguity,
) -> Result<AmbiguityVerdict> {
    ensure_compatible(system, spec)?;
    Ok(resolve_unchecked(system, spec, amb))
}

fn resolve_unchecked(system: &ReductionSystem, spec: &OrderingSpec, amb: &Ambiguity) -> AmbiguityVerdict {
    let (branch_left, branch_right) = amb.branches(system);
    let nf_left = system.normal_form_unchecked(&branch_left, spec).value;
    let nf_right = system.normal_form_unchecked(&branch_right, spec).value;
    AmbiguityVerdict {
        ambiguity: amb.clone(),
        resolvable: nf_left == nf_right,
        branch_left,
        branch_right,
        nf_left,
        nf_right,
        relative: None,
    }
}

/// `sum coefficient * prefix (W - f) suffix`, one entry per spanning element used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub terms: Vec<(Coeff, Occurrence)>,
}

impl Certificate {
    pub fn expand(&self, system: &ReductionSystem) -> Polynomial {
        let mut out = Polynomial::zero(system.field());
        for (c, occ) in &self.terms {
            let v = system
                .rule(occ.rule)
                .relation()
                .sandwich(&occ.prefix, &occ.suffix);
            out = Polynomial::combine(c, &v, &out).expect("same field");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeOutcome {
    pub resolvable: bool,
    pub certificate: Option<Certificate>,
    /// Number of spanning elements `B'(W - f)C'` with `B'WC' < ABC`.
    pub span_size: usize,
}

/// Decides whether the branch difference lies in the span of all
/// `B'(W - f)C'` with `B'WC'` strictly below the ambiguous word, by
/// Gaussian elimination over the coefficient field.
pub fn check_resolvable_relative(
    system: &ReductionSystem,
    spec: &OrderingSpec,
    amb: &Ambiguity,
) -> Result<RelativeOutcome> {
    ensure_compatible(system, spec)?;
    Ok(relative_unchecked(system, spec, amb))
}

type Combination = BTreeMap<usize, Coeff>;

fn axpy(alpha: &Coeff, x: &Combination, y: &mut Combination) {
    for (i, c) in x {
        let entry = y.entry(*i).or_insert_with(|| c.field().zero());
        *entry = entry.add(&alpha.mul(c));
        if entry.is_zero() {
            y.remove(i);
        }
    }
}

fn relative_unchecked(system: &ReductionSystem, spec: &OrderingSpec, amb: &Ambiguity) -> RelativeOutcome {
    let d = amb.word();
    let (left, right) = amb.branches(system);
    let target = left.sub(&right).expect("same field");

    let spanning: Vec<Occurrence> = spec
        .words_up_to(spec.degree(&d))
        .into_iter()
        .filter(|w| spec.less(w, &d))
        .flat_map(|w| system.word_sites(&w))
        .collect();
    let vectors: Vec<Polynomial> = spanning
        .iter()
        .map(|occ| {
            system
                .rule(occ.rule)
                .relation()
                .sandwich(&occ.prefix, &occ.suffix)
        })
        .collect();

    // Echelon form keyed by leading word; each pivot is monic in its leading
    // word and remembers which combination of spanning vectors produced it.
    let mut pivots: HashMap<Word, (Polynomial, Combination)> = HashMap::new();
    let reduce = |pivots: &HashMap<Word, (Polynomial, Combination)>,
                  mut v: Polynomial,
                  mut comb: Combination|
     -> (Polynomial, Combination) {
        while let Some(lead) = v.leading_word(spec).cloned() {
            let Some((p, pc)) = pivots.get(&lead) else { break };
            let alpha = v.coeff(&lead).neg();
            v = Polynomial::combine(&alpha, p, &v).expect("same field");
            axpy(&alpha, pc, &mut comb);
        }
        (v, comb)
    };
    for (i, v) in vectors.iter().enumerate() {
        let comb = Combination::from([(i, system.field().one())]);
        let (v, comb) = reduce(&pivots, v.clone(), comb);
        if let Some(lead) = v.leading_word(spec).cloned() {
            let inv = v.coeff(&lead).inv().expect("leading coefficient is nonzero");
            let mut scaled = Combination::new();
            axpy(&inv, &comb, &mut scaled);
            pivots.insert(lead, (v.scale(&inv), scaled));
        }
    }
    let (rest, comb) = reduce(&pivots, target, Combination::new());
    let span_size = spanning.len();
    if !rest.is_zero() {
        return RelativeOutcome {
            resolvable: false,
            certificate: None,
            span_size,
        };
    }
    // target - sum(-coeff * v) = 0, so target = sum(-coeff * v)
    let terms = comb
        .into_iter()
        .map(|(i, c)| (c.neg(), spanning[i].clone()))
        .collect();
    RelativeOutcome {
        resolvable: true,
        certificate: Some(Certificate { terms }),
        span_size,
    }
}

/// Per-ambiguity verdicts together with the global confluence verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub compatibility: CompatibilityReport,
    pub verdicts: Vec<AmbiguityVerdict>,
    /// Compatible and every ambiguity resolvable.
    pub confluent: bool,
}

impl ConfluenceReport {
    pub fn overlaps(&self) -> usize {
        self.count(AmbiguityKind::Overlap)
    }

    pub fn inclusions(&self) -> usize {
        self.count(AmbiguityKind::Inclusion)
    }

    fn count(&self, kind: AmbiguityKind) -> usize {
        self.verdicts.iter().filter(|v| v.ambiguity.kind == kind).count()
    }

    pub fn unresolvable(&self) -> impl Iterator<Item = &AmbiguityVerdict> {
        self.verdicts.iter().filter(|v| !v.resolvable)
    }

    /// Ambiguities on which plain and relative resolvability disagree.
    pub fn disagreements(&self) -> impl Iterator<Item = &AmbiguityVerdict> {
        self.verdicts
            .iter()
            .filter(|v| v.relative.as_ref().is_some_and(|r| r.resolvable != v.resolvable))
    }
}

/// Runs the full confluence check. Fails only for systems with a fatal
/// validation diagnostic; an incompatible system yields a report with no
/// verdicts and `confluent == false`.
pub fn check_all(system: &ReductionSystem, spec: &OrderingSpec) -> Result<ConfluenceReport> {
    check_all_with(system, spec, false)
}

/// [`check_all`], optionally also deciding relative resolvability for every
/// ambiguity.
pub fn check_all_with(
    system: &ReductionSystem,
    spec: &OrderingSpec,
    relative: bool,
) -> Result<ConfluenceReport> {
    system.ensure_valid()?;
    let compatibility = check_compatibility(system, spec);
    if !compatibility.compatible() {
        return Ok(ConfluenceReport {
            compatibility,
            verdicts: Vec::new(),
            confluent: false,
        });
    }
    let ambiguities = enumerate_ambiguities(system);
    let verdicts: Vec<AmbiguityVerdict> = std::thread::scope(|scope| {
        let handles: Vec<_> = ambiguities
            .iter()
            .map(|amb| {
                scope.spawn(move || {
                    let mut v = resolve_unchecked(system, spec, amb);
                    if relative {
                        v.relative = Some(relative_unchecked(system, spec, amb));
                    }
                    v
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verdict worker panicked"))
            .collect()
    });
    let confluent = verdicts.iter().all(|v| v.resolvable);
    Ok(ConfluenceReport {
        compatibility,
        verdicts,
        confluent,
    })
}

/// Drops rules whose left-hand side properly contains another left-hand
/// side, and all but the lowest-indexed rule among equal left-hand sides.
/// The result has no inclusion ambiguities and reduces exactly the words
/// the original system reduces.
pub fn simplify_system(system: &ReductionSystem) -> Result<ReductionSystem> {
    let rules = system.rules();
    let keep = rules
        .iter()
        .enumerate()
        .filter(|(i, r)| {
            !rules.iter().enumerate().any(|(j, s)| {
                !s.lhs.is_one()
                    && ((s.lhs.len() < r.lhs.len() && r.lhs.contains(&s.lhs)) || (j < *i && s.lhs == r.lhs))
            })
        })
        .map(|(_, r)| r.clone())
        .collect();
    let simplified = system.with_rules(keep)?;
    simplified.ensure_valid()?;
    Ok(simplified)
}
