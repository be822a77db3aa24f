//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use diamond_lemma::ambiguity::{
    check_all, check_resolvable, check_resolvable_relative, enumerate_ambiguities, enumerate_inclusions,
    simplify_system, AmbiguityKind,
};
use diamond_lemma::arw::{NewmanVerdict, OrientedGraph};
use diamond_lemma::cli::{self, exit};
use diamond_lemma::presentation::Presentation;
use diamond_lemma::quotient::QuotientRing;
use diamond_lemma::rewrite::DEFAULT_ORACLE_BUDGET;
use diamond_lemma::{Alphabet, Field, OrderingSpec, Polynomial, ReductionSystem, Rule, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(took)
}

fn check_exit(file: &str) -> i32 {
    let path = corpus_path(file);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    cli::run(
        ["diamond".as_ref(), "check".as_ref(), path.as_os_str()],
        &mut out,
        &mut err,
    )
}

fn basis_counts(p: &Presentation, max: u64) -> Vec<u64> {
    let words = diamond_lemma::quotient::basis_words(&p.system, &p.ordering, max);
    (0..=max)
        .map(|d| words.iter().filter(|w| p.ordering.degree(w) == d).count() as u64)
        .collect()
}

/// Words of length `d` over `n` letters whose letters never decrease.
fn brute_sorted_words(n: usize, d: usize) -> u64 {
    words_up_to_len(n, d)
        .into_iter()
        .filter(|w| w.len() == d && w.letters().windows(2).all(|p| p[0] <= p[1]))
        .count() as u64
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let c3 = load("commuting3.pres");
    let r3 = check_all(&c3.system, &c3.ordering).map_err(|e| e.to_string())?;
    ensure!(
        r3.overlaps() == 1 && r3.inclusions() == 0 && r3.confluent,
        "n=3: {} overlaps, {} inclusions",
        r3.overlaps(),
        r3.inclusions()
    );
    let c4 = load("commuting4.pres");
    let r4 = check_all(&c4.system, &c4.ordering).map_err(|e| e.to_string())?;
    ensure!(
        r4.overlaps() == 4 && r4.inclusions() == 0,
        "n=4: {} overlaps, {} inclusions",
        r4.overlaps(),
        r4.inclusions()
    );
    ensure!(
        r4.verdicts.iter().all(|v| v.resolvable),
        "n=4 has an unresolvable overlap"
    );
    ensure!(check_exit("commuting4.pres") == exit::OK, "check exit code");
    let counts = basis_counts(&c4, 5);
    let closed: Vec<u64> = (0..=5).map(|d| binomial(4 + d - 1, d)).collect();
    let brute: Vec<u64> = (0..=5).map(|d| brute_sorted_words(4, d as usize)).collect();
    ensure!(
        counts == closed && counts == brute && counts == [1, 4, 10, 20, 35, 56],
        "basis counts {counts:?}"
    );
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "n=3: 1 overlap; n=4: 4 overlaps; counts {counts:?}; {took:?}"
    ))
}

/// Operators `sum c x^i D^j` with `D = d/dx`, keyed by `(i, j)`.
type Operator = BTreeMap<(usize, usize), i64>;

/// Right multiplication by `x` (letter 0) or `D` (letter 1), using
/// `D^j x = x D^j + j D^(j-1)`.
fn op_times(op: &Operator, letter: u32) -> Operator {
    let mut out = Operator::new();
    for (&(i, j), &c) in op {
        if letter == 1 {
            *out.entry((i, j + 1)).or_default() += c;
        } else {
            *out.entry((i + 1, j)).or_default() += c;
            if j > 0 {
                *out.entry((i, j - 1)).or_default() += c * j as i64;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn weyl_oracle(w: &Word) -> Operator {
    let mut op = Operator::from([((0, 0), 1)]);
    for &l in w.letters() {
        op = op_times(&op, l);
    }
    op
}

fn as_operator(p: &Polynomial) -> Result<Operator, String> {
    let mut out = Operator::new();
    for (w, c) in p.terms() {
        let l = w.letters();
        let i = l.iter().take_while(|&&x| x == 0).count();
        ensure!(l[i..].iter().all(|&x| x == 1), "{w:?} is not of the form x^i y^j");
        let value: i64 = c
            .to_string()
            .parse()
            .map_err(|_| format!("non-integer coefficient {c}"))?;
        out.insert((i, l.len() - i), value);
    }
    Ok(out)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let p = load("weyl.pres");
    let r = check_all(&p.system, &p.ordering).map_err(|e| e.to_string())?;
    ensure!(
        r.verdicts.is_empty() && r.confluent,
        "{} ambiguities",
        r.verdicts.len()
    );
    let yxyx = p.parse_expr("y*x*y*x").unwrap();
    let nf = p
        .system
        .normal_form(&yxyx, &p.ordering)
        .map_err(|e| e.to_string())?
        .value;
    ensure!(
        p.show_poly(&nf) == "x*x*y*y + 3*x*y + 1",
        "nf(yxyx) = {}",
        p.show_poly(&nf)
    );
    let expected = Operator::from([((2, 2), 1), ((1, 1), 3), ((0, 0), 1)]);
    ensure!(as_operator(&nf)? == expected, "differential operator mismatch");
    for w in words_up_to_len(2, 6) {
        let nf = p
            .system
            .normal_form(&Polynomial::word(p.field, w.clone()), &p.ordering)
            .unwrap()
            .value;
        ensure!(as_operator(&nf)? == weyl_oracle(&w), "operator mismatch on {w:?}");
    }
    let counts = basis_counts(&p, 6);
    ensure!(
        counts == (0..=6).map(|d| d + 1).collect::<Vec<_>>(),
        "basis counts {counts:?}"
    );
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "0 ambiguities; nf(yxyx) = {}; operator oracle agrees on 127 words; {took:?}",
        p.show_poly(&nf)
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let p = load("sl2.pres");
    let r = check_all(&p.system, &p.ordering).map_err(|e| e.to_string())?;
    ensure!(r.confluent, "not confluent");
    let words: Vec<String> = r
        .verdicts
        .iter()
        .map(|v| p.show_word(&v.ambiguity.word()))
        .collect();
    ensure!(words == ["h*f*e"], "ambiguity words {words:?}");
    let counts = basis_counts(&p, 4);
    let closed: Vec<u64> = (0..=4).map(|d| binomial(d + 2, 2)).collect();
    let brute: Vec<u64> = (0..=4).map(|d| brute_sorted_words(3, d as usize)).collect();
    ensure!(
        counts == closed && counts == brute && counts == [1, 3, 6, 10, 15],
        "basis counts {counts:?}"
    );
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("overlap at hfe resolves; counts {counts:?}; {took:?}"))
}

fn criterion_4() -> Outcome {
    let cases = [
        ("duplicate_lhs.pres", AmbiguityKind::Inclusion, "a*b", ("a", "b")),
        (
            "self_overlap.pres",
            AmbiguityKind::Overlap,
            "a*b*a*b*a",
            ("b*b*a", "a*b*b"),
        ),
    ];
    let mut notes = Vec::new();
    for (file, kind, word, (left, right)) in cases {
        let p = load(file);
        let r = check_all(&p.system, &p.ordering).map_err(|e| e.to_string())?;
        ensure!(
            !r.confluent && r.verdicts.len() == 1,
            "{file}: {} ambiguities",
            r.verdicts.len()
        );
        let v = &r.verdicts[0];
        ensure!(v.ambiguity.kind == kind && !v.resolvable, "{file}: wrong verdict");
        ensure!(
            p.show_word(&v.ambiguity.word()) == word,
            "{file}: D = {}",
            p.show_word(&v.ambiguity.word())
        );
        let branches = (p.show_poly(&v.nf_left), p.show_poly(&v.nf_right));
        ensure!(
            branches == (left.to_string(), right.to_string()),
            "{file}: branches {branches:?}"
        );
        let d = Polynomial::word(p.field, v.ambiguity.word());
        let oracle = p
            .system
            .all_normal_forms(&d, DEFAULT_ORACLE_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure!(
            oracle.normal_forms.len() >= 2,
            "{file}: oracle found {}",
            oracle.normal_forms.len()
        );
        ensure!(check_exit(file) == exit::NEGATIVE, "{file}: check exit code");
        notes.push(format!("{file}: {} normal forms", oracle.normal_forms.len()));
    }
    Ok(notes.join("; "))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let systems = [
        load("weyl.pres"),
        load("sl2.pres"),
        load("self_overlap.pres"),
        load_over("weyl.pres", "F 7"),
        load_over("sl2.pres", "F 7"),
        load("idempotent_f7.pres"),
    ];
    let mut nontrivial = 0;
    for k in 0..500 {
        let p = &systems[k % systems.len()];
        let n = p.alphabet.len();
        let occ = random_occurrence(&mut rng, n, p.system.rules().len(), 2);
        let mut a = random_poly(&mut rng, p.field, n, 4, 5);
        let target = p.system.rule(occ.rule).lhs.sandwich(&occ.prefix, &occ.suffix);
        if rng.gen_bool(0.7) {
            let c = random_coeff(&mut rng, p.field);
            a = a.add(&Polynomial::term(c, target.clone())).unwrap();
        }
        let lambda = a.coeff(&target);
        if !lambda.is_zero() {
            nontrivial += 1;
        }
        let relation = p
            .system
            .rule(occ.rule)
            .relation()
            .sandwich(&occ.prefix, &occ.suffix);
        let expected = a.sub(&relation.scale(&lambda)).unwrap();
        let got = p.system.apply_reduction(&a, &occ).map_err(|e| e.to_string())?;
        ensure!(
            got == expected,
            "pair {k}: {} vs {}",
            p.show_poly(&got),
            p.show_poly(&expected)
        );
    }
    ensure!(
        nontrivial >= 250,
        "only {nontrivial} pairs with nonzero coefficient"
    );
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "500 pairs over Q and F 7, {nontrivial} with nonzero coefficient; {took:?}"
    ))
}

fn confluent_corpus() -> Vec<(&'static str, Presentation)> {
    [
        "weyl.pres",
        "commuting3.pres",
        "commuting4.pres",
        "sl2.pres",
        "idempotent_f7.pres",
        "free_xy.pres",
    ]
    .into_iter()
    .map(|f| (f, load(f)))
    .collect()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let rings: Vec<_> = confluent_corpus()
        .into_iter()
        .map(|(f, p)| {
            (
                f,
                QuotientRing::new(p.system.clone(), p.ordering.clone()).unwrap(),
                p,
            )
        })
        .collect();
    let pick = |rng: &mut ChaCha8Rng| rng.gen_range(0..rings.len());
    let nf = |ring: &QuotientRing, a: &Polynomial| ring.reduce(a).unwrap();

    for k in 0..200 {
        let (file, ring, p) = &rings[pick(&mut rng)];
        let n = p.alphabet.len();
        let a = random_poly(&mut rng, p.field, n, 4, 4);
        let b = random_poly(&mut rng, p.field, n, 4, 4);
        let (alpha, beta) = (random_coeff(&mut rng, p.field), random_coeff(&mut rng, p.field));
        let combo = a.scale(&alpha).add(&b.scale(&beta)).unwrap();
        let lhs = nf(ring, &combo);
        let rhs = nf(ring, &a)
            .scale(&alpha)
            .add(&nf(ring, &b).scale(&beta))
            .unwrap();
        ensure!(lhs == rhs, "linearity {k} on {file}");
        ensure!(nf(ring, &lhs) == lhs, "idempotence {k} on {file}");
    }
    for k in 0..200 {
        let (file, ring, p) = &rings[pick(&mut rng)];
        let a = random_poly(&mut rng, p.field, p.alphabet.len(), 5, 5);
        let rest = a.sub(&nf(ring, &a)).unwrap();
        ensure!(ring.ideal_member(&rest).unwrap(), "decomposition {k} on {file}");
    }
    let mut equal = 0;
    for k in 0..100 {
        let (file, ring, p) = &rings[pick(&mut rng)];
        let n = p.alphabet.len();
        let a = random_poly(&mut rng, p.field, n, 4, 4);
        let b = if rng.gen_bool(0.5) {
            // a plus an element of the ideal
            let rule = rng.gen_range(0..p.system.rules().len().max(1));
            match p.system.rules().get(rule) {
                Some(r) => {
                    let gen = r
                        .relation()
                        .sandwich(&random_word(&mut rng, n, 2), &random_word(&mut rng, n, 2));
                    a.add(&gen.scale(&random_coeff(&mut rng, p.field))).unwrap()
                }
                None => a.clone(),
            }
        } else {
            random_poly(&mut rng, p.field, n, 4, 4)
        };
        let same = nf(ring, &a) == nf(ring, &b);
        equal += same as usize;
        ensure!(
            same == ring.ideal_member(&a.sub(&b).unwrap()).unwrap(),
            "membership {k} on {file}"
        );
    }
    Ok(format!(
        "linearity and idempotence on 200 pairs, 200 decompositions, 100 membership pairs ({equal} equal)"
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let files = [
        "weyl.pres",
        "commuting3.pres",
        "commuting4.pres",
        "sl2.pres",
        "duplicate_lhs.pres",
        "self_overlap.pres",
        "idempotent_f7.pres",
    ];
    let (mut total, mut certified) = (0, 0);
    for file in files {
        let p = load(file);
        for amb in enumerate_ambiguities(&p.system) {
            let plain = check_resolvable(&p.system, &p.ordering, &amb).map_err(|e| e.to_string())?;
            let rel = check_resolvable_relative(&p.system, &p.ordering, &amb).map_err(|e| e.to_string())?;
            ensure!(
                plain.resolvable == rel.resolvable,
                "{file}: disagreement at {}",
                p.show_word(&amb.word())
            );
            if let Some(cert) = &rel.certificate {
                let diff = plain.branch_left.sub(&plain.branch_right).unwrap();
                ensure!(
                    cert.expand(&p.system) == diff,
                    "{file}: certificate does not expand"
                );
                certified += 1;
            }
            ensure!(
                rel.resolvable == rel.certificate.is_some(),
                "{file}: certificate missing"
            );
            total += 1;
        }
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{total} ambiguities agree, {certified} certificates expand exactly; {took:?}"
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (file, p) in confluent_corpus() {
        let mut max_visited = 0;
        let words = words_up_to_len(p.alphabet.len(), 6);
        for w in &words {
            let a = Polynomial::word(p.field, w.clone());
            let nf = p.system.normal_form(&a, &p.ordering).unwrap().value;
            let oracle = p
                .system
                .all_normal_forms(&a, DEFAULT_ORACLE_BUDGET)
                .map_err(|e| format!("{file} at {}: {e}", p.show_word(w)))?;
            ensure!(
                oracle.normal_forms == BTreeSet::from([nf]),
                "{file}: oracle disagrees at {}",
                p.show_word(w)
            );
            max_visited = max_visited.max(oracle.visited);
        }
        notes.push(format!("{file} {} words (max {max_visited} states)", words.len()));
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("{}; {took:?}", notes.join(", ")))
}

fn random_system(rng: &mut ChaCha8Rng, alphabet: &Alphabet, spec: &OrderingSpec) -> ReductionSystem {
    let field = Field::Rationals;
    let n = alphabet.len();
    let mut rules = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let lhs = loop {
            let w = random_word(rng, n, 3);
            if !w.is_one() {
                break w;
            }
        };
        let rhs = random_poly(rng, field, n, 2, 3);
        let rhs = Polynomial::from_terms(
            field,
            rhs.terms()
                .filter(|(w, _)| spec.less(w, &lhs))
                .map(|(w, c)| (c.clone(), w.clone())),
        )
        .unwrap();
        rules.push(Rule { lhs, rhs });
    }
    for _ in 0..rng.gen_range(1..=2) {
        let base = rules[rng.gen_range(0..rules.len())].lhs.clone();
        let lhs = base.sandwich(&random_word(rng, n, 2), &random_word(rng, n, 2));
        let rhs = Polynomial::constant(random_coeff(rng, field));
        let at = rng.gen_range(0..=rules.len());
        rules.insert(at, Rule { lhs, rhs });
    }
    ReductionSystem::new(alphabet.clone(), field, rules).unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
    let spec = OrderingSpec::from_alphabet(&alphabet);
    let words = words_up_to_len(3, 6);
    let (mut injected, mut dropped) = (0, 0);
    for k in 0..50 {
        let s = random_system(&mut rng, &alphabet, &spec);
        let before = enumerate_inclusions(&s).len();
        ensure!(before > 0, "system {k} has no inclusion");
        let t = simplify_system(&s).map_err(|e| e.to_string())?;
        ensure!(enumerate_inclusions(&t).is_empty(), "system {k} keeps inclusions");
        ensure!(
            t.rules().iter().all(|r| s.rules().contains(r)),
            "system {k}: new rule appeared"
        );
        for w in words.iter().filter(|w| s.is_reducible_word(w)) {
            ensure!(t.is_reducible_word(w), "system {k}: {w:?} became irreducible");
        }
        injected += before;
        dropped += s.rules().len() - t.rules().len();
    }
    Ok(format!(
        "50 systems, {injected} inclusions removed by dropping {dropped} rules"
    ))
}

fn reach(g: &OrientedGraph<u32>, from: u32) -> Vec<u32> {
    let mut seen = vec![from];
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for &s in g.successors(&v) {
            if !seen.contains(&s) {
                seen.push(s);
                stack.push(s);
            }
        }
    }
    seen
}

fn random_diamond_dag(rng: &mut ChaCha8Rng) -> OrientedGraph<u32> {
    let n = rng.gen_range(1..=12u32);
    let mut g = OrientedGraph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.25) {
                g.add_edge(u, v);
            }
        }
    }
    // Join the sinks below a failing fork until every fork closes.
    while let Err(f) = g.check_local_diamond() {
        let sink = |x: u32| {
            *reach(&g, x)
                .iter()
                .find(|&&v| g.successors(&v).is_empty())
                .unwrap()
        };
        let (l, r) = (sink(f.left), sink(f.right));
        g.add_edge(l, r);
    }
    g
}

/// Endpoints of every maximal oriented path, starting anywhere in `vertices`.
fn path_ends(g: &OrientedGraph<u32>, vertices: &[u32]) -> BTreeSet<u32> {
    fn walk(g: &OrientedGraph<u32>, v: u32, ends: &mut BTreeSet<u32>) {
        let next = g.successors(&v);
        if next.is_empty() {
            ends.insert(v);
        }
        for &s in next {
            walk(g, s, ends);
        }
    }
    let mut ends = BTreeSet::new();
    for &v in vertices {
        walk(g, v, &mut ends);
    }
    ends
}

fn weak_components(g: &OrientedGraph<u32>) -> Vec<BTreeSet<u32>> {
    let mut parent: HashMap<u32, u32> = g.vertices().map(|&v| (v, v)).collect();
    fn find(p: &mut HashMap<u32, u32>, v: u32) -> u32 {
        let up = p[&v];
        if up == v {
            return v;
        }
        let root = find(p, up);
        p.insert(v, root);
        root
    }
    for (u, v) in g.edges().map(|(u, v)| (*u, *v)).collect::<Vec<_>>() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent.insert(ru, rv);
    }
    let mut groups: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for v in g.vertices().copied().collect::<Vec<_>>() {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    groups.into_values().collect()
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut components = 0;
    for k in 0..100 {
        let g = random_diamond_dag(&mut rng);
        let NewmanVerdict::UniqueSinks(found) = g.newman_verdict() else {
            return Err(format!("graph {k}: hypotheses reported failing"));
        };
        let expected = weak_components(&g);
        ensure!(
            found.len() == expected.len(),
            "graph {k}: {} components, expected {}",
            found.len(),
            expected.len()
        );
        for c in &found {
            let members: BTreeSet<u32> = c.vertices.iter().copied().collect();
            ensure!(expected.contains(&members), "graph {k}: component {members:?}");
            let ends = path_ends(&g, &c.vertices);
            ensure!(
                ends == BTreeSet::from([c.sink]),
                "graph {k}: path ends {ends:?}, sink {}",
                c.sink
            );
        }
        components += found.len();
    }
    let fork = OrientedGraph::from_edges([("a", "b"), ("a", "c")]);
    match fork.newman_verdict() {
        NewmanVerdict::DiamondFails(f) => ensure!(f.vertex == "a", "fork fails at {}", f.vertex),
        other => return Err(format!("fork verdict {other:?}")),
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "100 graphs, {components} components each with one sink; fork fails at a; {took:?}"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("commuting variables", criterion_1),
        ("Weyl algebra", criterion_2),
        ("sl2 enveloping algebra", criterion_3),
        ("non-confluence detection", criterion_4),
        ("reduction identity", criterion_5),
        ("normal forms in the quotient", criterion_6),
        ("plain vs relative resolvability", criterion_7),
        ("oracle equivalence", criterion_8),
        ("inclusion simplification", criterion_9),
        ("Newman verdicts", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let default_hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let label = format!("criterion {:>2} {name}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(note) => println!("PASS {label}: {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {label}: {why}");
            }
        }
    }
    panic::set_hook(default_hook);
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
