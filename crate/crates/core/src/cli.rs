//! The `diamond` command line.
//!
//! Every subcommand reads a presentation file (except `graph`, which reads an
//! edge list) and prints a report as plain text or, with
//! `--format structured`, as one JSON document.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::ambiguity::{check_all_with, enumerate_ambiguities, simplify_system, Ambiguity, AmbiguityVerdict};
use crate::arw::{NewmanVerdict, OrientedGraph};
use crate::error::{Error, ParseError};
use crate::presentation::{parse_presentation, Presentation};
use crate::quotient::{independence_check, QuotientRing};
use crate::rewrite::{Severity, DEFAULT_ORACLE_BUDGET};

/// Stable process exit codes.
pub mod exit {
    /// Success, or a positive verdict.
    pub const OK: i32 = 0;
    /// A negative verdict: not confluent, not a member, not unique, ...
    pub const NEGATIVE: i32 = 1;
    /// The system is not compatible with the ordering.
    pub const INCOMPATIBLE: i32 = 2;
    /// The oracle ran out of budget.
    pub const BUDGET: i32 = 3;
    /// Unreadable or malformed input.
    pub const INPUT: i32 = 4;
    /// Bad command-line usage.
    pub const USAGE: i32 = 64;
}

/// Environment variable overriding the default oracle budget.
pub const BUDGET_ENV: &str = "DIAMOND_ORACLE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "diamond",
    version,
    about = "Confluence and normal forms for reduction systems on free algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide confluence (exit 0 confluent, 1 not, 2 incompatible).
    Check {
        file: PathBuf,
        /// Also decide resolvability relative to the ordering.
        #[arg(long)]
        relative: bool,
    },
    /// Normal form of an expression.
    Nf {
        file: PathBuf,
        expr: String,
        /// Print the reduction trace, one `A | rule | B | coefficient` line per step.
        #[arg(long)]
        trace: bool,
    },
    /// Product of two normal forms in the quotient ring.
    Mul {
        file: PathBuf,
        left: String,
        right: String,
    },
    /// Ideal membership (exit 0 member, 1 not).
    Member { file: PathBuf, expr: String },
    /// Irreducible words up to a weighted degree.
    Basis {
        file: PathBuf,
        #[arg(long)]
        max_degree: u64,
    },
    /// List overlap and inclusion ambiguities without checking them.
    Ambiguities { file: PathBuf },
    /// Exhaustively explore every reduction sequence (exit 0 unique, 1 not, 3 budget).
    Oracle {
        file: PathBuf,
        expr: String,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: usize,
    },
    /// Print the system with inclusion ambiguities removed.
    Simplify { file: PathBuf },
    /// Certify that a subsystem defines a strictly smaller ideal (exit 0 certified, 1 not).
    Independent { file: PathBuf, subset: PathBuf },
    /// Newman verdict on an edge list (exit 0 unique sinks, 1 hypothesis fails).
    Graph { edges: PathBuf },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: exit::INPUT,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Incompatible { .. } => exit::INCOMPATIBLE,
            Error::NotConfluent { .. } => exit::NEGATIVE,
            Error::BudgetExhausted { .. } => exit::BUDGET,
            _ => exit::INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_failure(what: &str, e: ParseError) -> Failure {
    Failure {
        code: exit::INPUT,
        message: format!("{what}: {e}"),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit::OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    exit::USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: exit::INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_presentation(&text).map_err(|e| parse_failure(&path.display().to_string(), e))
}

fn expr(p: &Presentation, text: &str) -> Result<crate::freealg::Polynomial, Failure> {
    p.parse_expr(text)
        .map_err(|e| parse_failure(&format!("expression `{text}`"), e))
}

fn emit(out: &mut dyn Write, format: Format, human: &str, structured: Value) -> io::Result<()> {
    match format {
        Format::Human => write!(out, "{human}"),
        Format::Structured => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&structured).expect("json")
        ),
    }
}

fn ambiguity_json(p: &Presentation, a: &Ambiguity) -> Value {
    json!({
        "kind": a.kind.as_str(),
        "sigma": a.sigma,
        "tau": a.tau,
        "A": p.show_word(&a.a),
        "B": p.show_word(&a.b),
        "C": p.show_word(&a.c),
        "D": p.show_word(&a.word()),
    })
}

fn ambiguity_line(p: &Presentation, a: &Ambiguity) -> String {
    format!(
        "{} sigma={} tau={} A={} B={} C={} D={}",
        a.kind.as_str(),
        a.sigma,
        a.tau,
        p.show_word(&a.a),
        p.show_word(&a.b),
        p.show_word(&a.c),
        p.show_word(&a.word())
    )
}

fn verdict_json(p: &Presentation, v: &AmbiguityVerdict) -> Value {
    let mut obj = ambiguity_json(p, &v.ambiguity);
    obj["branch_left"] = json!(p.show_poly(&v.branch_left));
    obj["branch_right"] = json!(p.show_poly(&v.branch_right));
    obj["nf_left"] = json!(p.show_poly(&v.nf_left));
    obj["nf_right"] = json!(p.show_poly(&v.nf_right));
    obj["resolvable"] = json!(v.resolvable);
    if let Some(rel) = &v.relative {
        obj["relative_resolvable"] = json!(rel.resolvable);
        if let Some(cert) = &rel.certificate {
            obj["certificate"] = cert
                .terms
                .iter()
                .map(|(c, occ)| json!({"coefficient": c.to_string(), "A": p.show_word(&occ.prefix), "rule": occ.rule, "B": p.show_word(&occ.suffix)}))
                .collect();
        }
    }
    obj
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Check { file, relative } => {
            let p = load(file)?;
            let report = check_all_with(&p.system, &p.ordering, *relative)?;
            let mut human = String::new();
            for d in p
                .system
                .validate()
                .iter()
                .filter(|d| d.severity == Severity::Warning)
            {
                human.push_str(&format!("warning: {}\n", d.message));
            }
            let code = if !report.compatibility.compatible() {
                for v in &report.compatibility.violations {
                    human.push_str(&format!(
                        "violation: rule {} has monomial {} not below {}\n",
                        v.rule,
                        p.show_word(&v.monomial),
                        p.show_word(&p.system.rule(v.rule).lhs)
                    ));
                }
                human.push_str("incompatible with the ordering\n");
                exit::INCOMPATIBLE
            } else {
                for v in &report.verdicts {
                    human.push_str(&format!(
                        "{}: {} => {} | {} => {} : {}{}\n",
                        ambiguity_line(&p, &v.ambiguity),
                        p.show_poly(&v.branch_left),
                        p.show_poly(&v.nf_left),
                        p.show_poly(&v.branch_right),
                        p.show_poly(&v.nf_right),
                        if v.resolvable {
                            "resolvable"
                        } else {
                            "unresolvable"
                        },
                        match &v.relative {
                            Some(r) if r.resolvable => ", resolvable relative to the ordering",
                            Some(_) => ", not resolvable relative to the ordering",
                            None => "",
                        }
                    ));
                }
                human.push_str(&format!(
                    "overlaps: {}, inclusions: {}\n{} ambiguities, {}\n",
                    report.overlaps(),
                    report.inclusions(),
                    report.verdicts.len(),
                    if report.confluent {
                        "confluent"
                    } else {
                        "not confluent"
                    }
                ));
                if report.confluent {
                    exit::OK
                } else {
                    exit::NEGATIVE
                }
            };
            let structured = json!({
                "compatible": report.compatibility.compatible(),
                "violations": report.compatibility.violations.iter().map(|v| json!({"rule": v.rule, "monomial": p.show_word(&v.monomial)})).collect::<Vec<_>>(),
                "overlaps": report.overlaps(),
                "inclusions": report.inclusions(),
                "ambiguities": report.verdicts.iter().map(|v| verdict_json(&p, v)).collect::<Vec<_>>(),
                "confluent": report.confluent,
            });
            emit(out, format, &human, structured)?;
            Ok(code)
        }
        Command::Nf {
            file,
            expr: text,
            trace,
        } => {
            let p = load(file)?;
            let a = expr(&p, text)?;
            let nf = p.system.normal_form(&a, &p.ordering)?;
            let mut human = format!("{}\n", p.show_poly(&nf.value));
            if *trace {
                human.push_str(&p.system.format_trace(&nf.trace));
            }
            let mut structured = json!({"input": p.show_poly(&a), "normal_form": p.show_poly(&nf.value), "steps": nf.trace.len()});
            if *trace {
                structured["trace"] = p.system.format_trace(&nf.trace).lines().collect();
            }
            emit(out, format, &human, structured)?;
            Ok(exit::OK)
        }
        Command::Mul { file, left, right } => {
            let p = load(file)?;
            let (a, b) = (expr(&p, left)?, expr(&p, right)?);
            let ring = QuotientRing::new(p.system.clone(), p.ordering.clone())?;
            let product = ring.multiply(&a, &b)?;
            let shown = p.show_poly(&product);
            emit(out, format, &format!("{shown}\n"), json!({"product": shown}))?;
            Ok(exit::OK)
        }
        Command::Member { file, expr: text } => {
            let p = load(file)?;
            let a = expr(&p, text)?;
            let ring = QuotientRing::new(p.system.clone(), p.ordering.clone())?;
            let nf = ring.reduce(&a)?;
            let member = nf.is_zero();
            emit(
                out,
                format,
                &format!("{member}\n"),
                json!({"member": member, "normal_form": p.show_poly(&nf)}),
            )?;
            Ok(if member { exit::OK } else { exit::NEGATIVE })
        }
        Command::Basis { file, max_degree } => {
            let p = load(file)?;
            let ring = QuotientRing::new(p.system.clone(), p.ordering.clone())?;
            let words = ring.basis_words(*max_degree);
            let mut counts = vec![0usize; *max_degree as usize + 1];
            for w in &words {
                counts[p.ordering.degree(w) as usize] += 1;
            }
            let mut human = String::new();
            for w in &words {
                human.push_str(&format!("{}\n", p.show_word(w)));
            }
            human.push_str(&format!(
                "counts by degree: {}\n",
                counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            ));
            let structured = json!({
                "words": words.iter().map(|w| p.show_word(w)).collect::<Vec<_>>(),
                "counts_by_degree": counts,
            });
            emit(out, format, &human, structured)?;
            Ok(exit::OK)
        }
        Command::Ambiguities { file } => {
            let p = load(file)?;
            let all = enumerate_ambiguities(&p.system);
            let mut human: String = all
                .iter()
                .map(|a| format!("{}\n", ambiguity_line(&p, a)))
                .collect();
            human.push_str(&format!("{} ambiguities\n", all.len()));
            let structured =
                json!({"ambiguities": all.iter().map(|a| ambiguity_json(&p, a)).collect::<Vec<_>>()});
            emit(out, format, &human, structured)?;
            Ok(exit::OK)
        }
        Command::Oracle {
            file,
            expr: text,
            budget,
        } => {
            let p = load(file)?;
            let a = expr(&p, text)?;
            let outcome = p.system.all_normal_forms(&a, *budget)?;
            let forms: Vec<String> = outcome.normal_forms.iter().map(|f| p.show_poly(f)).collect();
            let mut human: String = forms.iter().map(|f| format!("{f}\n")).collect();
            human.push_str(&format!(
                "{} normal form(s), {} states visited\n",
                forms.len(),
                outcome.visited
            ));
            emit(
                out,
                format,
                &human,
                json!({"normal_forms": forms, "visited": outcome.visited, "unique": outcome.is_unique()}),
            )?;
            Ok(if outcome.is_unique() {
                exit::OK
            } else {
                exit::NEGATIVE
            })
        }
        Command::Simplify { file } => {
            let p = load(file)?;
            let simplified = p.with_system(simplify_system(&p.system)?);
            let text = simplified.to_string();
            emit(
                out,
                format,
                &text,
                json!({"presentation": text, "rules": simplified.system.rules().len()}),
            )?;
            Ok(exit::OK)
        }
        Command::Independent { file, subset } => {
            let p = load(file)?;
            let sub = load(subset)?;
            if sub.alphabet != p.alphabet || sub.field != p.field {
                return Err(Failure {
                    code: exit::INPUT,
                    message: "subset presentation must declare the same field and generators".into(),
                });
            }
            let verdict = independence_check(&sub.system, &p.system, &p.ordering)?;
            let mut human = if verdict.strict {
                format!(
                    "strict inclusion certified by rule(s) {}\n",
                    verdict
                        .witnesses
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            } else {
                "no witness: strict inclusion not certified\n".to_string()
            };
            if let Some(per_rule) = &verdict.per_rule {
                for (i, ind) in per_rule.iter().enumerate() {
                    human.push_str(&format!(
                        "rule {i}: {}\n",
                        if *ind {
                            "independent of the others"
                        } else {
                            "not certified independent"
                        }
                    ));
                }
            }
            let structured = json!({
                "strict": verdict.strict,
                "witnesses": verdict.witnesses,
                "independent_rules": verdict.per_rule,
            });
            emit(out, format, &human, structured)?;
            Ok(if verdict.strict { exit::OK } else { exit::NEGATIVE })
        }
        Command::Graph { edges } => {
            let text = std::fs::read_to_string(edges).map_err(|e| Failure {
                code: exit::INPUT,
                message: format!("{}: {e}", edges.display()),
            })?;
            let g = OrientedGraph::parse_edge_list(&text)
                .map_err(|e| parse_failure(&edges.display().to_string(), e))?;
            let (human, structured, code) = match g.newman_verdict() {
                NewmanVerdict::UniqueSinks(components) => {
                    let mut human = String::new();
                    for c in &components {
                        human.push_str(&format!(
                            "component of {} vertices: sink {}\n",
                            c.vertices.len(),
                            c.sink
                        ));
                    }
                    human.push_str(&format!(
                        "{} component(s), each with a unique sink\n",
                        components.len()
                    ));
                    let structured = json!({
                        "terminating": true,
                        "diamond": true,
                        "components": components.iter().map(|c| json!({"vertices": c.vertices, "sink": c.sink})).collect::<Vec<_>>(),
                    });
                    (human, structured, exit::OK)
                }
                NewmanVerdict::NotTerminating { cycle } => (
                    format!("termination fails: cycle {}\n", cycle.join(" -> ")),
                    json!({"terminating": false, "cycle": cycle}),
                    exit::NEGATIVE,
                ),
                NewmanVerdict::DiamondFails(f) => (
                    format!(
                        "diamond condition fails at {} (branches {} and {})\n",
                        f.vertex, f.left, f.right
                    ),
                    json!({"terminating": true, "diamond": false, "vertex": f.vertex, "branches": [f.left, f.right]}),
                    exit::NEGATIVE,
                ),
            };
            emit(out, format, &human, structured)?;
            Ok(code)
        }
    }
}
