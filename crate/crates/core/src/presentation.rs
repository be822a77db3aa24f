//! Text format for presentations and polynomial expressions.
//!
//! ```text
//! # Weyl algebra
//! field Q
//! generators x < y
//! rule y*x -> x*y + 1
//! ```
//!
//! Directives: `field Q`, `field F <p>`, `generators a < b < ...` (the chain
//! is the precedence, smallest first), `weight <gen> <n>`, and
//! `rule <word> -> <polynomial>`. `field` defaults to `Q` and must precede
//! the first rule; `generators` must precede `weight` and `rule`.
//! Polynomials use `+ - * / ^` and parentheses; `*` is required between
//! factors and `/` only divides by nonzero constants.

use std::fmt;

use num_bigint::BigInt;

use crate::coeff::Field;
use crate::error::ParseError;
use crate::freealg::{Alphabet, Polynomial, Word};
use crate::order::OrderingSpec;
use crate::rewrite::{ReductionSystem, Rule, Severity};

/// A parsed and validated presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: Field,
    pub alphabet: Alphabet,
    pub ordering: OrderingSpec,
    pub system: ReductionSystem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Arrow,
    Lt,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(n) => write!(f, "`{n}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Lt => write!(f, "`<`"),
        }
    }
}

// (token, 1-based column)
fn tokenize(line: &str, lineno: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Number(digits.parse().expect("digits")), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::Lt,
            other => {
                return Err(ParseError::new(
                    lineno,
                    col,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [(Tok, usize)], line: usize, end_col: usize) -> Self {
        Cursor {
            toks,
            pos: 0,
            line,
            end_col,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |&(_, c)| c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of line")),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn number(&mut self, wanted: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Number(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of line")),
        }
    }
}

struct ExprParser<'a, 'b> {
    cur: Cursor<'a>,
    names: &'b [String],
    field: Field,
}

impl ExprParser<'_, '_> {
    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero(self.field);
        let mut negate = false;
        if self.cur.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.cur.eat(&Tok::Plus);
        }
        loop {
            let t = self.term()?;
            let t = if negate { t.neg() } else { t };
            acc = acc.add(&t).expect("single field");
            if self.cur.eat(&Tok::Plus) {
                negate = false;
            } else if self.cur.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.cur.eat(&Tok::Star) {
                let rhs = self.power()?;
                acc = acc.mul(&rhs).expect("single field");
            } else if self.cur.peek() == Some(&Tok::Slash) {
                self.cur.next();
                let col = self.cur.col();
                let rhs = self.power()?;
                if rhs.is_zero() {
                    return Err(ParseError::new(
                        self.cur.line,
                        col,
                        "division by zero in the field",
                    ));
                }
                if rhs.len() != 1 || !rhs.monomials().all(Word::is_one) {
                    return Err(ParseError::new(
                        self.cur.line,
                        col,
                        "can only divide by a nonzero constant",
                    ));
                }
                let inv = rhs.coeff(&Word::one()).inv().expect("nonzero constant");
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.cur.eat(&Tok::Caret) {
            return Ok(base);
        }
        let col = self.cur.col();
        let exp = self.cur.number("an exponent")?;
        let exp: u32 = exp
            .try_into()
            .ok()
            .filter(|&e| e <= 64)
            .ok_or_else(|| ParseError::new(self.cur.line, col, "exponent too large"))?;
        let mut out = Polynomial::one(self.field);
        for _ in 0..exp {
            out = out.mul(&base).expect("single field");
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let col = self.cur.col();
        match self.cur.peek().cloned() {
            Some(Tok::Number(n)) => {
                self.cur.next();
                Ok(Polynomial::constant(self.field.from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                self.cur.next();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Polynomial::word(self.field, Word::from(vec![i as u32]))),
                    None => Err(ParseError::new(
                        self.cur.line,
                        col,
                        format!("unknown generator `{name}`"),
                    )),
                }
            }
            Some(Tok::LParen) => {
                self.cur.next();
                let inner = self.expr()?;
                if !self.cur.eat(&Tok::RParen) {
                    return Err(self.cur.unexpected("`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.cur.unexpected("a number, generator or `(`")),
        }
    }
}

/// Parses a polynomial over `alphabet` and `field` from a single line.
pub fn parse_polynomial(text: &str, alphabet: &Alphabet, field: Field) -> Result<Polynomial, ParseError> {
    if text.contains('\n') {
        return Err(ParseError::new(1, 1, "expressions must fit on one line"));
    }
    let toks = tokenize(text, 1)?;
    parse_expr_tokens(&toks, 1, text.chars().count() + 1, alphabet.names(), field)
}

fn parse_expr_tokens(
    toks: &[(Tok, usize)],
    line: usize,
    end_col: usize,
    names: &[String],
    field: Field,
) -> Result<Polynomial, ParseError> {
    let mut p = ExprParser {
        cur: Cursor::new(toks, line, end_col),
        names,
        field,
    };
    if p.cur.peek().is_none() {
        return Err(p.cur.unexpected("an expression"));
    }
    let poly = p.expr()?;
    p.cur.finish()?;
    Ok(poly)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut field: Option<Field> = None;
    let mut names: Option<Vec<String>> = None;
    let mut weights: Vec<u32> = Vec::new();
    let mut rules: Vec<(Rule, usize)> = Vec::new();
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let end_col = line.chars().count() + 1;
        let mut cur = Cursor::new(&toks, lineno, end_col);
        let directive_col = cur.col();
        let directive = cur.ident("a directive")?;
        match directive.as_str() {
            "field" => {
                if field.is_some() || !rules.is_empty() {
                    return Err(ParseError::new(
                        lineno,
                        directive_col,
                        "`field` must appear once, before any rule",
                    ));
                }
                let col = cur.col();
                let kind = cur.ident("`Q` or `F`")?;
                field = Some(match kind.as_str() {
                    "Q" => Field::Rationals,
                    "F" => {
                        let col = cur.col();
                        let p = cur.number("a prime modulus")?;
                        let p: u64 = p
                            .try_into()
                            .map_err(|_| ParseError::new(lineno, col, "modulus out of range"))?;
                        Field::prime(p).map_err(|e| ParseError::new(lineno, col, e.to_string()))?
                    }
                    _ => return Err(ParseError::new(lineno, col, format!("unknown field `{kind}`"))),
                });
                cur.finish()?;
            }
            "generators" => {
                if names.is_some() {
                    return Err(ParseError::new(
                        lineno,
                        directive_col,
                        "duplicate `generators` directive",
                    ));
                }
                let mut list: Vec<String> = Vec::new();
                loop {
                    let col = cur.col();
                    let name = cur.ident("a generator name")?;
                    if list.contains(&name) {
                        return Err(ParseError::new(
                            lineno,
                            col,
                            format!("duplicate generator `{name}`"),
                        ));
                    }
                    list.push(name);
                    if !cur.eat(&Tok::Lt) {
                        break;
                    }
                }
                cur.finish()?;
                weights = vec![1; list.len()];
                names = Some(list);
            }
            "weight" => {
                let Some(list) = names.as_ref() else {
                    return Err(ParseError::new(
                        lineno,
                        directive_col,
                        "`weight` before `generators`",
                    ));
                };
                let col = cur.col();
                let name = cur.ident("a generator name")?;
                let i = list
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| ParseError::new(lineno, col, format!("unknown generator `{name}`")))?;
                let col = cur.col();
                let w = cur.number("a positive weight")?;
                weights[i] = w
                    .try_into()
                    .ok()
                    .filter(|&w: &u32| w >= 1)
                    .ok_or_else(|| ParseError::new(lineno, col, "weight must be a positive integer"))?;
                cur.finish()?;
            }
            "rule" => {
                let Some(list) = names.as_ref() else {
                    return Err(ParseError::new(
                        lineno,
                        directive_col,
                        "`rule` before `generators`",
                    ));
                };
                let f = *field.get_or_insert(Field::Rationals);
                let arrow = toks
                    .iter()
                    .position(|(t, _)| *t == Tok::Arrow)
                    .ok_or_else(|| ParseError::new(lineno, end_col, "expected `->`"))?;
                let lhs_col = cur.col();
                let lhs_toks = &toks[1..arrow];
                let arrow_col = toks[arrow].1;
                if lhs_toks.is_empty() {
                    return Err(ParseError::new(lineno, lhs_col, "rule needs a left-hand side"));
                }
                let lhs = parse_expr_tokens(lhs_toks, lineno, arrow_col, list, f)?;
                let lhs = match lhs.terms().collect::<Vec<_>>().as_slice() {
                    [(w, c)] if c.is_one() && !w.is_one() => (*w).clone(),
                    [(w, c)] if c.is_one() && w.is_one() => {
                        return Err(ParseError::new(
                            lineno,
                            lhs_col,
                            "left-hand side must not be the empty word",
                        ))
                    }
                    [] => return Err(ParseError::new(lineno, lhs_col, "left-hand side is zero")),
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            lhs_col,
                            "left-hand side must be a single word",
                        ))
                    }
                };
                let rhs_toks = &toks[arrow + 1..];
                if rhs_toks.is_empty() {
                    return Err(ParseError::new(lineno, end_col, "rule needs a right-hand side"));
                }
                let rhs = parse_expr_tokens(rhs_toks, lineno, end_col, list, f)?;
                rules.push((Rule { lhs, rhs }, lineno));
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    directive_col,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let names = names.ok_or_else(|| ParseError::new(last_line, 1, "missing `generators` directive"))?;
    let field = field.unwrap_or(Field::Rationals);
    let alphabet =
        Alphabet::with_weights(names, weights).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let ordering = OrderingSpec::from_alphabet(&alphabet);
    let lines: Vec<usize> = rules.iter().map(|(_, l)| *l).collect();
    let system = ReductionSystem::new(
        alphabet.clone(),
        field,
        rules.into_iter().map(|(r, _)| r).collect(),
    )
    .map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    if let Some(d) = system
        .validate()
        .into_iter()
        .find(|d| d.severity == Severity::Fatal)
    {
        return Err(ParseError::new(lines[d.rules[0]], 1, d.message));
    }
    Ok(Presentation {
        field,
        alphabet,
        ordering,
        system,
    })
}

impl Presentation {
    pub fn parse_expr(&self, text: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(text, &self.alphabet, self.field)
    }

    pub fn show_poly(&self, p: &Polynomial) -> String {
        p.display(&self.alphabet, &self.ordering).to_string()
    }

    pub fn show_word(&self, w: &Word) -> String {
        self.alphabet.display_word(w).to_string()
    }

    /// The same header with a different rule list.
    pub fn with_system(&self, system: ReductionSystem) -> Presentation {
        Presentation {
            system,
            ..self.clone()
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        let names: Vec<&str> = self
            .ordering
            .precedence()
            .into_iter()
            .map(|l| self.alphabet.name(l))
            .collect();
        writeln!(f, "generators {}", names.join(" < "))?;
        for (name, w) in self.alphabet.names().iter().zip(self.alphabet.weights()) {
            if *w != 1 {
                writeln!(f, "weight {name} {w}")?;
            }
        }
        for rule in self.system.rules() {
            writeln!(
                f,
                "rule {} -> {}",
                self.show_word(&rule.lhs),
                self.show_poly(&rule.rhs)
            )?;
        }
        Ok(())
    }
}
