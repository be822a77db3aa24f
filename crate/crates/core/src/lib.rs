//! Confluence checking and canonical forms for reduction systems on free
//! associative algebras.
//!
//! A reduction system is a list of rules `W -> f` where `W` is a word over a
//! finite alphabet and `f` a polynomial with exact coefficients. Given a
//! semigroup ordering compatible with the rules, [`ambiguity::check_all`]
//! decides whether every element has a unique normal form by resolving all
//! overlap and inclusion ambiguities. For a confluent system
//! [`quotient::QuotientRing`] realizes the presented algebra on irreducible
//! polynomials with product `a . b = nf(ab)`.
//!
//! ```
//! use diamond_lemma::presentation::parse_presentation;
//! use diamond_lemma::ambiguity::check_all;
//!
//! let p = parse_presentation("field Q\ngenerators x < y\nrule y*x -> x*y + 1\n").unwrap();
//! assert!(check_all(&p.system, &p.ordering).unwrap().confluent);
//! let a = p.parse_expr("y*x*y*x").unwrap();
//! let nf = p.system.normal_form(&a, &p.ordering).unwrap();
//! assert_eq!(p.show_poly(&nf.value), "x*x*y*y + 3*x*y + 1");
//! ```

pub mod ambiguity;
pub mod arw;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod freealg;
pub mod order;
pub mod presentation;
pub mod quotient;
pub mod rewrite;

pub use ambiguity::{check_all, Ambiguity, AmbiguityKind, ConfluenceReport};
pub use coeff::{Coeff, Field};
pub use error::{Error, ParseError, Result};
pub use freealg::{Alphabet, Occurrence, Polynomial, Word};
pub use order::OrderingSpec;
pub use quotient::QuotientRing;
pub use rewrite::{ReductionSystem, Rule};
