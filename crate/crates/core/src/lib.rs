//! Hereditarily finite set matrices.
//!
//! A [`Value`] is either a finite set of values or an `m x n` matrix of values with
//! `m * n >= 2`; a `1 x 1` matrix is identified with its entry. Values are always kept in
//! canonical form, so structural equality is equality.
//!
//! - [`value`]: the data model, canonical order and shapes.
//! - [`ops`]: set and matrix constructions.
//! - [`syntax`]: the term and formula language.
//! - [`eval`]: evaluation, bounded universes and the axiom suite.
//! - [`hf`]: an independent pure-set model for differential testing.

pub mod error;
pub mod eval;
pub mod hf;
pub mod ops;
pub mod syntax;
pub mod value;

pub use error::{Error, Result};
pub use eval::{
    check_axiom_suite, AxiomReport, Env, Evaluator, SuiteOptions, Universe, UniverseSpec, Verdict,
};
pub use ops::{Limits, DEFAULT_CAP};
pub use syntax::{parse_formula, parse_term, Formula, ParseError, Term};
pub use value::{canonical_compare, values_equal, Shape, Value, ValueRef};
