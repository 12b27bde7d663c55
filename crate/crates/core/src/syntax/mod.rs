//! Concrete syntax for terms and formulas (`smt-syntax v1`).
//!
//! ```text
//! term    := '{' '}' | '{' term (',' term)* '}'
//!          | '[' row (';' row)* ']'          row := term+   (whitespace separates columns)
//!          | '<' term (',' term)* '>'        tuple, same as a 1 x n matrix
//!          | digits                          Zermelo numeral
//!          | ident | op '(' args ')'         pair union pow matset(m,n,x) cart funspace succ
//! formula := iff
//! iff     := imp ('<->' imp)*
//! imp     := or ('->' imp)?
//! or      := and ('or' and)*
//! and     := unary ('and' unary)*
//! unary   := 'not' unary | quant | '(' formula ')' | 'true' | 'false'
//!          | term ('in' | 'notin' | '=' | '!=' | 'sub') term
//! quant   := ('forall' | 'exists' | 'exists' '!') ident ['in' term | ':' 'set'] '(' formula ')'
//! ```

mod ast;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{Formula, Op, Quantifier, Range, Sort, Term};
pub use lexer::MAX_NUMERAL;
pub use parser::{parse_formula, parse_term};

use crate::value::Value;

/// Syntax error with its location in the source text. `column` counts characters from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(src: &str, offset: usize, message: impl Into<String>) -> ParseError {
        let before = &src[..offset.min(src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            offset,
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Canonical text of a value. Parsing it back and evaluating yields the same value.
pub fn render(v: &Value) -> String {
    v.to_string()
}
