//! Recursive descent parser; one token of lookahead everywhere, so every accepted string has a
//! single parse tree.

use super::ast::{Formula, Op, Quantifier, Range, Sort, Term};
use super::lexer::{tokenize, Tok};
use super::ParseError;

const KEYWORDS: &[&str] = &[
    "in", "notin", "sub", "not", "and", "or", "forall", "exists", "true", "false", "set",
];

fn is_reserved(name: &str) -> bool {
    KEYWORDS.contains(&name) || Op::from_name(name).is_some()
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            src,
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::at(self.src, self.offset(), message))
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        self.error(format!(
            "expected {wanted}, found {}",
            self.peek().describe()
        ))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => self.unexpected("end of input"),
        }
    }

    fn at_term_start(&self) -> bool {
        match self.peek() {
            Tok::LBrace | Tok::LBracket | Tok::LAngle | Tok::Num(_) => true,
            Tok::Ident(s) => !KEYWORDS.contains(&s.as_str()),
            _ => false,
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::LBrace => {
                self.bump();
                if *self.peek() == Tok::RBrace {
                    self.bump();
                    return Ok(Term::Empty);
                }
                let items = self.comma_list(Tok::RBrace)?;
                Ok(Term::SetLit(items))
            }
            Tok::LAngle => {
                self.bump();
                let items = self.comma_list(Tok::RAngle)?;
                Ok(Term::Tuple(items))
            }
            Tok::LBracket => self.matrix(),
            Tok::Num(n) => {
                self.bump();
                Ok(Term::Numeral(n))
            }
            Tok::Ident(name) => {
                if let Some(op) = Op::from_name(&name) {
                    self.bump();
                    self.application(op)
                } else if KEYWORDS.contains(&name.as_str()) {
                    self.unexpected("a term")
                } else {
                    self.bump();
                    Ok(Term::Var(name))
                }
            }
            _ => self.unexpected("a term"),
        }
    }

    /// Items separated by commas up to and including `close`.
    fn comma_list(&mut self, close: Tok) -> Result<Vec<Term>, ParseError> {
        let mut items = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                    items.push(self.term()?);
                }
                t if *t == close => {
                    self.bump();
                    return Ok(items);
                }
                _ => return self.unexpected(&format!("`,` or {}", close.describe())),
            }
        }
    }

    fn matrix(&mut self) -> Result<Term, ParseError> {
        let open = self.offset();
        self.expect(Tok::LBracket)?;
        let mut rows: Vec<Vec<Term>> = Vec::new();
        loop {
            let row_start = self.offset();
            let mut row = Vec::new();
            while self.at_term_start() {
                row.push(self.term()?);
            }
            if row.is_empty() {
                return self.unexpected("a matrix entry");
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(ParseError::at(
                        self.src,
                        row_start,
                        format!(
                            "matrix row has {} entries, expected {}",
                            row.len(),
                            first.len()
                        ),
                    ));
                }
            }
            rows.push(row);
            match self.peek() {
                Tok::Semi => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return self.unexpected("a term, `;` or `]`"),
            }
        }
        debug_assert!(open <= self.offset());
        Ok(Term::MatrixLit(rows))
    }

    fn dimension(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Tok::Num(n) if *n > 0 => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.unexpected("a positive dimension"),
        }
    }

    fn application(&mut self, op: Op) -> Result<Term, ParseError> {
        let name_at = self.toks[self.pos - 1].1;
        self.expect(Tok::LParen)?;
        let op = match op {
            Op::MatSet { .. } => {
                let rows = self.dimension()?;
                self.expect(Tok::Comma)?;
                let cols = self.dimension()?;
                self.expect(Tok::Comma)?;
                Op::MatSet { rows, cols }
            }
            other => other,
        };
        let args = self.comma_list(Tok::RParen)?;
        if !op.accepts(args.len()) {
            return Err(ParseError::at(
                self.src,
                name_at,
                format!("`{}` does not take {} argument(s)", op.name(), args.len()),
            ));
        }
        Ok(Term::App(op, args))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::DoubleArrow {
            self.bump();
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.at_keyword("or") {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.at_keyword("and") {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(kw) => match kw.as_str() {
                "not" => {
                    self.bump();
                    Ok(Formula::not(self.unary()?))
                }
                "true" => {
                    self.bump();
                    Ok(Formula::True)
                }
                "false" => {
                    self.bump();
                    Ok(Formula::False)
                }
                "forall" | "exists" => self.quantified(),
                _ => self.atom(),
            },
            _ => self.atom(),
        }
    }

    fn quantified(&mut self) -> Result<Formula, ParseError> {
        let quantifier = match self.bump() {
            Tok::Ident(kw) if kw == "forall" => Quantifier::Forall,
            _ if *self.peek() == Tok::Bang => {
                self.bump();
                Quantifier::ExistsUnique
            }
            _ => Quantifier::Exists,
        };
        let var = match self.peek().clone() {
            Tok::Ident(name) if !is_reserved(&name) => {
                self.bump();
                name
            }
            _ => return self.unexpected("a variable name"),
        };
        let range = if self.at_keyword("in") {
            self.bump();
            Range::In(self.term()?)
        } else if *self.peek() == Tok::Colon {
            self.bump();
            if !self.at_keyword("set") {
                return self.unexpected("`set`");
            }
            self.bump();
            Range::Universe(Sort::Set)
        } else {
            Range::Universe(Sort::Any)
        };
        self.expect(Tok::LParen)?;
        let body = self.formula()?;
        self.expect(Tok::RParen)?;
        Ok(Formula::quant(quantifier, var, range, body))
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        if !self.at_term_start() {
            return self.unexpected("a formula");
        }
        let lhs = self.term()?;
        let (negated, relation): (bool, fn(Term, Term) -> Formula) = match self.peek() {
            Tok::Eq => (false, Formula::Equal),
            Tok::NotEq => (true, Formula::Equal),
            Tok::Ident(kw) if kw == "in" => (false, Formula::Member),
            Tok::Ident(kw) if kw == "notin" => (true, Formula::Member),
            Tok::Ident(kw) if kw == "sub" => (false, Formula::SubsetOf),
            _ => return self.unexpected("`in`, `notin`, `=`, `!=` or `sub`"),
        };
        self.bump();
        let atom = relation(lhs, self.term()?);
        Ok(if negated { Formula::not(atom) } else { atom })
    }
}
