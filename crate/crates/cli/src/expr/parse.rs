use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rbgf_core::Rational;

use super::ast::{line_col, Expr, ExprKind, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const ATOM_START: &[&str] = &[
    "number",
    "'one('",
    "'w('",
    "'P('",
    "'d('",
    "'geominv('",
    "'('",
];

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error_here(p.continuation(&e, &["end of input"])));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_second(&self) -> Option<char> {
        self.src[self.pos..].chars().nth(1)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("{c:?}"),
        }
    }

    fn error_at(&self, offset: usize, message: String, expected: &[&str]) -> ParseError {
        let (line, column) = line_col(self.src, offset);
        ParseError {
            offset,
            line,
            column,
            message,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn error_here(&self, expected: Vec<&str>) -> ParseError {
        self.error_at(self.pos, format!("unexpected {}", self.found()), &expected)
    }

    /// Tokens that could legally follow a complete `e`, plus `closers`.
    fn continuation<'s>(&self, e: &Expr, closers: &[&'s str]) -> Vec<&'s str> {
        let mut v = vec!["'+'", "'-'", "'*'"];
        if self.last_factor_is_atom(e) {
            v.push("'^'");
        }
        v.extend_from_slice(closers);
        v
    }

    fn last_factor_is_atom(&self, e: &Expr) -> bool {
        match &e.kind {
            ExprKind::Add(_, b) | ExprKind::Sub(_, b) | ExprKind::Mul(_, b) => {
                self.last_factor_is_atom(b)
            }
            ExprKind::Pow(..) => false,
            _ => true,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: Vec<&str>) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek_start();
        let mut lhs = self.term()?;
        loop {
            self.skip_ws();
            let add = match self.peek() {
                Some('+') => true,
                Some('-') => false,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            let span = Span::new(start, rhs.span.end);
            let kind = if add {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr::new(kind, span);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let start = self.peek_start();
        let mut lhs = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            let span = Span::new(start, rhs.span.end);
            lhs = Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let n = self.uint("exponent")?;
        let n = u32::try_from(n)
            .map_err(|_| self.error_at(self.pos, "exponent too large".into(), &[]))?;
        let span = Span::new(base.span.start, self.pos);
        Ok(Expr::new(ExprKind::Pow(Box::new(base), n), span))
    }

    fn peek_start(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn uint(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error_here(vec!["unsigned integer"]));
        }
        d.parse()
            .map_err(|_| self.error_at(start, format!("{what} {d} is too large"), &[]))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.rational(start),
            Some('-') if self.peek_second().is_some_and(|c| c.is_ascii_digit()) => {
                self.rational(start)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                let expected = self.continuation(&inner, &["')'"]);
                self.expect(')', expected)?;
                Ok(Expr::new(inner.kind, Span::new(start, self.pos)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match name {
                    "one" => {
                        self.expect('(', vec!["'('"])?;
                        let k = self.uint("index")?;
                        self.expect(')', vec!["')'"])?;
                        let k = usize::try_from(k).expect("u64 fits usize");
                        Ok(Expr::new(ExprKind::One(k), Span::new(start, self.pos)))
                    }
                    "w" => {
                        self.expect('(', vec!["'('"])?;
                        let mut es = Vec::new();
                        loop {
                            let e = self.uint("exponent")?;
                            es.push(u32::try_from(e).map_err(|_| {
                                self.error_at(self.pos, "exponent too large".into(), &[])
                            })?);
                            if self.eat(')') {
                                break;
                            }
                            self.expect(',', vec!["','", "')'"])?;
                        }
                        Ok(Expr::new(ExprKind::Word(es), Span::new(start, self.pos)))
                    }
                    "P" | "d" | "geominv" => {
                        self.expect('(', vec!["'('"])?;
                        let inner = self.expr()?;
                        let expected = self.continuation(&inner, &["')'"]);
                        self.expect(')', expected)?;
                        let inner = Box::new(inner);
                        let kind = match name {
                            "P" => ExprKind::P(inner),
                            "d" => ExprKind::D(inner),
                            _ => ExprKind::GeomInv(inner),
                        };
                        Ok(Expr::new(kind, Span::new(start, self.pos)))
                    }
                    _ => Err(self.error_at(start, format!("unknown name {name:?}"), ATOM_START)),
                }
            }
            _ => Err(self.error_here(ATOM_START.to_vec())),
        }
    }

    fn rational(&mut self, start: usize) -> Result<Expr, ParseError> {
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        self.digits();
        let num: BigInt = self.src[start..self.pos].parse().expect("validated digits");
        let mut den = BigInt::from(1);
        if self.peek() == Some('/') {
            self.pos += 1;
            let d = self.digits();
            if d.is_empty() {
                return Err(self.error_here(vec!["unsigned integer"]));
            }
            den = d.parse().expect("validated digits");
            if den.is_zero() {
                return Err(self.error_at(start, "zero denominator".into(), &[]));
            }
        }
        Ok(Expr::new(
            ExprKind::Rational(Rational::new(num, den)),
            Span::new(start, self.pos),
        ))
    }
}
