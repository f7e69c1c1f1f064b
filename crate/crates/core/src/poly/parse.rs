//! Text grammar for polynomials.
//!
//! ```text
//! expr    := signed (("+" | "-") signed)*
//! signed  := "-" signed | "+" signed | product
//! product := power ("*" power)*        -- "*" is mandatory between factors
//! power   := atom ("^" integer)?
//! atom    := integer ("/" integer)? | identifier | "(" expr ")"
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of
//! the line.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    Semi,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Number(n) => write!(f, "number `{n}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

/// Where a parse error happened: byte offset plus 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl Position {
    pub(crate) fn locate(src: &str, offset: usize) -> Position {
        let offset = offset.min(src.len());
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
        Position {
            offset,
            line,
            column,
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    BadCharacter(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("exponent `{0}` is too large")]
    ExponentTooLarge(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at {position}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: Position,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push(Token {
                    tok: Tok::Number(n),
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(src[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or(c);
                return Err(ParseError {
                    kind: ParseErrorKind::BadCharacter(ch),
                    position: Position::locate(src, i),
                });
            }
        };
        out.push(Token { tok, offset: start });
        i += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        offset: src.len(),
    });
    Ok(out)
}

/// Recursive-descent cursor over a token stream.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Result<Self, ParseError> {
        Ok(Cursor {
            src,
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    pub fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(self.offset(), kind)
    }

    pub fn error_at(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: Position::locate(self.src, offset),
        }
    }

    pub fn unexpected(&self, expected: &str) -> ParseError {
        self.error_here(ParseErrorKind::Unexpected {
            expected: expected.to_string(),
            found: self.peek().to_string(),
        })
    }

    pub fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, usize), ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, offset))
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    pub fn expr(&mut self, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
        let mut acc = self.signed(ring)?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.signed(ring)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.signed(ring)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed(&mut self, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.signed(ring)?)
            }
            Tok::Plus => {
                self.bump();
                self.signed(ring)
            }
            _ => self.product(ring),
        }
    }

    fn product(&mut self, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
        let mut acc = self.power(ring)?;
        while *self.peek() == Tok::Star {
            self.bump();
            // allow `2*-x`
            let rhs = if matches!(self.peek(), Tok::Minus | Tok::Plus) {
                self.signed(ring)?
            } else {
                self.power(ring)?
            };
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn power(&mut self, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
        let base = self.atom(ring)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        match self.bump() {
            Tok::Number(n) => {
                let e = n
                    .to_u32()
                    .filter(|&e| e <= 10_000)
                    .ok_or_else(|| self.error_at(offset, ParseErrorKind::ExponentTooLarge(n.to_string())))?;
                Ok(base.pow(e))
            }
            other => Err(self.error_at(
                offset,
                ParseErrorKind::Unexpected {
                    expected: "non-negative integer exponent".into(),
                    found: other.to_string(),
                },
            )),
        }
    }

    fn atom(&mut self, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Number(num) => {
                self.bump();
                let mut value = BigRational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_offset = self.offset();
                    match self.bump() {
                        Tok::Number(den) if den.is_zero() => {
                            return Err(self.error_at(den_offset, ParseErrorKind::ZeroDenominator))
                        }
                        Tok::Number(den) => value /= BigRational::from_integer(den),
                        other => {
                            return Err(self.error_at(
                                den_offset,
                                ParseErrorKind::Unexpected {
                                    expected: "integer denominator".into(),
                                    found: other.to_string(),
                                },
                            ))
                        }
                    }
                }
                Ok(Polynomial::constant(ring, value))
            }
            Tok::Ident(name) => {
                self.bump();
                match ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::variable(ring, i)),
                    None => Err(self.error_at(offset, ParseErrorKind::UnknownVariable(name))),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr(ring)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("number, variable or `(`")),
        }
    }
}

/// Parses a polynomial over `ring`; the result uses the default (DegRevLex)
/// order.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    let mut cursor = Cursor::new(text)?;
    let poly = cursor.expr(ring)?;
    if *cursor.peek() != Tok::Eof {
        return Err(cursor.unexpected("operator or end of input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PowerProduct;

    fn ring() -> Arc<Ring> {
        Ring::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_paper_generator() {
        let f = parse_polynomial("x^4 - y^2*z^2", &ring()).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.degree(), Some(4));
        assert_eq!(f.leading_monomial(), Some(&PowerProduct::new(vec![4, 0, 0])));
    }

    #[test]
    fn zero_and_term_collection() {
        assert!(parse_polynomial("0", &ring()).unwrap().is_zero());
        let f = parse_polynomial("x*y + y*x", &ring()).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.to_string(), "2*x*y");
    }

    #[test]
    fn precedence_and_unary_minus() {
        let r = ring();
        let p = |s| parse_polynomial(s, &r).unwrap();
        assert_eq!(p("-x^2"), p("-(x^2)"));
        assert_eq!(p("2*x^2*y"), p("2*(x^2)*y"));
        assert_eq!(p("(x+y)^2"), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("x - -y"), p("x + y"));
        assert_eq!(p("3*-x"), p("-3*x"));
        assert_eq!(p("1/2*x + 1/2*x"), p("x"));
        assert_eq!(p("  x # trailing comment\n + y"), p("x+y"));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        let e = parse_polynomial("x + w", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        assert_eq!(e.position.column, 5);

        let e = parse_polynomial("x + 1/0*y", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(e.position.column, 7);

        // juxtaposition is not multiplication
        let e = parse_polynomial("2x", &r).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Unexpected { .. }));
        assert_eq!(e.position.column, 2);

        let e = parse_polynomial("x^y", &r).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Unexpected { .. }));

        let e = parse_polynomial("(x + y", &r).unwrap_err();
        assert_eq!(e.position.column, 7);

        let e = parse_polynomial("x $ y", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadCharacter('$'));
    }
}
