//! Input files: a ring declaration followed by an ideal.
//!
//! ```text
//! document := "ring" ident ("," ident)* ";" "ideal" expr ("," expr)* ";"
//! ```
//!
//! `expr` is the polynomial grammar of [`crate::poly::parse_polynomial`];
//! `#` comments and whitespace may appear anywhere.

use std::sync::Arc;

use crate::groebner::IdealPresentation;
use crate::poly::{Cursor, ParseError, ParseErrorKind, Polynomial, Ring, Tok};

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub ring: Arc<Ring>,
    /// In file order, zero generators included.
    pub generators: Vec<Polynomial>,
}

impl InputDocument {
    pub fn ideal(&self) -> IdealPresentation {
        IdealPresentation::new(&self.ring, self.generators.iter().cloned())
            .expect("generators were parsed over this ring")
    }
}

fn keyword(cursor: &mut Cursor<'_>, word: &str) -> Result<(), ParseError> {
    match cursor.peek() {
        Tok::Ident(s) if s == word => {
            cursor.bump();
            Ok(())
        }
        _ => Err(cursor.unexpected(&format!("`{word}`"))),
    }
}

pub fn parse_document(src: &str) -> Result<InputDocument, ParseError> {
    let mut cursor = Cursor::new(src)?;
    keyword(&mut cursor, "ring")?;
    let start = cursor.offset();
    let mut names = vec![cursor.expect_ident()?.0];
    while *cursor.peek() == Tok::Comma {
        cursor.bump();
        let (name, offset) = cursor.expect_ident()?;
        if names.contains(&name) {
            return Err(cursor.error_at(
                offset,
                ParseErrorKind::Invalid(format!("variable `{name}` declared twice")),
            ));
        }
        names.push(name);
    }
    cursor.expect(Tok::Semi, "`,` or `;`")?;
    let ring = Ring::new(&names)
        .map_err(|e| cursor.error_at(start, ParseErrorKind::Invalid(e.to_string())))?;

    keyword(&mut cursor, "ideal")?;
    let mut generators = vec![cursor.expr(&ring)?];
    while *cursor.peek() == Tok::Comma {
        cursor.bump();
        generators.push(cursor.expr(&ring)?);
    }
    cursor.expect(Tok::Semi, "operator, `,` or `;`")?;
    if *cursor.peek() != Tok::Eof {
        return Err(cursor.unexpected("end of input"));
    }
    Ok(InputDocument { ring, generators })
}
