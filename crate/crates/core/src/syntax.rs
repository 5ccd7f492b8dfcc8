//! ASCII surface syntax for de Bruijn terms:
//!
//! ```text
//! term := digits | "\" term | "(" term " " term ")"
//! ```
//!
//! Printing is the `Display` impl of [`Term`] and [`Cheese`](crate::Cheese);
//! holes print as `[level]` and are not accepted by the parser.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::term::Term;

pub fn parse_debruijn(input: &str) -> Result<Term> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let term = parser.term()?;
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(term)
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        parse_debruijn(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_owned(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", byte as char)))
        }
    }

    // Iterative over chains of binders so that long `\\\...` prefixes do
    // not grow the stack.
    fn term(&mut self) -> Result<Term> {
        let mut binders = 0;
        while self.bytes.get(self.pos) == Some(&b'\\') {
            self.pos += 1;
            binders += 1;
        }
        let mut term = match self.bytes.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let fun = self.term()?;
                self.expect(b' ')?;
                let arg = self.term()?;
                self.expect(b')')?;
                Term::app(fun, arg)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ascii digits");
                let k = digits.parse().map_err(|_| Error::Parse {
                    offset: start,
                    message: "index too large".to_owned(),
                })?;
                Term::Index(k)
            }
            Some(_) => return Err(self.error("expected a term")),
            None => return Err(self.error("unexpected end of input")),
        };
        for _ in 0..binders {
            term = Term::abs(term);
        }
        Ok(term)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_grammar() {
        assert_eq!(
            parse_debruijn("\\(0 \\0)").unwrap(),
            Term::abs(Term::app(Term::Index(0), Term::abs(Term::Index(0))))
        );
        assert_eq!(parse_debruijn("12").unwrap(), Term::Index(12));
        assert_eq!(
            Term::abs(Term::app(Term::Index(0), Term::abs(Term::Index(0)))).to_string(),
            "\\(0 \\0)"
        );
    }

    #[test]
    fn reports_offsets() {
        let offset = |s: &str| match parse_debruijn(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(offset("(("), 2);
        assert_eq!(offset(""), 0);
        assert_eq!(offset("(0  0)"), 3);
        assert_eq!(offset("(0 0"), 4);
        assert_eq!(offset("\\0 "), 2);
        assert_eq!(offset("x"), 0);
        assert_eq!(offset("[0]"), 0);
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = (0usize..12).prop_map(Term::Index);
        leaf.prop_recursive(8, 64, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Term::abs),
                (inner.clone(), inner).prop_map(|(f, a)| Term::app(f, a)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(t in arb_term()) {
            prop_assert_eq!(parse_debruijn(&t.to_string()).unwrap(), t);
        }
    }
}
