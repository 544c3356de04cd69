//! Line-oriented lexing shared by all text encodings.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// A malformed input, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Non-blank lines with `#` comments removed, paired with their line number.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if body.trim().is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}

pub(crate) struct Cursor<'a> {
    line: usize,
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(line: usize, src: &'a str) -> Cursor<'a> {
        Cursor { line, src, pos: 0 }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.pos + 1, message)
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    /// Consumes `c` if it is the next non-blank character.
    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    pub(crate) fn word(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let w = self.take_while(|c| c.is_ascii_alphabetic());
        if w.is_empty() {
            Err(self.error("expected a keyword"))
        } else {
            Ok(w)
        }
    }

    pub(crate) fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        let at = self.pos;
        let got = self.word()?;
        if got == w {
            Ok(())
        } else {
            self.pos = at;
            self.skip_ws();
            Err(self.error(format!("expected '{w}', found '{got}'")))
        }
    }

    /// Consumes the keyword `w` if it comes next.
    pub(crate) fn eat_word(&mut self, w: &str) -> bool {
        let at = self.pos;
        match self.word() {
            Ok(got) if got == w => true,
            _ => {
                self.pos = at;
                false
            }
        }
    }

    pub(crate) fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    pub(crate) fn usize(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected a non-negative integer"));
        }
        digits
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    /// `[-]digits[/digits]`
    pub(crate) fn rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat('-');
        self.skip_ws();
        let num = self.take_while(|c| c.is_ascii_digit());
        if num.is_empty() {
            self.pos = start;
            return Err(self.error("expected a rational number"));
        }
        let mut den = "1";
        if self.peek() == Some('/') {
            self.pos += 1;
            den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                return Err(self.error("expected a denominator"));
            }
        }
        let n: BigInt = num.parse().unwrap();
        let d: BigInt = den.parse().unwrap();
        if d.is_zero() {
            return Err(ParseError::new(self.line, start + 1, "zero denominator"));
        }
        let r = Rational::new(n, d);
        Ok(if negative { -r } else { r })
    }
}

/// Renders a rational as `n` or `n/d`.
pub(crate) fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
