//! Expressions such as `x3*xi1*xi2 - 2/3*(x1 + x2)^2*xi3`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::Multivector;
use crate::text::{content_lines, Cursor, ParseError};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rational),
    X(usize),
    Xi(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str, line: usize, dim: usize) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let col = |i: usize| chars.get(i).map(|c| c.0 + 1).unwrap_or(src.len() + 1);
    let digits = |mut i: usize| {
        let start = i;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        (start, i)
    };
    while i < chars.len() {
        let c = chars[i].1;
        let at = col(i);
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Token::Plus, at)),
            '-' => out.push((Token::Minus, at)),
            '*' => out.push((Token::Star, at)),
            '^' => out.push((Token::Caret, at)),
            '(' => out.push((Token::Open, at)),
            ')' => out.push((Token::Close, at)),
            '0'..='9' => {
                let (s, e) = digits(i);
                let text = |s: usize, e: usize| chars[s..e].iter().map(|c| c.1).collect::<String>();
                let num: BigInt = text(s, e).parse().unwrap();
                let mut den = BigInt::from(1);
                i = e;
                if i < chars.len() && chars[i].1 == '/' {
                    let (s2, e2) = digits(i + 1);
                    if s2 == e2 {
                        return Err(ParseError::new(line, col(i + 1), "expected a denominator"));
                    }
                    den = text(s2, e2).parse().unwrap();
                    if den.is_zero() {
                        return Err(ParseError::new(line, col(s2), "zero denominator"));
                    }
                    i = e2;
                }
                out.push((Token::Number(Rational::new(num, den)), at));
                continue;
            }
            'x' => {
                let odd = i + 1 < chars.len() && chars[i + 1].1 == 'i';
                let (s, e) = digits(i + if odd { 2 } else { 1 });
                if s == e {
                    return Err(ParseError::new(line, col(s), "expected a variable index"));
                }
                let k: usize = chars[s..e]
                    .iter()
                    .map(|c| c.1)
                    .collect::<String>()
                    .parse()
                    .unwrap_or(0);
                if k == 0 || k > dim {
                    return Err(ParseError::new(
                        line,
                        at,
                        format!("variable index {k} outside 1..={dim}"),
                    ));
                }
                out.push((
                    if odd {
                        Token::Xi(k - 1)
                    } else {
                        Token::X(k - 1)
                    },
                    at,
                ));
                i = e;
                continue;
            }
            other => {
                return Err(ParseError::new(
                    line,
                    at,
                    format!("unexpected character '{other}'"),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    dim: usize,
    line: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(self.line, self.column(), msg)
    }

    fn expr(&mut self) -> Result<Multivector, ParseError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Multivector, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Multivector, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Token::Number(r)) if r.is_integer() => {
                let e: u32 = r
                    .to_integer()
                    .try_into()
                    .map_err(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Multivector, ParseError> {
        let d = self.dim;
        let tok = self.peek().cloned();
        match tok {
            Some(Token::Number(r)) => {
                self.pos += 1;
                Ok(Multivector::constant(d, r))
            }
            Some(Token::X(i)) => {
                self.pos += 1;
                Ok(Multivector::x(d, i))
            }
            Some(Token::Xi(i)) => {
                self.pos += 1;
                Ok(Multivector::xi(d, i))
            }
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a number, a variable or '('")),
        }
    }
}

fn parse_line(src: &str, line: usize, dim: usize) -> Result<Multivector, ParseError> {
    let tokens = tokenize(src, line, dim)?;
    let end = src.trim_end().len() + 1;
    let mut p = Parser {
        tokens,
        pos: 0,
        dim,
        line,
        end,
    };
    let m = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected token"));
    }
    Ok(m)
}

/// Parses a single expression in dimension `dim`.
pub fn parse_multivector(src: &str, dim: usize) -> Result<Multivector, ParseError> {
    if dim == 0 || dim > 64 {
        return Err(ParseError::new(
            1,
            1,
            format!("dimension {dim} outside 1..=64"),
        ));
    }
    parse_line(src, 1, dim)
}

/// A `dim <d>` header followed by one expression per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivectorFile {
    pub dim: usize,
    pub entries: Vec<Multivector>,
}

pub fn parse_multivector_file(text: &str) -> Result<MultivectorFile, ParseError> {
    let mut lines = content_lines(text);
    let Some((lno, header)) = lines.next() else {
        return Err(ParseError::new(1, 1, "empty input, expected 'dim <d>'"));
    };
    let mut c = Cursor::new(lno, header);
    c.expect_word("dim")?;
    let dim = c.usize()?;
    c.expect_end()?;
    if dim == 0 || dim > 64 {
        return Err(ParseError::new(
            lno,
            1,
            format!("dimension {dim} outside 1..=64"),
        ));
    }
    let entries = lines
        .map(|(l, body)| parse_line(body, l, dim))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultivectorFile { dim, entries })
}
