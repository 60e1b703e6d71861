//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" uint)?
//! base     := rational | "x" | "(" expr ")"
//! rational := ["-"] uint ("/" uint)?
//! ```
//!
//! Implicit multiplication is not supported: `2(x-1)` is rejected, the `*`
//! must be written out. A leading minus must be attached to a rational, so
//! `-x^3` is written `-1*x^3`.

use std::fmt;

use num_bigint::BigInt;
use torsion2::poly::Poly;
use torsion2::rational::Rational;

/// Parse failure with the byte offset and the tokens that were possible
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Scanner<'a> {
        Scanner {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn found(&self) -> String {
        match self.text.get(self.pos) {
            Some(&c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        }
    }

    fn error(&mut self, expected: Vec<&'static str>) -> ParseError {
        self.skip_ws();
        ParseError {
            offset: self.pos,
            expected,
            found: self.found(),
        }
    }

    fn uint_digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.text[start..self.pos]).unwrap().to_string())
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut s = Scanner::new(text);
    let p = expr(&mut s)?;
    if s.peek().is_some() {
        return Err(s.error(vec!["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(p)
}

fn expr(s: &mut Scanner) -> Result<Poly, ParseError> {
    let mut p = term(s)?;
    loop {
        match s.peek() {
            Some(b'+') => {
                s.bump();
                let q = term(s)?;
                p = &p + &q;
            }
            Some(b'-') => {
                s.bump();
                let q = term(s)?;
                p = &p - &q;
            }
            _ => return Ok(p),
        }
    }
}

fn term(s: &mut Scanner) -> Result<Poly, ParseError> {
    let mut p = factor(s)?;
    while s.peek() == Some(b'*') {
        s.bump();
        let q = factor(s)?;
        p = &p * &q;
    }
    Ok(p)
}

fn factor(s: &mut Scanner) -> Result<Poly, ParseError> {
    let b = base(s)?;
    if s.peek() == Some(b'^') {
        s.bump();
        let Some(digits) = s.uint_digits() else {
            return Err(s.error(vec!["an exponent digit"]));
        };
        let e: u32 = digits
            .parse()
            .ok()
            .filter(|&e| e <= 512)
            .ok_or_else(|| ParseError {
                offset: s.pos - digits.len(),
                expected: vec!["an exponent of at most 512"],
                found: digits.clone(),
            })?;
        return Ok(b.pow(e));
    }
    Ok(b)
}

fn base(s: &mut Scanner) -> Result<Poly, ParseError> {
    match s.peek() {
        Some(b'(') => {
            s.bump();
            let p = expr(s)?;
            if s.peek() != Some(b')') {
                return Err(s.error(vec!["')'", "'+'", "'-'", "'*'"]));
            }
            s.bump();
            Ok(p)
        }
        Some(b'x') => {
            s.bump();
            Ok(Poly::x())
        }
        Some(c) if c == b'-' || c.is_ascii_digit() => {
            let negative = c == b'-';
            if negative {
                s.bump();
            }
            let Some(num) = s.uint_digits() else {
                return Err(s.error(vec!["a digit"]));
            };
            let mut numer: BigInt = num.parse().unwrap();
            if negative {
                numer = -numer;
            }
            let denom: BigInt = if s.peek() == Some(b'/') {
                s.bump();
                let den_offset = {
                    s.skip_ws();
                    s.pos
                };
                let Some(den) = s.uint_digits() else {
                    return Err(s.error(vec!["a digit"]));
                };
                let d: BigInt = den.parse().unwrap();
                if d == BigInt::from(0) {
                    return Err(ParseError {
                        offset: den_offset,
                        expected: vec!["a nonzero denominator"],
                        found: "'0'".to_string(),
                    });
                }
                d
            } else {
                BigInt::from(1)
            };
            Ok(Poly::constant(Rational::new(numer, denom)))
        }
        _ => Err(s.error(vec!["a rational number", "'x'", "'('"])),
    }
}
