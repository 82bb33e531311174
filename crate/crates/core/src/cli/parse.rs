//! Text form of polynomials.
//!
//! ```text
//! poly   := ws [sign] term (ws sign ws term)* ws
//! term   := coef [ws '*' ws] 'x' [ws '^' ws uint]
//!         | coef
//!         | 'x' [ws '^' ws uint]
//! coef   := uint [ws '/' ws uint]
//! sign   := '+' | '-'
//! ```
//!
//! Like terms are added. Examples: `x^5 - 2`, `3/2x^5 + x`, `2*x^3 - x + 1/4`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::UniPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}, found {}", self.position, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(c) if c.is_ascii_graphic() => format!("'{}'", c as char),
            Some(c) => format!("byte 0x{c:02x}"),
        };
        ParseError { position: self.pos, expected: expected.to_string(), found }
    }

    fn uint(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(what));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        let mut coef = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.uint("integer")?;
            self.skip_ws();
            let mut den = BigInt::from(1);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let den_pos = self.pos;
                den = self.uint("denominator")?;
                if den.is_zero() {
                    return Err(ParseError {
                        position: den_pos,
                        expected: "nonzero denominator".into(),
                        found: "0".into(),
                    });
                }
                self.skip_ws();
            }
            coef = Some(Rational::new(num, den));
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return Err(self.error("'x' after '*'"));
                }
            }
        }
        if self.peek() != Some(b'x') {
            return match coef {
                Some(c) => Ok((c, 0)),
                None => Err(self.error("coefficient or 'x'")),
            };
        }
        self.pos += 1;
        let save = self.pos;
        self.skip_ws();
        let mut power = 1usize;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let p = self.uint("exponent")?;
            power = usize::try_from(&p).map_err(|_| ParseError {
                position: at,
                expected: "exponent below 2^32".into(),
                found: p.to_string(),
            })?;
            if power > 1 << 16 {
                return Err(ParseError { position: at, expected: "exponent at most 65536".into(), found: power.to_string() });
            }
        } else {
            self.pos = save;
        }
        Ok((coef.unwrap_or_else(|| Rational::from_integer(1.into())), power))
    }
}

pub fn parse_polynomial(s: &str) -> Result<UniPoly, ParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let mut acc: Vec<Rational> = Vec::new();
    p.skip_ws();
    let mut negative = false;
    match p.peek() {
        Some(b'-') => {
            negative = true;
            p.pos += 1;
        }
        Some(b'+') => p.pos += 1,
        _ => {}
    }
    loop {
        p.skip_ws();
        let (c, k) = p.term()?;
        if acc.len() <= k {
            acc.resize(k + 1, Rational::zero());
        }
        if negative {
            acc[k] -= c;
        } else {
            acc[k] += c;
        }
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(p.error("'+', '-' or end of input")),
        }
        p.pos += 1;
    }
    Ok(UniPoly::new(acc))
}
