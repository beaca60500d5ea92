//! Parser for the canonical polynomial text form.
//!
//! ```text
//! poly    := [sign] term { sign term }
//! term    := coeff [ "*" factors ] | factors
//! factors := factor { "*" factor }
//! factor  := var [ "^" uint ]
//! coeff   := uint [ "/" uint ]
//! var     := "a" | "b" | "c" | "alpha" | "beta" | "gamma"
//! sign    := "+" | "-"
//! ```
//!
//! Whitespace is insignificant. Positions in errors are byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rational};

pub fn parse_poly(text: &str) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("'+', '-' or end of input"));
    }
    Ok(poly)
}

/// Parses a single monomial such as `a^2*c` or `1`.
pub fn parse_monomial(text: &str) -> Result<Monomial> {
    let p = parse_poly(text)?;
    match p.leading_term() {
        Some((m, c)) if p.len() == 1 && c.is_one() => Ok(m),
        _ => Err(Error::Parse {
            position: 0,
            expected: "a single monomial with coefficient 1".into(),
        }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat(b'+') {
            Some(false)
        } else if self.eat(b'-') {
            Some(true)
        } else {
            None
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        if self.peek().is_none() {
            return Err(self.error("a term (input is empty)"));
        }
        let mut out = Polynomial::zero();
        let negative = self.sign().unwrap_or(false);
        let (c, m) = self.term()?;
        out.add_term(m, if negative { -c } else { c });
        while let Some(negative) = self.sign() {
            let (c, m) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let c = self.coeff()?;
                let m = if self.eat(b'*') {
                    self.factors()?
                } else {
                    Monomial::ONE
                };
                Ok((c, m))
            }
            Some(ch) if ch.is_ascii_alphabetic() => Ok((Rational::one(), self.factors()?)),
            _ => Err(self.error("a coefficient or a variable")),
        }
    }

    fn factors(&mut self) -> Result<Monomial> {
        let mut m = self.factor()?;
        while self.eat(b'*') {
            m = m * self.factor()?;
        }
        Ok(m)
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let var = match &self.src[start..self.pos] {
            b"a" | b"alpha" => Monomial::ALPHA,
            b"b" | b"beta" => Monomial::BETA,
            b"c" | b"gamma" => Monomial::GAMMA,
            _ => {
                self.pos = start;
                return Err(self.error("a variable (a, b, c, alpha, beta, gamma)"));
            }
        };
        if self.eat(b'^') {
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.error("an exponent that fits in 32 bits"))?;
            Ok(var.pow(e))
        } else {
            Ok(var)
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.uint()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.uint()?;
            if den.is_zero() {
                return Err(Error::Parse {
                    position: at,
                    expected: "a nonzero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }
}
