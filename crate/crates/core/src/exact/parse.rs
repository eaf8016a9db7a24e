//! Recursive-descent reader for polynomial expressions in `b` and `x`.
//!
//! Accepts the canonical rendering plus parentheses and integer powers:
//! `(1/6)*(1 + x)*(6 + b*(b + 6)*x + 2*b^2*x^2)`. A `/` is only legal between
//! two integer literals, where it forms a rational constant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'b') => {
                self.pos += 1;
                Ok(Poly::b())
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.integer()?;
                if self.eat(b'/') {
                    let q = self.integer()?;
                    if q.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    return Ok(Poly::constant(Scalar::new(p, q)));
                }
                Ok(Poly::constant(Scalar::from_integer(p)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

pub fn parse_poly(src: &str) -> Result<Poly> {
    let mut parser = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};

    #[test]
    fn literals_and_precedence() {
        assert_eq!(parse_poly("3/6").unwrap(), Poly::constant(ratio(1, 2)));
        assert_eq!(parse_poly("-x^2 + 1").unwrap().eval(&int(0), &int(3)), int(-8));
        assert_eq!(parse_poly("2*(x+1)^2").unwrap().eval(&int(0), &int(1)), int(8));
        assert_eq!(parse_poly("b*x").unwrap(), Poly::b() * Poly::x());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("y").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("x / x").is_err());
        assert!(parse_poly("1.5").is_err());
    }
}
