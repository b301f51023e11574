//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := ['-'|'+'] factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | name | '(' expr ')'
//! ```

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;

use num_traits::One;

use super::{GPolynomial, GeneratorTable};
use crate::error::{Error, Result};
use crate::rational::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    table: &'a Arc<GeneratorTable>,
}

pub(super) fn parse_polynomial(table: &Arc<GeneratorTable>, s: &str) -> Result<GPolynomial> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, table };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GPolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GPolynomial> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(if negative { acc.scale(&-Rational::one()) } else { acc })
    }

    fn factor(&mut self) -> Result<GPolynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }

    fn atom(&mut self) -> Result<GPolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num.into());
                if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den == 0 {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rational::from_integer(den.into());
                }
                Ok(GPolynomial::constant(self.table, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                GPolynomial::generator(self.table, name)
            }
            _ => Err(self.error("expected a number, generator or `(`")),
        }
    }
}
