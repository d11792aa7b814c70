//! Parser for the polynomial text format used by the catalog files.

use super::mpoly::MPoly;
use super::vars::Var;
use super::PolyError;
use crate::numtower::{FieldElem, Rational, SqrtCtx};
use num::bigint::BigInt;

struct P<'a> {
    s: &'a [u8],
    pos: usize,
    ctx: Option<&'a SqrtCtx>,
}

impl<'a> P<'a> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = MPoly::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.integer()?;
            let e = u32::try_from(&n).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(MPoly::constant(FieldElem::Rat(Rational::new(n, d))));
                }
                Ok(MPoly::constant(FieldElem::Rat(Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let id = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match id {
                    "i" => Ok(MPoly::constant(FieldElem::i())),
                    "w" => Ok(MPoly::constant(FieldElem::omega())),
                    "s" => match self.ctx {
                        Some(ctx) => Ok(MPoly::constant(ctx.s())),
                        None => Err(PolyError::Parse { pos: start, msg: "`s` without a square-root context".into() }),
                    },
                    _ => Var::by_name(id).map(MPoly::var).ok_or_else(|| PolyError::UnknownVar(id.to_string())),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn parse_poly(text: &str, ctx: Option<&SqrtCtx>) -> Result<MPoly, PolyError> {
    let mut p = P { s: text.as_bytes(), pos: 0, ctx };
    if p.peek().is_none() {
        return Err(p.err("empty polynomial"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// One polynomial per nonblank line; `#` starts a comment.
pub fn parse_catalog(text: &str) -> Result<Vec<MPoly>, PolyError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        out.push(parse_poly(body, None).map_err(|e| PolyError::Line(lineno + 1, Box::new(e)))?);
    }
    Ok(out)
}
