//! Element grammar: `i`, `w` (cube root of unity), `s` (adjoined root), integers
//! and fractions joined by `*`, `+`, `-`, with `^` powers on symbols.

use super::cyclo::Cyclo12;
use super::elem::FieldElem;
use super::rational::Rational;
use super::NumError;
use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::sync::Arc;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, msg: &str) -> NumError {
        NumError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn integer(&mut self) -> Result<BigInt, NumError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_exp(&mut self) -> Result<u32, NumError> {
        let n = self.integer()?;
        if n.is_zero() {
            return Err(self.err("exponent must be positive"));
        }
        u32::try_from(&n).map_err(|_| self.err("exponent too large"))
    }
}

pub(crate) fn parse(text: &str, d: Option<&Arc<Cyclo12>>) -> Result<FieldElem, NumError> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    if lx.peek().is_none() {
        return Err(lx.err("empty input"));
    }
    let mut acc = FieldElem::zero();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            Some(b'+') => {
                lx.bump();
                1
            }
            Some(b'-') => {
                lx.bump();
                -1
            }
            _ if first => 1,
            None => break,
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        };
        first = false;
        let t = term(&mut lx, d)?;
        if sign < 0 {
            acc = acc - t;
        } else {
            acc = acc + t;
        }
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

fn term(lx: &mut Lexer<'_>, d: Option<&Arc<Cyclo12>>) -> Result<FieldElem, NumError> {
    let mut acc = factor(lx, d)?;
    while lx.peek() == Some(b'*') {
        lx.bump();
        acc = acc * factor(lx, d)?;
    }
    Ok(acc)
}

fn factor(lx: &mut Lexer<'_>, d: Option<&Arc<Cyclo12>>) -> Result<FieldElem, NumError> {
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let n = lx.integer()?;
            if lx.peek() == Some(b'/') {
                lx.bump();
                let den = lx.integer()?;
                if den.is_zero() {
                    return Err(lx.err("zero denominator"));
                }
                Ok(FieldElem::Rat(Rational::new(n, den)))
            } else {
                Ok(FieldElem::Rat(Rational::from_integer(n)))
            }
        }
        Some(c @ (b'i' | b'w' | b's')) => {
            let at = lx.pos;
            lx.bump();
            let base = match c {
                b'i' => FieldElem::i(),
                b'w' => FieldElem::omega(),
                _ => {
                    let d = d.ok_or(NumError::SqrtWithoutModulus { pos: at })?;
                    FieldElem::from_quad(Cyclo12::zero(), Cyclo12::one(), d.clone())
                }
            };
            if lx.peek() == Some(b'^') {
                lx.bump();
                let e = lx.small_exp()?;
                Ok(base.pow(e))
            } else {
                Ok(base)
            }
        }
        Some(_) => Err(lx.err("unexpected character")),
        None => Err(lx.err("unexpected end of input")),
    }
}

const LABELS: [&str; 4] = ["", "i", "w", "w*i"];

pub(crate) fn cyclo_terms(c: &Cyclo12, suffix: &str) -> Vec<String> {
    let coeffs = c.print_basis();
    let mut out = Vec::new();
    for (r, lab) in coeffs.iter().zip(LABELS) {
        if r.is_zero() {
            continue;
        }
        let label = match (lab.is_empty(), suffix.is_empty()) {
            (true, true) => String::new(),
            (true, false) => suffix.to_string(),
            (false, true) => lab.to_string(),
            (false, false) => format!("{lab}*{suffix}"),
        };
        out.push(if label.is_empty() {
            r.to_string()
        } else if r.is_one() {
            label
        } else if (-r).is_one() {
            format!("-{label}")
        } else {
            format!("{r}*{label}")
        });
    }
    out
}

pub(crate) fn join_terms(terms: &[String]) -> String {
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        if k > 0 && !t.starts_with('-') {
            s.push('+');
        }
        s.push_str(t);
    }
    s
}

pub(crate) fn format_elem(x: &FieldElem) -> String {
    let terms = match x {
        FieldElem::Rat(r) => return r.to_string(),
        FieldElem::Cyc(c) => cyclo_terms(c, ""),
        FieldElem::Quad(q) => {
            let mut t = cyclo_terms(&q.p, "");
            t.extend(cyclo_terms(&q.q, "s"));
            t
        }
    };
    if terms.is_empty() {
        "0".into()
    } else {
        join_terms(&terms)
    }
}
