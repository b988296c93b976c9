//! Element expressions over a Hopf algebra basis.
//!
//! Accepted forms: a coefficient list `[c1, c2, ...]` with field literals,
//! or an arithmetic expression in basis labels, rationals, `zeta`
//! (the primitive root of the field), `+ - * / ^` and parentheses.
//! Products are taken in the algebra; a bare scalar means a multiple of 1.
//! The identifier `z` names a basis element if one has that label and ζ otherwise.
//! Braces `{...}` enclose a field literal, so `{1/2 - 1/2*z^6}*z` is unambiguous
//! even when `z` is a basis label.

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hopf::{FiniteDimHopf, Vector};
use crate::rational::Rational;

pub fn parse_element(h: &FiniteDimHopf, s: &str) -> Result<Vector> {
    parse_with(h, s, &[])
}

/// Like [`parse_element`] with extra named elements available as symbols.
pub fn parse_with(h: &FiniteDimHopf, s: &str, bindings: &[(&str, Vector)]) -> Result<Vector> {
    let t = s.trim();
    if t.starts_with('[') {
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Input(format!("unterminated coefficient list: {s}")))?;
        let parts: Vec<&str> = if inner.trim().is_empty() { vec![] } else { split_top(inner) };
        if parts.len() != h.dim() {
            return Err(Error::Input(format!("expected {} coefficients, got {}", h.dim(), parts.len())));
        }
        return parts
            .iter()
            .map(|p| FieldElem::parse(p.trim().trim_matches('"'), h.order).map_err(Error::from))
            .collect();
    }
    let toks = lex(h, t, bindings)?;
    let mut p = Parser { h, toks, pos: 0, bindings };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Input(format!("unexpected trailing input in {s:?}")));
    }
    Ok(v)
}

fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Scalar(FieldElem),
    Label(usize),
    Bound(usize),
    Zeta,
    Op(char),
}

fn lex(h: &FiniteDimHopf, s: &str, bindings: &[(&str, Vector)]) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '{' {
            let end = (i..chars.len()).find(|&j| chars[j] == '}').ok_or_else(|| Error::Input(format!("unterminated '{{' in {s:?}")))?;
            let lit: String = chars[i + 1..end].iter().collect();
            out.push(Tok::Scalar(FieldElem::parse(&lit, h.order)?));
            i = end + 1;
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
            continue;
        }
        if !(c.is_alphanumeric() || c == '_' || c == '\'') {
            return Err(Error::Input(format!("unexpected character {c:?} in {s:?}")));
        }
        let start = i;
        while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
            i += 1;
        }
        let word: String = chars[start..i].iter().collect();
        if word.chars().all(|d| d.is_ascii_digit()) {
            let r: Rational = word.parse().map_err(|_| Error::Input(format!("bad number {word}")))?;
            out.push(Tok::Num(r));
        } else if let Some(k) = bindings.iter().position(|(n, _)| *n == word) {
            out.push(Tok::Bound(k));
        } else if let Some(k) = h.index_of(&word) {
            out.push(Tok::Label(k));
        } else if word == "zeta" || word == "z" {
            out.push(Tok::Zeta);
        } else {
            return Err(Error::Input(format!("unknown label {word:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    h: &'a FiniteDimHopf,
    bindings: &'a [(&'a str, Vector)],
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn scalar(&self, c: FieldElem) -> Vector {
        self.h.scale(&self.h.unit, &c)
    }

    fn expr(&mut self) -> Result<Vector> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { self.h.add(&acc, &t) } else { self.h.sub(&acc, &t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Vector> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = self.h.mul(&acc, &f);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let f = self.unary()?;
                    let c = self.as_scalar(&f).ok_or_else(|| Error::Input("division by a non-scalar".into()))?;
                    let inv = c.checked_inv()?;
                    acc = self.h.scale(&acc, &inv);
                }
                Some(Tok::Num(_) | Tok::Scalar(_) | Tok::Label(_) | Tok::Bound(_) | Tok::Zeta | Tok::Op('(')) => {
                    let f = self.unary()?;
                    acc = self.h.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn as_scalar(&self, v: &[FieldElem]) -> Option<FieldElem> {
        let k = self.h.unit.iter().position(|x| !x.is_zero())?;
        let c = &v[k] / &self.h.unit[k];
        (self.h.scale(&self.h.unit, &c) == v).then_some(c)
    }

    fn unary(&mut self) -> Result<Vector> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(v.iter().map(|x| -x).collect());
        }
        if let Some(Tok::Op('+')) = self.peek() {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<Vector> {
        let (base, zeta) = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(r)) if r.is_integer() => r.numer(),
                _ => return Err(Error::Input("exponent must be an integer".into())),
            };
            self.pos += 1;
            let e: i64 = e.try_into().map_err(|_| Error::Input("exponent too large".into()))?;
            let e = if neg { -e } else { e };
            if zeta {
                return Ok(self.scalar(FieldElem::zeta_pow(self.h.order, e)));
            }
            if e < 0 {
                let c = self.as_scalar(&base).ok_or_else(|| Error::Input("negative power of a non-scalar".into()))?;
                return Ok(self.scalar(c.checked_inv()?.pow((-e) as u32)));
            }
            let mut acc = self.h.one();
            for _ in 0..e {
                acc = self.h.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<(Vector, bool)> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| Error::Input("unexpected end of expression".into()))?;
        self.pos += 1;
        match t {
            Tok::Num(r) => Ok((self.scalar(FieldElem::rational(r)), false)),
            Tok::Scalar(c) => Ok((self.scalar(c), false)),
            Tok::Label(k) => Ok((self.h.basis(k), false)),
            Tok::Bound(k) => Ok((self.bindings[k].1.clone(), false)),
            Tok::Zeta => Ok((self.scalar(FieldElem::zeta(self.h.order)), true)),
            Tok::Op('(') => {
                let v = self.expr()?;
                match self.toks.get(self.pos) {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok((v, false))
                    }
                    _ => Err(Error::Input("missing ')'".into())),
                }
            }
            Tok::Op(c) => Err(Error::Input(format!("unexpected {c:?}"))),
        }
    }
}
