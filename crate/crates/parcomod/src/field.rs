//! Elements of the cyclotomic field Q(ζ_N).
//!
//! Elements are stored in the power basis of Q[x]/Φ_N(x) with trailing zero
//! coefficients trimmed. Rational elements carry no order (`n == 0`), so they
//! combine with elements of any Q(ζ_N); mixing two different nonzero orders
//! panics in the operators and is reported by the `try_*` helpers.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::FieldError;
use crate::rational::Rational;

pub const DEFAULT_ORDER: u16 = 24;
const MAX_ORDER: usize = 512;

/// Field order from `PARCOMOD_FIELD_N`, falling back to 24.
pub fn default_order() -> u16 {
    static N: OnceLock<u16> = OnceLock::new();
    *N.get_or_init(|| {
        std::env::var("PARCOMOD_FIELD_N")
            .ok()
            .and_then(|s| s.trim().parse::<u16>().ok())
            .filter(|&n| n >= 1 && (n as usize) < MAX_ORDER)
            .unwrap_or(DEFAULT_ORDER)
    })
}

pub(crate) struct Cyclotomic {
    pub phi: usize,
    /// Φ_N as integer coefficients, lowest degree first, monic.
    pub poly: Vec<i64>,
    /// `reduce[k]` is x^(phi + k) mod Φ_N for k < phi - 1.
    reduce: Vec<Vec<Rational>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&v| v == 0));
    q
}

/// Integer coefficients of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

pub(crate) fn ctx(n: u16) -> &'static Cyclotomic {
    static TABLE: [OnceLock<Cyclotomic>; MAX_ORDER] = [const { OnceLock::new() }; MAX_ORDER];
    assert!((n as usize) < MAX_ORDER && n >= 1, "unsupported cyclotomic order {n}");
    TABLE[n as usize].get_or_init(|| {
        let poly = cyclotomic_poly(n as usize);
        let phi = poly.len() - 1;
        let mut reduce = Vec::new();
        // x^phi = -(lower part of Φ_N)
        let mut cur: Vec<Rational> = poly[..phi].iter().map(|&c| Rational::from_int(-c)).collect();
        for _ in 0..phi.saturating_sub(1) {
            reduce.push(cur.clone());
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::ZERO; phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..phi {
                    next[i] -= &(&top * &Rational::from_int(poly[i]));
                }
            }
            cur = next;
        }
        Cyclotomic { phi, poly, reduce }
    })
}

pub fn euler_phi(n: u16) -> usize {
    ctx(n).phi
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    n: u16,
    c: SmallVec<[Rational; 1]>,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { n: 0, c: SmallVec::new() }
    }

    pub fn one() -> Self {
        Self::rational(Rational::ONE)
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(Rational::from_int(v))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(Rational::new(p, q))
    }

    pub fn rational(r: Rational) -> Self {
        let mut c = SmallVec::new();
        if !r.is_zero() {
            c.push(r);
        }
        FieldElem { n: 0, c }
    }

    /// Builds an element from power-basis coordinates, reducing powers ≥ φ(N).
    pub fn from_coeffs(n: u16, coeffs: Vec<Rational>) -> Self {
        let k = ctx(n);
        if coeffs.len() <= k.phi {
            return Self::normalize(n, coeffs.into_iter().collect());
        }
        Self::normalize(n, reduce_full(k, coeffs).into_iter().collect())
    }

    fn normalize(n: u16, mut c: SmallVec<[Rational; 1]>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        let n = if c.len() <= 1 { 0 } else { n };
        FieldElem { n, c }
    }

    /// ζ_N.
    pub fn zeta(n: u16) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(n: u16, k: i64) -> Self {
        let nn = n as i64;
        let k = k.rem_euclid(nn) as usize;
        let mut v = vec![Rational::ZERO; k + 1];
        v[k] = Rational::ONE;
        Self::from_coeffs(n, v)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.c.len() {
            0 => Some(Rational::ZERO),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    /// Cyclotomic order this element lives in, `None` if rational.
    pub fn order(&self) -> Option<u16> {
        if self.n == 0 {
            None
        } else {
            Some(self.n)
        }
    }

    /// Power-basis coordinates, padded to length φ(n).
    pub fn coeffs(&self, n: u16) -> Vec<Rational> {
        let phi = ctx(n).phi;
        let mut v: Vec<Rational> = self.c.iter().cloned().collect();
        v.resize(phi.max(v.len()), Rational::ZERO);
        v
    }

    pub fn raw_coeffs(&self) -> &[Rational] {
        &self.c
    }

    fn join_order(a: u16, b: u16) -> Result<u16, FieldError> {
        match (a, b) {
            (0, x) | (x, 0) => Ok(x),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(FieldError::OrderMismatch(x, y)),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        let n = Self::join_order(self.n, rhs.n)?;
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        let (long, short) = if self.c.len() >= rhs.c.len() { (self, rhs) } else { (rhs, self) };
        let mut c = long.c.clone();
        for (i, v) in short.c.iter().enumerate() {
            c[i] += v;
        }
        Ok(Self::normalize(n, c))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        let n = Self::join_order(self.n, rhs.n)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        if self.c.len() == 1 {
            return Ok(rhs.scale(&self.c[0]));
        }
        if rhs.c.len() == 1 {
            return Ok(self.scale(&rhs.c[0]));
        }
        let k = ctx(n);
        let mut prod = vec![Rational::ZERO; self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        Ok(Self::normalize(n, reduce_full(k, prod).into_iter().collect()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        if r.is_one() {
            return self.clone();
        }
        FieldElem { n: self.n, c: self.c.iter().map(|v| v * r).collect() }
    }

    /// Multiplicative inverse; division by zero is an error.
    pub fn checked_inv(&self) -> Result<Self, FieldError> {
        match self.c.len() {
            0 => Err(FieldError::DivisionByZero),
            1 => Ok(Self::rational(self.c[0].inv())),
            _ => {
                let n = self.n;
                let phi = ctx(n).phi;
                // columns: self * x^j
                let mut cols = Vec::with_capacity(phi);
                let mut cur = self.clone();
                let x = Self::zeta(n);
                for _ in 0..phi {
                    cols.push(cur.coeffs(n));
                    cur = &cur * &x;
                }
                let mut m: Vec<Vec<Rational>> = (0..phi)
                    .map(|i| {
                        let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                        row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                        row
                    })
                    .collect();
                let sol = solve_square(&mut m).ok_or(FieldError::DivisionByZero)?;
                Ok(Self::from_coeffs(n, sol))
            }
        }
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero field element")
    }

    /// Galois automorphism ζ ↦ ζ^j (j coprime to N).
    pub fn galois(&self, j: i64) -> Self {
        if self.n == 0 {
            return self.clone();
        }
        let n = self.n;
        let mut acc = Self::zero();
        for (k, c) in self.c.iter().enumerate() {
            if !c.is_zero() {
                acc += &Self::zeta_pow(n, j * k as i64).scale(c);
            }
        }
        acc
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the textual form, e.g. `"1/2 + 1/2*z^2"`, with `z` = ζ_n.
    pub fn parse(s: &str, n: u16) -> Result<Self, FieldError> {
        parse_elem(s, n)
    }
}

fn reduce_full(k: &Cyclotomic, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = k.phi;
    // fold powers ≥ 2φ-1 down first (only for long inputs like x^k with k large)
    while v.len() > 2 * phi - 1 && phi > 0 {
        let top = v.len() - 1;
        let c = v.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        // x^top = x^(top-phi) * x^phi
        let base = top - phi;
        for i in 0..phi {
            let coeff = -Rational::from_int(k.poly[i]);
            if !coeff.is_zero() {
                v[base + i] += &(&c * &coeff);
            }
        }
    }
    if v.len() > phi {
        let high: Vec<Rational> = v.drain(phi..).collect();
        for (off, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in k.reduce[off].iter().enumerate() {
                if !r.is_zero() {
                    v[i] += &(c * r);
                }
            }
        }
    }
    v
}

/// Gauss-Jordan on an augmented square system; `None` if singular.
fn solve_square(m: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv();
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &f * &m[col][c];
                    m[r][c] -= &t;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for FieldElem {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { n: self.n, c: self.c.iter().map(|v| -v).collect() }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.try_add(&-rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let zp = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{zp}")?;
            } else {
                write!(f, "{a}*{zp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FieldElem::parse(&s, default_order()).map_err(serde::de::Error::custom)
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }
    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            std::str::from_utf8(&self.s[start..self.pos]).ok()
        }
    }
}

fn parse_elem(src: &str, n: u16) -> Result<FieldElem, FieldError> {
    let err = || FieldError::Parse(src.to_string());
    let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
    let mut acc = FieldElem::zero();
    let mut first = true;
    loop {
        let neg = if lx.eat(b'-') {
            true
        } else if lx.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;
        let mut coeff = Rational::ONE;
        let mut have_coeff = false;
        if let Some(num) = lx.digits() {
            have_coeff = true;
            let mut text = num.to_string();
            if lx.eat(b'/') {
                let den = lx.digits().ok_or_else(err)?;
                text = format!("{num}/{den}");
            }
            coeff = text.parse().map_err(|_| err())?;
        }
        let mut power = 0i64;
        let wants_z = if have_coeff { lx.eat(b'*') } else { true };
        if wants_z {
            if !lx.eat(b'z') {
                return Err(err());
            }
            power = 1;
            if lx.eat(b'^') {
                let neg_exp = lx.eat(b'-');
                let e: i64 = lx.digits().ok_or_else(err)?.parse().map_err(|_| err())?;
                power = if neg_exp { -e } else { e };
            }
        }
        let mut term = FieldElem::zeta_pow(n, power).scale(&coeff);
        if neg {
            term = -term;
        }
        acc = acc.try_add(&term)?;
    }
    if lx.peek().is_some() || first {
        return Err(err());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(24), vec![1, 0, 0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(euler_phi(24), 8);
    }

    #[test]
    fn zeta_order() {
        let z = FieldElem::zeta(8);
        assert!(z.pow(8).is_one());
        assert!(!z.pow(4).is_one());
        assert_eq!(z.pow(4), FieldElem::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let i = FieldElem::zeta(4);
        let a = &FieldElem::one() + &i;
        let expect = FieldElem::parse("1/2 - 1/2*z", 4).unwrap();
        assert_eq!(a.inv(), expect);
        assert_eq!(FieldElem::zero().checked_inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1/2 + 1/2*z^2", "-z^3", "z", "-3/4 - z + 2*z^7"] {
            let v = FieldElem::parse(s, 24).unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!(FieldElem::parse(" 1 /2+z ^ 2 ", 24).unwrap().to_string(), "1/2 + z^2");
        assert!(FieldElem::parse("1 +", 24).is_err());
        assert!(FieldElem::parse("", 24).is_err());
        assert!(FieldElem::parse("y", 24).is_err());
    }

    #[test]
    fn high_powers_reduce() {
        let v = FieldElem::parse("z^24", 24).unwrap();
        assert!(v.is_one());
        let w = FieldElem::parse("z^-1", 24).unwrap();
        assert!((&w * &FieldElem::zeta(24)).is_one());
    }

    #[test]
    fn galois_conjugation() {
        let z3 = FieldElem::zeta_pow(24, 8);
        assert_eq!(z3.conj(), FieldElem::zeta_pow(24, 16));
        let s = &z3 + &z3.conj();
        assert_eq!(s, FieldElem::from_int(-1));
    }
}
