//! Univariate polynomials over Q(ζ_N): enough for characteristic
//! polynomials and square-free decomposition.

use crate::field::FieldElem;
use crate::linalg::matrix::Matrix;

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<FieldElem>);

impl Poly {
    pub fn new(mut c: Vec<FieldElem>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn one() -> Self {
        Poly(vec![FieldElem::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &FieldElem {
        self.0.last().expect("zero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        Poly(self.0.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(vec![]);
        }
        let mut c = vec![FieldElem::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::new(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| {
                let a = self.0.get(i).cloned().unwrap_or_default();
                let b = o.0.get(i).cloned().unwrap_or_default();
                &a - &b
            })
            .collect();
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &FieldElem::from_int(i as i64))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly(vec![]), self.clone());
        }
        let inv = d.lead().inv();
        let mut q = vec![FieldElem::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[i + j] -= &(&c * b);
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: (multiplicity, factor) with deg > 0.
    pub fn squarefree(&self) -> Vec<(usize, Poly)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.divrem(&a).0;
        let mut c = fp.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

/// Characteristic polynomial det(tI − A) via Hessenberg reduction.
pub fn charpoly(a: &Matrix) -> Poly {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(p) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
            continue;
        };
        if p != m {
            for j in 0..n {
                let t = h[(p, j)].clone();
                h[(p, j)] = h[(m, j)].clone();
                h[(m, j)] = t;
            }
            for i in 0..n {
                let t = h[(i, p)].clone();
                h[(i, p)] = h[(i, m)].clone();
                h[(i, m)] = t;
            }
        }
        let inv = h[(m, m - 1)].inv();
        for i in m + 1..n {
            if h[(i, m - 1)].is_zero() {
                continue;
            }
            let f = &h[(i, m - 1)] * &inv;
            for j in 0..n {
                if !h[(m, j)].is_zero() {
                    let t = &f * &h[(m, j)];
                    h[(i, j)] -= &t;
                }
            }
            for r in 0..n {
                if !h[(r, i)].is_zero() {
                    let t = &f * &h[(r, i)];
                    h[(r, m)] += &t;
                }
            }
        }
    }
    // p[k] = charpoly of leading k×k block
    let mut p: Vec<Poly> = vec![Poly::one()];
    for k in 1..=n {
        let t_minus = Poly::new(vec![-&h[(k - 1, k - 1)], FieldElem::one()]);
        let mut pk = t_minus.mul(&p[k - 1]);
        let mut prod = FieldElem::one();
        for i in (1..k).rev() {
            prod = &prod * &h[(i, i - 1)];
            if prod.is_zero() {
                break;
            }
            let coef = &prod * &h[(i - 1, k - 1)];
            if !coef.is_zero() {
                let term = Poly::new(p[i - 1].0.iter().map(|c| c * &coef).collect());
                pk = pk.sub(&term);
            }
        }
        p.push(pk);
    }
    p.pop().unwrap()
}
