//! Finite-dimensional Hopf algebras given by structure constants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{default_order, FieldElem};
use crate::linalg::{LinMap, Matrix, Tensor};

pub type Vector = Vec<FieldElem>;

#[derive(Clone, Debug)]
pub struct FiniteDimHopf {
    pub name: String,
    pub order: u16,
    pub labels: Vec<String>,
    pub unit: Vector,
    /// `mult[i * n + j]` = b_i b_j
    pub mult: Vec<Vector>,
    /// `comult[i]` = Δ(b_i) in k^{n²}, index `a * n + b` for b_a ⊗ b_b
    pub comult: Vec<Vector>,
    pub counit: Vector,
    /// column j = S(b_j)
    pub antipode: Matrix,
    pub grouplikes: Vec<usize>,
    pub antipode_inv: Option<Matrix>,
    maps: Maps,
}

#[derive(Clone, Debug)]
struct Maps {
    mu: LinMap,
    delta: LinMap,
    s: LinMap,
    eps: LinMap,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebra: String,
    pub results: Vec<AxiomResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

fn zeros(n: usize) -> Vector {
    vec![FieldElem::zero(); n]
}

impl FiniteDimHopf {
    /// Assembles an algebra from structure constants; checks shapes only.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        order: u16,
        labels: Vec<String>,
        unit: Vector,
        mult: Vec<Vector>,
        comult: Vec<Vector>,
        counit: Vector,
        antipode: Matrix,
        grouplikes: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        let bad = |what: &str| Error::Shape(format!("{what} has the wrong shape for dimension {n}"));
        if unit.len() != n {
            return Err(bad("unit"));
        }
        if mult.len() != n * n || mult.iter().any(|v| v.len() != n) {
            return Err(bad("mult"));
        }
        if comult.len() != n || comult.iter().any(|v| v.len() != n * n) {
            return Err(bad("comult"));
        }
        if counit.len() != n {
            return Err(bad("counit"));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(bad("antipode"));
        }
        if grouplikes.iter().any(|&g| g >= n) {
            return Err(bad("grouplikes"));
        }
        let mu = Matrix::from_cols(n, &mult);
        let delta = Matrix::from_cols(n * n, &comult);
        let eps = Matrix::from_rows(vec![counit.clone()]).expect("row");
        let maps = Maps {
            mu: LinMap::new(&mu),
            delta: LinMap::new(&delta),
            s: LinMap::new(&antipode),
            eps: LinMap::new(&eps),
        };
        Ok(FiniteDimHopf {
            name: name.into(),
            order,
            labels,
            unit,
            mult,
            comult,
            counit,
            antipode,
            grouplikes,
            antipode_inv: None,
            maps,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = zeros(self.dim());
        v[i] = FieldElem::one();
        v
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mu_map(&self) -> &LinMap {
        &self.maps.mu
    }

    pub fn delta_map(&self) -> &LinMap {
        &self.maps.delta
    }

    pub fn s_map(&self) -> &LinMap {
        &self.maps.s
    }

    pub fn eps_map(&self) -> &LinMap {
        &self.maps.eps
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mult[i * n + j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(c * &xy);
                    }
                }
            }
        }
        out
    }

    pub fn delta(&self, a: &[FieldElem]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n * n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in self.comult[i].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(c * x);
                }
            }
        }
        out
    }

    pub fn eps(&self, a: &[FieldElem]) -> FieldElem {
        let mut s = FieldElem::zero();
        for (x, c) in a.iter().zip(&self.counit) {
            if !x.is_zero() && !c.is_zero() {
                s += &(x * c);
            }
        }
        s
    }

    pub fn s(&self, a: &[FieldElem]) -> Vector {
        self.antipode.mul_vec(a)
    }

    /// S⁻¹, using the declared inverse or inverting the matrix.
    pub fn s_inv_matrix(&self) -> Result<Matrix> {
        if let Some(m) = &self.antipode_inv {
            return Ok(m.clone());
        }
        self.antipode
            .inverse()
            .ok_or_else(|| Error::Verification(format!("antipode of {} is not invertible", self.name)))
    }

    pub fn s_inv(&self, a: &[FieldElem]) -> Result<Vector> {
        Ok(self.s_inv_matrix()?.mul_vec(a))
    }

    pub fn add(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &[FieldElem], c: &FieldElem) -> Vector {
        a.iter().map(|x| x * c).collect()
    }

    /// Product in H^{⊗k}, componentwise.
    pub fn tensor_mul(&self, k: usize, x: &[FieldElem], y: &[FieldElem]) -> Vector {
        let n = self.dim();
        let size = n.pow(k as u32);
        assert_eq!(x.len(), size);
        assert_eq!(y.len(), size);
        let mut out = zeros(size);
        let digits = |mut idx: usize| {
            let mut d = vec![0usize; k];
            for slot in d.iter_mut().rev() {
                *slot = idx % n;
                idx /= n;
            }
            d
        };
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let di = digits(i);
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let dj = digits(j);
                let mut acc: Vec<(usize, FieldElem)> = vec![(0, a * b)];
                for t in 0..k {
                    let prod = &self.mult[di[t] * n + dj[t]];
                    let mut next = Vec::new();
                    for (idx, c) in &acc {
                        for (m, p) in prod.iter().enumerate() {
                            if !p.is_zero() {
                                next.push((idx * n + m, c * p));
                            }
                        }
                    }
                    acc = next;
                }
                for (idx, c) in acc {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    pub fn tensor(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x * y);
            }
        }
        out
    }

    /// Δ^{(k)}(a) ∈ H^{⊗(k+1)}, always bracketed as (Δ⊗id⊗…)∘….
    pub fn delta_iter(&self, a: &[FieldElem], k: usize) -> Vector {
        let mut t = Tensor::new(vec![self.dim()], a.to_vec());
        for _ in 0..k {
            t = t.apply(0, 1, &self.maps.delta, &[self.dim(), self.dim()]);
        }
        t.data
    }

    /// Matrix of x ↦ a·x.
    pub fn left_mult_matrix(&self, a: &[FieldElem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    /// Matrix of x ↦ x·a.
    pub fn right_mult_matrix(&self, a: &[FieldElem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    pub fn is_grouplike(&self, c: &[FieldElem]) -> bool {
        self.eps(c).is_one() && self.delta(c) == self.tensor(c, c)
    }

    /// Basis vectors that are grouplike.
    pub fn grouplike_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.is_grouplike(&self.basis(i))).collect()
    }

    pub fn verify(&self) -> VerificationReport {
        let n = self.dim();
        let lbl = |i: usize| self.labels[i].clone();
        let mut results = Vec::new();
        let mut push = |axiom: &str, witness: Option<String>| {
            results.push(AxiomResult { axiom: axiom.to_string(), pass: witness.is_none(), witness });
        };

        let mut w = None;
        'a: for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i * n + j];
                for k in 0..n {
                    let lhs = self.mul(ij, &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &self.mult[j * n + k]);
                    if lhs != rhs {
                        w = Some(format!("({}, {}, {})", lbl(i), lbl(j), lbl(k)));
                        break 'a;
                    }
                }
            }
        }
        push("associativity", w);

        let w = (0..n)
            .find(|&i| {
                let b = self.basis(i);
                self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
            })
            .map(lbl);
        push("unit", w);

        let w = (0..n)
            .find(|&i| {
                let d = self.delta(&self.basis(i));
                let t = Tensor::new(vec![n, n], d);
                let l = t.apply(0, 1, &self.maps.delta, &[n, n]);
                let r = t.apply(1, 1, &self.maps.delta, &[n, n]);
                l != r
            })
            .map(lbl);
        push("coassociativity", w);

        let w = (0..n)
            .find(|&i| {
                let b = self.basis(i);
                let t = Tensor::new(vec![n, n], self.delta(&b));
                t.apply(0, 1, &self.maps.eps, &[]).data != b || t.apply(1, 1, &self.maps.eps, &[]).data != b
            })
            .map(lbl);
        push("counit", w);

        let mut w = None;
        'd: for i in 0..n {
            for j in 0..n {
                let lhs = self.delta(&self.mult[i * n + j]);
                let rhs = self.tensor_mul(2, &self.comult[i], &self.comult[j]);
                if lhs != rhs {
                    w = Some(format!("({}, {})", lbl(i), lbl(j)));
                    break 'd;
                }
            }
        }
        if w.is_none() && self.delta(&self.unit) != self.tensor(&self.unit, &self.unit) {
            w = Some("Δ(1) ≠ 1⊗1".to_string());
        }
        push("comultiplication multiplicative", w);

        let mut w = None;
        'e: for i in 0..n {
            for j in 0..n {
                let lhs = self.eps(&self.mult[i * n + j]);
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    w = Some(format!("({}, {})", lbl(i), lbl(j)));
                    break 'e;
                }
            }
        }
        if w.is_none() && !self.eps(&self.unit).is_one() {
            w = Some("ε(1) ≠ 1".to_string());
        }
        push("counit multiplicative", w);

        let w = (0..n)
            .find(|&i| {
                let b = self.basis(i);
                let target = self.scale(&self.unit, &self.eps(&b));
                let t = Tensor::new(vec![n, n], self.delta(&b));
                let l = t.apply(0, 1, &self.maps.s, &[n]).apply(0, 2, &self.maps.mu, &[n]);
                let r = t.apply(1, 1, &self.maps.s, &[n]).apply(0, 2, &self.maps.mu, &[n]);
                l.data != target || r.data != target
            })
            .map(lbl);
        push("antipode", w);

        let w = self
            .grouplikes
            .iter()
            .find(|&&g| !self.is_grouplike(&self.basis(g)))
            .map(|&g| lbl(g));
        push("declared grouplikes", w);

        if let Some(si) = &self.antipode_inv {
            let ok = self.antipode.mul(si) == Matrix::identity(n) && si.mul(&self.antipode) == Matrix::identity(n);
            push("antipode inverse", if ok { None } else { Some("S∘S⁻¹ ≠ id".into()) });
        }

        VerificationReport { algebra: self.name.clone(), results }
    }

    /// Dual Hopf algebra on the dual basis; labels are prefixed with `p_`.
    pub fn dual(&self) -> FiniteDimHopf {
        let n = self.dim();
        // φ_i φ_j = Σ_k c_k^{ij} φ_k where Δ(b_k) = Σ c_k^{ij} b_i⊗b_j
        let mut mult = vec![zeros(n); n * n];
        for k in 0..n {
            for (ij, c) in self.comult[k].iter().enumerate() {
                if !c.is_zero() {
                    mult[ij][k] = c.clone();
                }
            }
        }
        // Δ*(φ_k) = Σ_{ij} m_{ij}^k φ_i⊗φ_j
        let mut comult = vec![zeros(n * n); n];
        for ij in 0..n * n {
            for (k, c) in self.mult[ij].iter().enumerate() {
                if !c.is_zero() {
                    comult[k][ij] = c.clone();
                }
            }
        }
        let labels = self.labels.iter().map(|l| format!("p_{l}")).collect();
        let mut d = FiniteDimHopf::new(
            format!("{}*", self.name),
            self.order,
            labels,
            self.counit.clone(),
            mult,
            comult,
            self.unit.clone(),
            self.antipode.transpose(),
            vec![],
        )
        .expect("dual shapes");
        d.grouplikes = d.grouplike_basis();
        d.antipode_inv = self.antipode_inv.as_ref().map(|m| m.transpose());
        d
    }

    /// Parses an element expression (see [`crate::expr`]).
    pub fn parse_element(&self, s: &str) -> Result<Vector> {
        crate::expr::parse_element(self, s)
    }

    /// Renders an element as a linear combination of basis labels.
    pub fn format_element(&self, v: &[FieldElem]) -> String {
        format_combination(&self.labels, v)
    }

    pub fn to_json(&self) -> HopfJson {
        let s = |v: &Vector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let n = self.dim();
        HopfJson {
            name: self.name.clone(),
            field: FieldSpec { cyclotomic_order: self.order },
            dim: n,
            basis: self.labels.clone(),
            unit: s(&self.unit),
            mult: (0..n).map(|i| (0..n).map(|j| s(&self.mult[i * n + j])).collect()).collect(),
            comult: self.comult.iter().map(s).collect(),
            counit: s(&self.counit),
            antipode: (0..n).map(|j| s(&self.antipode.col(j))).collect(),
            grouplikes: self.grouplikes.clone(),
            antipode_inverse: self
                .antipode_inv
                .as_ref()
                .map(|m| (0..n).map(|j| s(&m.col(j))).collect()),
        }
    }

    pub fn from_json(j: &HopfJson) -> Result<Self> {
        let n = j.dim;
        let order = j.field.cyclotomic_order;
        if order == 0 {
            return Err(Error::Input("cyclotomic_order must be positive".into()));
        }
        let p = |v: &Vec<String>| -> Result<Vector> {
            v.iter().map(|x| FieldElem::parse(x, order).map_err(Error::from)).collect()
        };
        if j.basis.len() != n || j.mult.len() != n || j.antipode.len() != n {
            return Err(Error::Shape("basis/mult/antipode length differs from dim".into()));
        }
        let mut mult = Vec::with_capacity(n * n);
        for row in &j.mult {
            if row.len() != n {
                return Err(Error::Shape("mult row length".into()));
            }
            for v in row {
                mult.push(p(v)?);
            }
        }
        let comult = j.comult.iter().map(p).collect::<Result<Vec<_>>>()?;
        let scols = j.antipode.iter().map(p).collect::<Result<Vec<_>>>()?;
        if scols.iter().any(|c| c.len() != n) {
            return Err(Error::Shape("antipode row length".into()));
        }
        let mut h = FiniteDimHopf::new(
            j.name.clone(),
            order,
            j.basis.clone(),
            p(&j.unit)?,
            mult,
            comult,
            p(&j.counit)?,
            Matrix::from_cols(n, &scols),
            j.grouplikes.clone(),
        )?;
        if let Some(inv) = &j.antipode_inverse {
            let cols = inv.iter().map(p).collect::<Result<Vec<_>>>()?;
            if cols.len() != n || cols.iter().any(|c| c.len() != n) {
                return Err(Error::Shape("antipode_inverse".into()));
            }
            h.antipode_inv = Some(Matrix::from_cols(n, &cols));
        }
        Ok(h)
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }
}

pub fn format_combination(labels: &[String], v: &[FieldElem]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let unit_label = labels[i] == "1";
        let (neg, body) = match c.as_rational() {
            Some(r) => {
                let neg = r.is_negative();
                let a = r.abs();
                let body = if unit_label {
                    a.to_string()
                } else if a.is_one() {
                    labels[i].clone()
                } else {
                    format!("{a}*{}", labels[i])
                };
                (neg, body)
            }
            None => {
                let body = if unit_label { format!("{{{c}}}") } else { format!("{{{c}}}*{}", labels[i]) };
                (false, body)
            }
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldSpec {
    pub cyclotomic_order: u16,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { cyclotomic_order: default_order() }
    }
}

/// On-disk form. `mult[i][j]`, `comult[i]`, `antipode[i]` list the
/// coefficients of b_i b_j, Δ(b_i) and S(b_i).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfJson {
    pub name: String,
    #[serde(default)]
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub comult: Vec<Vec<String>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
    #[serde(default)]
    pub grouplikes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inverse: Option<Vec<Vec<String>>>,
}

pub fn is_zero_vec(v: &[FieldElem]) -> bool {
    v.iter().all(|x| x.is_zero())
}
