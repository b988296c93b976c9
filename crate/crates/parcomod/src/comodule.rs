//! Partial comodules: axioms, operator algebras, simplicity and isomorphism.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hopf::{AxiomResult, FiniteDimHopf, Vector};
use crate::linalg::closure::{generate, GeneratedAlgebra};
use crate::linalg::{LinMap, Matrix, Subspace, Tensor};

/// ρ : M → M⊗H stored as a (d·n) × d matrix; column j is ρ(m_j),
/// row i·n + h the coefficient of m_i⊗b_h.
#[derive(Clone, Debug)]
pub struct PartialComodule {
    pub hopf: Arc<FiniteDimHopf>,
    pub dim: usize,
    pub rho: Matrix,
    pub provenance: serde_json::Value,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PcmReport {
    pub results: Vec<AxiomResult>,
    pub global: bool,
}

impl PcmReport {
    pub fn passed(&self, axiom: &str) -> bool {
        self.results.iter().any(|r| r.axiom == axiom && r.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

#[derive(Clone, Debug)]
pub enum Simplicity {
    SimpleCertified,
    NotSimple(Subspace),
    Inconclusive,
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::SimpleCertified)
    }
}

#[derive(Clone, Debug)]
pub enum IsoResult {
    Isomorphic(Matrix),
    NotIsomorphic,
    Undecided,
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartialComoduleJson {
    pub algebra: String,
    pub dim: usize,
    pub rho: Vec<Vec<String>>,
    #[serde(default)]
    pub provenance: serde_json::Value,
}

/// Unital algebra structure on a comodule's underlying space.
#[derive(Clone, Debug)]
pub struct AlgebraStructure {
    pub unit: Vector,
    /// `mult[i * d + j]` = m_i m_j
    pub mult: Vec<Vector>,
}

impl PartialComodule {
    pub fn new(hopf: Arc<FiniteDimHopf>, rho: Matrix) -> Result<Self> {
        let n = hopf.dim();
        let d = rho.cols();
        if rho.rows() != d * n {
            return Err(Error::Shape(format!("rho is {}×{}, expected {}×{d}", rho.rows(), d, d * n)));
        }
        Ok(PartialComodule { hopf, dim: d, rho, provenance: serde_json::Value::Null })
    }

    pub fn with_provenance(mut self, p: serde_json::Value) -> Self {
        self.provenance = p;
        self
    }

    /// The 1-dimensional comodule 1 ↦ 1⊗r.
    pub fn one_dim(hopf: Arc<FiniteDimHopf>, r: &[FieldElem]) -> Result<Self> {
        if r.len() != hopf.dim() {
            return Err(Error::Shape("element length".into()));
        }
        let rho = Matrix::from_cols(r.len(), &[r.to_vec()]);
        Self::new(hopf, rho)
    }

    /// H with ρ = Δ.
    pub fn regular(hopf: Arc<FiniteDimHopf>) -> Self {
        let n = hopf.dim();
        let rho = Matrix::from_cols(n * n, &hopf.comult);
        PartialComodule { hopf, dim: n, rho, provenance: serde_json::Value::Null }
    }

    pub fn zero(hopf: Arc<FiniteDimHopf>) -> Self {
        PartialComodule { hopf, dim: 0, rho: Matrix::zeros(0, 0), provenance: serde_json::Value::Null }
    }

    pub fn coact(&self, m: &[FieldElem]) -> Vector {
        self.rho.mul_vec(m)
    }

    /// E_h with entry (i, j) the coefficient of m_i⊗b_h in ρ(m_j).
    pub fn operator(&self, h: usize) -> Matrix {
        let n = self.hopf.dim();
        let d = self.dim;
        let mut e = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                e[(i, j)] = self.rho[(i * n + h, j)].clone();
            }
        }
        e
    }

    pub fn operators(&self) -> Vec<Matrix> {
        (0..self.hopf.dim()).map(|h| self.operator(h)).collect()
    }

    /// E_φ = (id⊗φ)ρ for a functional φ given by its values on the basis.
    pub fn operator_of(&self, phi: &[FieldElem]) -> Matrix {
        let mut e = Matrix::zeros(self.dim, self.dim);
        for (h, c) in phi.iter().enumerate() {
            if !c.is_zero() {
                e = e.add(&self.operator(h).scale(c));
            }
        }
        e
    }

    fn rho_tensor(&self) -> (Tensor, LinMap) {
        let n = self.hopf.dim();
        let d = self.dim;
        (Tensor::new(vec![d, n, d], self.rho.data().to_vec()), LinMap::new(&self.rho))
    }

    pub fn check_pcm(&self) -> PcmReport {
        let h = &self.hopf;
        let n = h.dim();
        let d = self.dim;
        let (r1, rmap) = self.rho_tensor();
        let witness = |a: &Tensor, b: &Tensor| -> Option<String> {
            let block = a.data.len() / d.max(1);
            (0..d)
                .find(|&j| (0..block).any(|k| a.data[k * d + j] != b.data[k * d + j]))
                .map(|j| format!("m_{j}"))
        };
        let mut results = Vec::new();
        let mut push = |axiom: &str, w: Option<String>| {
            results.push(AxiomResult { axiom: axiom.into(), pass: w.is_none(), witness: w });
        };

        let counit = r1.apply(1, 1, h.eps_map(), &[]);
        let id = Tensor::new(vec![d, d], Matrix::identity(d).data().to_vec());
        push("PCM1", witness(&counit, &id));

        let r2 = r1.apply(0, 1, &rmap, &[d, n]);
        let r3 = r2.apply(0, 1, &rmap, &[d, n]);
        let dl = r2.apply(1, 1, h.delta_map(), &[n, n]);
        let dr = r2.apply(2, 1, h.delta_map(), &[n, n]);
        let s = h.s_map();
        let mu = h.mu_map();
        // (Δ factor of ρ², S factor, μ start)
        for (name, lhs_base, s_at, mu_at) in [
            ("PCM2", &dl, 3, 2),
            ("PCM3", &dr, 2, 1),
            ("PCM4", &dl, 2, 2),
            ("PCM5", &dr, 1, 1),
        ] {
            let lhs = lhs_base.apply(s_at, 1, s, &[n]).apply(mu_at, 2, mu, &[n]);
            let rhs = r3.apply(s_at, 1, s, &[n]).apply(mu_at, 2, mu, &[n]);
            push(name, witness(&lhs, &rhs));
        }
        let md = r1.apply(1, 1, h.delta_map(), &[n, n]);
        let global = r2 == md;
        PcmReport { results, global }
    }

    /// PC1–PC3 for a unital algebra structure on M.
    pub fn check_partial_comodule_algebra(&self, alg: &AlgebraStructure) -> Result<PcmReport> {
        let d = self.dim;
        let h = &self.hopf;
        let n = h.dim();
        if alg.unit.len() != d || alg.mult.len() != d * d {
            return Err(Error::Shape("algebra structure does not match the comodule".into()));
        }
        let bmul = |a: &[FieldElem], b: &[FieldElem]| -> Vector {
            let mut out = vec![FieldElem::zero(); d];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    for (k, c) in alg.mult[i * d + j].iter().enumerate() {
                        if !c.is_zero() {
                            out[k] += &(&(x * y) * c);
                        }
                    }
                }
            }
            out
        };
        for i in 0..d {
            let bi = unit_vec(d, i);
            if bmul(&alg.unit, &bi) != bi || bmul(&bi, &alg.unit) != bi {
                return Err(Error::Input("algebra structure is not unital".into()));
            }
        }
        // multiplication in B⊗H^{⊗k}
        let tmul = |k: usize, x: &[FieldElem], y: &[FieldElem]| -> Vector {
            let hk = n.pow(k as u32);
            let mut out = vec![FieldElem::zero(); d * hk];
            for bi in 0..d {
                for bj in 0..d {
                    let xs = &x[bi * hk..(bi + 1) * hk];
                    let ys = &y[bj * hk..(bj + 1) * hk];
                    if xs.iter().all(|c| c.is_zero()) || ys.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let prod = h.tensor_mul(k, xs, ys);
                    for (bk, c) in alg.mult[bi * d + bj].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (t, p) in prod.iter().enumerate() {
                            if !p.is_zero() {
                                out[bk * hk + t] += &(c * p);
                            }
                        }
                    }
                }
            }
            out
        };
        let mut results = Vec::new();
        let pcm = self.check_pcm();
        results.push(AxiomResult { axiom: "PC1".into(), pass: pcm.passed("PCM1"), witness: None });

        let mut w = None;
        'pc2: for i in 0..d {
            for j in 0..d {
                let lhs = self.coact(&alg.mult[i * d + j]);
                let rhs = tmul(1, &self.coact(&unit_vec(d, i)), &self.coact(&unit_vec(d, j)));
                if lhs != rhs {
                    w = Some(format!("(m_{i}, m_{j})"));
                    break 'pc2;
                }
            }
        }
        results.push(AxiomResult { axiom: "PC2".into(), pass: w.is_none(), witness: w });

        let rho1 = self.coact(&alg.unit);
        let mut one_h = vec![FieldElem::zero(); d * n * n];
        for (idx, c) in rho1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (b, hh) = (idx / n, idx % n);
            for (u, cu) in h.unit.iter().enumerate() {
                if !cu.is_zero() {
                    one_h[(b * n + hh) * n + u] += &(c * cu);
                }
            }
        }
        let (_, rmap) = self.rho_tensor();
        let mut w = None;
        for a in 0..d {
            let ra = Tensor::new(vec![d, n], self.coact(&unit_vec(d, a)));
            let bd = ra.apply(1, 1, h.delta_map(), &[n, n]).data;
            let rr = ra.apply(0, 1, &rmap, &[d, n]).data;
            if tmul(2, &one_h, &bd) != rr || tmul(2, &bd, &one_h) != rr {
                w = Some(format!("m_{a}"));
                break;
            }
        }
        results.push(AxiomResult { axiom: "PC3".into(), pass: w.is_none(), witness: w });
        Ok(PcmReport { results, global: pcm.global })
    }

    pub fn operator_algebra(&self) -> GeneratedAlgebra {
        let gens: Vec<Vec<Matrix>> = self.operators().into_iter().map(|m| vec![m]).collect();
        generate(&[self.dim], &gens, true)
    }

    /// Smallest subcomodule containing v.
    pub fn spin(&self, v: &[FieldElem]) -> Subspace {
        let ops = self.operators();
        let mut s = Subspace::zero(self.dim);
        let mut queue = vec![v.to_vec()];
        while let Some(x) = queue.pop() {
            if s.insert(&x) {
                for e in &ops {
                    queue.push(e.mul_vec(&x));
                }
            }
        }
        s
    }

    pub fn is_simple(&self) -> Simplicity {
        let d = self.dim;
        if d == 0 {
            return Simplicity::Inconclusive;
        }
        if self.operator_algebra().dim() == d * d {
            return Simplicity::SimpleCertified;
        }
        let mut candidates: Vec<Vector> = (0..d).map(|i| unit_vec(d, i)).collect();
        for k in 2..=3.min(d) {
            for_each_combination(d, k, &mut |idx| {
                for signs in 0..(1usize << (k - 1)) {
                    let mut v = vec![FieldElem::zero(); d];
                    v[idx[0]] = FieldElem::one();
                    for (t, &i) in idx.iter().enumerate().skip(1) {
                        v[i] = FieldElem::from_int(if signs >> (t - 1) & 1 == 1 { -1 } else { 1 });
                    }
                    candidates.push(v);
                }
            });
        }
        for v in candidates {
            let s = self.spin(&v);
            if s.dim() < d {
                return Simplicity::NotSimple(s);
            }
        }
        Simplicity::Inconclusive
    }

    /// Space of comodule maps self → other, as matrices.
    pub fn hom_space(&self, other: &PartialComodule) -> Result<Vec<Matrix>> {
        if self.hopf.dim() != other.hopf.dim() {
            return Err(Error::Shape("parent algebras differ".into()));
        }
        let (dm, dn) = (self.dim, other.dim);
        let unknowns = dn * dm;
        let n = self.hopf.dim();
        let em = self.operators();
        let en = other.operators();
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for h in 0..n {
            // (f E^M_h − E^N_h f)[a][b] = Σ_c f[a][c] E^M[c][b] − Σ_c E^N[a][c] f[c][b]
            for a in 0..dn {
                for b in 0..dm {
                    let mut row = vec![FieldElem::zero(); unknowns];
                    for c in 0..dm {
                        let x = &em[h][(c, b)];
                        if !x.is_zero() {
                            row[a * dm + c] += x;
                        }
                    }
                    for c in 0..dn {
                        let x = &en[h][(a, c)];
                        if !x.is_zero() {
                            row[c * dm + b] -= x;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let sol = if rows.is_empty() {
            Matrix::identity(unknowns).row_vecs()
        } else {
            Matrix::from_rows(rows)?.kernel()
        };
        Ok(sol.into_iter().map(|v| Matrix::from_flat(dn, dm, v)).collect())
    }

    pub fn iso_test(&self, other: &PartialComodule) -> Result<IsoResult> {
        if self.dim != other.dim {
            return Ok(IsoResult::NotIsomorphic);
        }
        let sols = self.hom_space(other)?;
        if sols.is_empty() {
            return Ok(IsoResult::NotIsomorphic);
        }
        if self.dim == 0 {
            return Ok(IsoResult::Isomorphic(Matrix::zeros(0, 0)));
        }
        if self.is_simple().is_simple() && other.is_simple().is_simple() {
            return Ok(IsoResult::Isomorphic(sols[0].clone()));
        }
        let combine = |coef: &dyn Fn(usize) -> i64| {
            let mut f = Matrix::zeros(other.dim, self.dim);
            for (i, s) in sols.iter().enumerate() {
                f = f.add(&s.scale(&FieldElem::from_int(coef(i))));
            }
            f
        };
        let f = combine(&|i| i as i64 + 1);
        if f.is_invertible() {
            return Ok(IsoResult::Isomorphic(f));
        }
        for t in 0..100i64 {
            let f = combine(&|i| ((t + 2) * (i as i64 + 1) * (i as i64 + 3)) % 7 - 3);
            if f.is_invertible() {
                return Ok(IsoResult::Isomorphic(f));
            }
        }
        Ok(IsoResult::Undecided)
    }

    /// ρ^g(m) = m⁽⁰⁾ ⊗ g m⁽¹⁾.
    pub fn shift_by_grouplike(&self, g: &[FieldElem]) -> Result<PartialComodule> {
        if !self.hopf.is_grouplike(g) {
            return Err(Error::Input("shift element is not grouplike".into()));
        }
        let n = self.hopf.dim();
        let (t, _) = self.rho_tensor();
        let lg = LinMap::new(&self.hopf.left_mult_matrix(g));
        let out = t.apply(1, 1, &lg, &[n]);
        Ok(PartialComodule {
            hopf: self.hopf.clone(),
            dim: self.dim,
            rho: Matrix::from_flat(self.dim * n, self.dim, out.data),
            provenance: self.provenance.clone(),
        })
    }

    pub fn direct_sum(parts: &[PartialComodule]) -> Result<PartialComodule> {
        let first = parts.first().ok_or_else(|| Error::Input("empty direct sum".into()))?;
        let n = first.hopf.dim();
        if parts.iter().any(|p| p.hopf.dim() != n || p.hopf.name != first.hopf.name) {
            return Err(Error::Shape("direct sum over different algebras".into()));
        }
        let d: usize = parts.iter().map(|p| p.dim).sum();
        let mut rho = Matrix::zeros(d * n, d);
        let mut off = 0;
        for p in parts {
            for j in 0..p.dim {
                for i in 0..p.dim {
                    for h in 0..n {
                        rho[((off + i) * n + h, off + j)] = p.rho[(i * n + h, j)].clone();
                    }
                }
            }
            off += p.dim;
        }
        Ok(PartialComodule { hopf: first.hopf.clone(), dim: d, rho, provenance: serde_json::Value::Null })
    }

    /// Transports the coaction along an invertible change of basis P (new basis = columns of P).
    pub fn change_basis(&self, p: &Matrix) -> Result<PartialComodule> {
        let pinv = p.inverse().ok_or_else(|| Error::Input("change of basis is singular".into()))?;
        let ops: Vec<Matrix> = self.operators().iter().map(|e| pinv.mul(e).mul(p)).collect();
        Ok(Self::from_operators(self.hopf.clone(), &ops).with_provenance(self.provenance.clone()))
    }

    /// Rebuilds ρ from E_h.
    pub fn from_operators(hopf: Arc<FiniteDimHopf>, ops: &[Matrix]) -> PartialComodule {
        let n = hopf.dim();
        let d = ops.first().map_or(0, |m| m.rows());
        let mut rho = Matrix::zeros(d * n, d);
        for (h, e) in ops.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    rho[(i * n + h, j)] = e[(i, j)].clone();
                }
            }
        }
        PartialComodule { hopf, dim: d, rho, provenance: serde_json::Value::Null }
    }

    pub fn to_json(&self) -> PartialComoduleJson {
        PartialComoduleJson {
            algebra: self.hopf.name.clone(),
            dim: self.dim,
            rho: (0..self.dim).map(|j| self.rho.col(j).iter().map(|c| c.to_string()).collect()).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn from_json(hopf: Arc<FiniteDimHopf>, j: &PartialComoduleJson) -> Result<Self> {
        let n = hopf.dim();
        if j.rho.len() != j.dim || j.rho.iter().any(|r| r.len() != j.dim * n) {
            return Err(Error::Shape("rho must be dim × (dim·n)".into()));
        }
        let cols = j
            .rho
            .iter()
            .map(|r| r.iter().map(|c| FieldElem::parse(c, hopf.order).map_err(Error::from)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(hopf, Matrix::from_cols(j.dim * n, &cols))?.with_provenance(j.provenance.clone()))
    }
}

pub(crate) fn unit_vec(d: usize, i: usize) -> Vector {
    let mut v = vec![FieldElem::zero(); d];
    v[i] = FieldElem::one();
    v
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}
