//! Partial comodules W □ He built from subcentral idempotents.

use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use crate::catalog::characters::{central_primitive_idempotents, character_table, irreps, linear_characters, Irrep};
use crate::catalog::group::{FiniteGroup, Subgroup};
use crate::catalog::algebras::{dual_group_algebra, group_algebra, kac_coideal, kac_grouplike_candidates, kac_idempotents, CatalogIdempotent};
use crate::comodule::{unit_vec, PartialComodule};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hopf::{format_combination, is_zero_vec, FiniteDimHopf, Vector};
use crate::linalg::closure::generate;
use crate::linalg::{Matrix, QuotientMap, Subspace};

#[derive(Clone, Debug, Serialize)]
pub struct SubcentralReport {
    pub subcentral: bool,
    /// first failed condition
    pub failure: Option<String>,
}

/// Checks e ≠ 0, e² = e and e·e(1)⊗e(2) = e(1)·e⊗e(2).
pub fn is_subcentral(h: &FiniteDimHopf, e: &[FieldElem]) -> SubcentralReport {
    let fail = |s: &str| SubcentralReport { subcentral: false, failure: Some(s.into()) };
    if e.len() != h.dim() {
        return fail("wrong length");
    }
    if is_zero_vec(e) {
        return fail("e = 0");
    }
    if h.mul(e, e) != e {
        return fail("e² ≠ e");
    }
    let d = h.delta(e);
    let left = h.tensor_mul(2, &h.tensor(e, &h.one()), &d);
    let right = h.tensor_mul(2, &d, &h.tensor(e, &h.one()));
    if left != right {
        return fail("e·e(1)⊗e(2) ≠ e(1)·e⊗e(2)");
    }
    SubcentralReport { subcentral: true, failure: None }
}

/// (id⊗φ_b)Δ(x) for every dual basis functional φ_b.
fn delta_components(h: &FiniteDimHopf, x: &[FieldElem]) -> Vec<Vector> {
    let n = h.dim();
    let d = h.delta(x);
    (0..n).map(|b| (0..n).map(|a| d[a * n + b].clone()).collect()).collect()
}

#[derive(Clone, Debug)]
pub struct SubcentralIdempotent {
    pub hopf: Arc<FiniteDimHopf>,
    pub e: Vector,
    /// the right coideal subalgebra generated by e
    pub a: Subspace,
}

impl SubcentralIdempotent {
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// e is an integral of A_e: ae = ε(a)e = ea on a basis.
    pub fn is_integral(&self) -> bool {
        let h = &self.hopf;
        self.a.basis().iter().all(|a| {
            let want = h.scale(&self.e, &h.eps(a));
            h.mul(a, &self.e) == want && h.mul(&self.e, a) == want
        })
    }
}

pub fn generate_coideal_subalgebra(h: Arc<FiniteDimHopf>, e: &[FieldElem]) -> Result<SubcentralIdempotent> {
    let rep = is_subcentral(&h, e);
    if !rep.subcentral {
        return Err(Error::Verification(format!("not subcentral: {}", rep.failure.unwrap_or_default())));
    }
    let n = h.dim();
    let mut sub = Subspace::zero(n);
    let mut elems: Vec<Vector> = Vec::new();
    let mut queue: Vec<Vector> = Vec::new();
    let add = |v: Vector, sub: &mut Subspace, elems: &mut Vec<Vector>, queue: &mut Vec<Vector>| {
        if sub.insert(&v) {
            elems.push(v.clone());
            queue.push(v);
        }
    };
    add(h.one(), &mut sub, &mut elems, &mut queue);
    for c in delta_components(&h, e) {
        add(c, &mut sub, &mut elems, &mut queue);
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for c in delta_components(&h, &x) {
            add(c, &mut sub, &mut elems, &mut queue);
        }
        let snapshot = elems.clone();
        for y in &snapshot {
            add(h.mul(&x, y), &mut sub, &mut elems, &mut queue);
            add(h.mul(y, &x), &mut sub, &mut elems, &mut queue);
        }
    }
    if !sub.contains(e) {
        return Err(Error::Verification("e not in its coideal subalgebra".into()));
    }
    for a in sub.basis() {
        if h.mul(&a, e) != h.mul(e, &a) {
            return Err(Error::Verification("e is not central in A_e".into()));
        }
        if delta_components(&h, &a).iter().any(|c| !sub.contains(c)) {
            return Err(Error::Verification("A_e is not a right coideal".into()));
        }
    }
    Ok(SubcentralIdempotent { hopf: h, e: e.to_vec(), a: sub })
}

/// H̄ = H/HA⁺ on the complement of the non-pivot coordinates of HA⁺.
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub ha_plus: Subspace,
    pub map: QuotientMap,
    pub labels: Vec<String>,
    /// Δ̄ of each basis element, index c·m + d
    pub comult: Vec<Vector>,
    pub counit: Vector,
    /// ε-normalized grouplike images, distinct, π(1) first
    pub grouplikes: Vec<Vector>,
    pub grouplike_spanning: bool,
}

impl QuotientCoalgebra {
    pub fn dim(&self) -> usize {
        self.map.complement.len()
    }

    pub fn project(&self, x: &[FieldElem]) -> Vector {
        self.map.projection.mul_vec(x)
    }

    pub fn delta(&self, v: &[FieldElem]) -> Vector {
        let m = self.dim();
        let mut out = vec![FieldElem::zero(); m * m];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(&self.comult[c]) {
                if !y.is_zero() {
                    *o += &(x * y);
                }
            }
        }
        out
    }

    pub fn eps(&self, v: &[FieldElem]) -> FieldElem {
        let mut s = FieldElem::zero();
        for (x, y) in v.iter().zip(&self.counit) {
            s += &(x * y);
        }
        s
    }

    pub fn is_grouplike(&self, v: &[FieldElem]) -> bool {
        let m = self.dim();
        if !self.eps(v).is_one() {
            return false;
        }
        let d = self.delta(v);
        (0..m).all(|a| (0..m).all(|b| d[a * m + b] == &v[a] * &v[b]))
    }

    pub fn format(&self, v: &[FieldElem]) -> String {
        format_combination(&self.labels, v)
    }
}

pub fn quotient_coalgebra(a: &SubcentralIdempotent) -> Result<QuotientCoalgebra> {
    quotient_coalgebra_with(a, &[])
}

/// As [`quotient_coalgebra`], with extra grouplike candidates whose images are tried
/// after π(1), the declared grouplikes and the basis monomials.
pub fn quotient_coalgebra_with(a: &SubcentralIdempotent, extra: &[Vector]) -> Result<QuotientCoalgebra> {
    let h = &a.hopf;
    let n = h.dim();
    let one = h.one();
    let plus: Vec<Vector> = a.a.basis().iter().map(|x| h.sub(x, &h.scale(&one, &h.eps(x)))).collect();
    let mut gens = Vec::new();
    for j in 0..n {
        for y in &plus {
            gens.push(h.mul(&h.basis(j), y));
        }
    }
    let ha = Subspace::span(n, &gens);
    let map = ha.quotient_map();
    let m = map.complement.len();
    let pi = &map.projection;
    for y in ha.basis() {
        if !h.eps(&y).is_zero() {
            return Err(Error::Verification("ε does not vanish on HA⁺".into()));
        }
        for j in 0..n {
            if !ha.contains(&h.mul(&h.basis(j), &y)) {
                return Err(Error::Verification("HA⁺ is not a left ideal".into()));
            }
        }
        if !is_zero_vec(&pi_pi(pi, &h.delta(&y), n, m)) {
            return Err(Error::Verification("HA⁺ is not a coideal".into()));
        }
    }
    let comult: Vec<Vector> = map.complement.iter().map(|&c| pi_pi(pi, &h.comult[c], n, m)).collect();
    let counit: Vector = map.complement.iter().map(|&c| h.counit[c].clone()).collect();
    let labels = map.complement.iter().map(|&c| format!("π({})", h.labels[c])).collect();
    let mut q = QuotientCoalgebra {
        ha_plus: ha,
        map,
        labels,
        comult,
        counit,
        grouplikes: Vec::new(),
        grouplike_spanning: false,
    };
    for i in 0..n {
        if pi_pi(&q.map.projection, &h.comult[i], n, m) != q.delta(&q.project(&h.basis(i))) {
            return Err(Error::Verification("Δ̄∘π ≠ (π⊗π)∘Δ".into()));
        }
    }
    let mut cands = vec![q.project(&one)];
    cands.extend(h.grouplikes.iter().map(|&i| q.project(&h.basis(i))));
    cands.extend((0..n).map(|i| q.project(&h.basis(i))));
    cands.extend(extra.iter().map(|x| q.project(x)));
    let mut span = Subspace::zero(m);
    for c in cands {
        let ec = q.eps(&c);
        if ec.is_zero() {
            continue;
        }
        let g: Vector = c.iter().map(|x| x * &ec.inv()).collect();
        if q.is_grouplike(&g) && !q.grouplikes.contains(&g) {
            span.insert(&g);
            q.grouplikes.push(g);
        }
    }
    q.grouplike_spanning = span.dim() == m;
    Ok(q)
}

fn pi_pi(pi: &Matrix, t: &[FieldElem], n: usize, m: usize) -> Vector {
    let mut out = vec![FieldElem::zero(); m * m];
    for a in 0..n {
        for b in 0..n {
            let x = &t[a * n + b];
            if x.is_zero() {
                continue;
            }
            for c in 0..m {
                let pc = &pi[(c, a)];
                if pc.is_zero() {
                    continue;
                }
                let pcx = pc * x;
                for d in 0..m {
                    let pd = &pi[(d, b)];
                    if !pd.is_zero() {
                        out[c * m + d] += &(&pcx * pd);
                    }
                }
            }
        }
    }
    out
}

/// A right H̄-comodule; row i·m + c of `rho` is the coefficient of w_i⊗h̄_c.
#[derive(Clone, Debug)]
pub struct HbarComodule {
    pub dim: usize,
    pub rho: Matrix,
    pub description: String,
}

impl HbarComodule {
    pub fn grouplike(q: &QuotientCoalgebra, g: &[FieldElem]) -> Result<Self> {
        if !q.is_grouplike(g) {
            return Err(Error::Input("not a grouplike of H̄".into()));
        }
        Ok(HbarComodule { dim: 1, rho: Matrix::from_cols(q.dim(), &[g.to_vec()]), description: q.format(g) })
    }

    pub fn trivial(q: &QuotientCoalgebra) -> Self {
        let g = q.grouplikes[0].clone();
        HbarComodule { dim: 1, description: q.format(&g), rho: Matrix::from_cols(q.dim(), &[g]) }
    }

    pub fn operators(&self, m: usize) -> Vec<Matrix> {
        (0..m)
            .map(|c| {
                let mut e = Matrix::zeros(self.dim, self.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        e[(i, j)] = self.rho[(i * m + c, j)].clone();
                    }
                }
                e
            })
            .collect()
    }

    /// Coassociativity and counitality over H̄.
    pub fn check(&self, q: &QuotientCoalgebra) -> bool {
        let m = q.dim();
        let d = self.dim;
        if self.rho.rows() != d * m || self.rho.cols() != d {
            return false;
        }
        for j in 0..d {
            let col = self.rho.col(j);
            // (ρ⊗id)ρ(w_j) at (i, c, c') vs (id⊗Δ̄)ρ(w_j)
            let mut lhs = vec![FieldElem::zero(); d * m * m];
            let mut rhs = vec![FieldElem::zero(); d * m * m];
            for i in 0..d {
                for c in 0..m {
                    let x = &col[i * m + c];
                    if x.is_zero() {
                        continue;
                    }
                    for i2 in 0..d {
                        for c2 in 0..m {
                            let y = &self.rho[(i2 * m + c2, i)];
                            if !y.is_zero() {
                                lhs[(i2 * m + c2) * m + c] += &(x * y);
                            }
                        }
                    }
                    for (t, y) in q.comult[c].iter().enumerate() {
                        if !y.is_zero() {
                            rhs[i * m * m + t] += &(x * y);
                        }
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
            for i in 0..d {
                let mut s = FieldElem::zero();
                for c in 0..m {
                    s += &(&col[i * m + c] * &q.counit[c]);
                }
                if s != if i == j { FieldElem::one() } else { FieldElem::zero() } {
                    return false;
                }
            }
        }
        true
    }
}

fn spin_ops(ops: &[Matrix], v: &[FieldElem]) -> Subspace {
    let mut s = Subspace::zero(v.len());
    let mut queue = vec![v.to_vec()];
    while let Some(x) = queue.pop() {
        if s.insert(&x) {
            for e in ops {
                queue.push(e.mul_vec(&x));
            }
        }
    }
    s
}

fn restrict_ops(ops: &[Matrix], s: &Subspace) -> Vec<Matrix> {
    let basis = s.basis();
    ops.iter()
        .map(|e| {
            let cols: Vec<Vector> = basis.iter().map(|b| s.coords(&e.mul_vec(b)).expect("invariant subspace")).collect();
            Matrix::from_cols(s.dim(), &cols)
        })
        .collect()
}

fn ops_isomorphic(a: &[Matrix], b: &[Matrix]) -> bool {
    let d = a[0].rows();
    if b[0].rows() != d {
        return false;
    }
    // both simple: any nonzero intertwiner is an isomorphism
    let mut rows = Vec::new();
    for (x, y) in a.iter().zip(b) {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![FieldElem::zero(); d * d];
                for c in 0..d {
                    row[i * d + c] += &x[(c, j)];
                    row[c * d + j] -= &y[(i, c)];
                }
                rows.push(row);
            }
        }
    }
    !Matrix::from_rows(rows).map(|m| m.kernel().is_empty()).unwrap_or(true)
}

/// Simple right H̄-comodules: one per verified grouplike, then simple
/// subcomodules of the regular comodule found by spinning until Σ d² = dim H̄
/// or the candidates run out.
pub fn simple_hbar_comodules(q: &QuotientCoalgebra) -> Result<Vec<HbarComodule>> {
    let m = q.dim();
    let mut found: Vec<(Vec<Matrix>, HbarComodule)> = Vec::new();
    for g in &q.grouplikes {
        let w = HbarComodule::grouplike(q, g)?;
        found.push((w.operators(m), w));
    }
    let mut total = found.len();
    if q.grouplike_spanning {
        return Ok(found.into_iter().map(|(_, w)| w).collect());
    }
    let reg: Vec<Matrix> = (0..m)
        .map(|c| {
            let mut e = Matrix::zeros(m, m);
            for j in 0..m {
                for i in 0..m {
                    e[(i, j)] = q.comult[j][i * m + c].clone();
                }
            }
            e
        })
        .collect();
    let mut cands: Vec<Vector> = (0..m).map(|i| unit_vec(m, i)).collect();
    for i in 0..m {
        for j in i + 1..m {
            let mut v = unit_vec(m, i);
            v[j] = FieldElem::one();
            cands.push(v.clone());
            v[j] = FieldElem::from_int(-1);
            cands.push(v);
        }
    }
    for v in cands {
        if total == m {
            break;
        }
        let s = spin_ops(&reg, &v);
        let ops = restrict_ops(&reg, &s);
        let d = s.dim();
        let gens: Vec<Vec<Matrix>> = ops.iter().map(|e| vec![e.clone()]).collect();
        if generate(&[d], &gens, true).dim() != d * d {
            continue;
        }
        if found.iter().any(|(o, _)| ops_isomorphic(o, &ops)) {
            continue;
        }
        let mut rho = Matrix::zeros(d * m, d);
        for (c, e) in ops.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    rho[(i * m + c, j)] = e[(i, j)].clone();
                }
            }
        }
        let desc = format!("subcomodule of H̄ spun from {}", q.format(&v));
        let w = HbarComodule { dim: d, rho, description: desc };
        if !w.check(q) {
            return Err(Error::Verification("spun subcomodule is not an H̄-comodule".into()));
        }
        total += d * d;
        found.push((ops, w));
    }
    if total != m {
        log::warn!("simple H̄-comodules found cover {total} of dim H̄ = {m}");
    }
    Ok(found.into_iter().map(|(_, w)| w).collect())
}

/// He with λ = (π⊗id)Δ and ρ_e(x) = x(1)e⊗x(2), both in He-basis coordinates.
#[derive(Clone, Debug)]
pub struct HeBicomodule {
    pub he: Subspace,
    /// (m·k) × k, row c·k + b
    pub lambda: Matrix,
    pub rho: PartialComodule,
}

impl HeBicomodule {
    pub fn dim(&self) -> usize {
        self.he.dim()
    }
}

pub fn he_bicomodule(a: &SubcentralIdempotent, q: &QuotientCoalgebra) -> Result<HeBicomodule> {
    let h = &a.hopf;
    let n = h.dim();
    let m = q.dim();
    let e = &a.e;
    let he = Subspace::span(n, &(0..n).map(|i| h.mul(&h.basis(i), e)).collect::<Vec<_>>());
    let k = he.dim();
    let basis = he.basis();
    let pi = &q.map.projection;
    let coords = |v: &[FieldElem], what: &str| {
        he.coords(v).ok_or_else(|| Error::Verification(format!("{what} leaves He")))
    };
    let mut lambda = Matrix::zeros(m * k, k);
    let mut rho = Matrix::zeros(k * n, k);
    for (j, u) in basis.iter().enumerate() {
        let d = h.delta(u);
        for c in 0..m {
            let mut comp = vec![FieldElem::zero(); n];
            for a1 in 0..n {
                let p = &pi[(c, a1)];
                if p.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let x = &d[a1 * n + b];
                    if !x.is_zero() {
                        comp[b] += &(p * x);
                    }
                }
            }
            for (b, x) in coords(&comp, "λ")?.into_iter().enumerate() {
                lambda[(c * k + b, j)] = x;
            }
        }
        for hh in 0..n {
            let first: Vector = (0..n).map(|a1| d[a1 * n + hh].clone()).collect();
            if is_zero_vec(&first) {
                continue;
            }
            for (b, x) in coords(&h.mul(&first, e), "ρ_e")?.into_iter().enumerate() {
                rho[(b * n + hh, j)] = x;
            }
        }
    }
    let rho = PartialComodule::new(h.clone(), rho)?;
    if !rho.check_pcm().all_pass() {
        return Err(Error::Verification("ρ_e fails the partial comodule axioms".into()));
    }
    // (id⊗ρ_e)λ = (λ⊗id)ρ_e
    for j in 0..k {
        for c in 0..m {
            for b2 in 0..k {
                for hh in 0..n {
                    let mut l = FieldElem::zero();
                    let mut r = FieldElem::zero();
                    for b1 in 0..k {
                        l += &(&lambda[(c * k + b1, j)] * &rho.rho[(b2 * n + hh, b1)]);
                        r += &(&rho.rho[(b1 * n + hh, j)] * &lambda[(c * k + b2, b1)]);
                    }
                    if l != r {
                        return Err(Error::Verification("λ and ρ_e do not commute".into()));
                    }
                }
            }
        }
    }
    Ok(HeBicomodule { he, lambda, rho })
}

/// W □ He with coaction w⊗x ↦ w⊗x(1)e⊗x(2). The basis is the canonical
/// basis of the kernel inside W⊗He (index a·k + b).
pub fn cotensor_space(w: &HbarComodule, he: &HeBicomodule, m: usize) -> Subspace {
    let d = w.dim;
    let k = he.dim();
    let mut map = Matrix::zeros(d * m * k, d * k);
    for a in 0..d {
        for b in 0..k {
            let col = a * k + b;
            for a2 in 0..d {
                for c in 0..m {
                    let x = &w.rho[(a2 * m + c, a)];
                    if !x.is_zero() {
                        map[((a2 * m + c) * k + b, col)] += x;
                    }
                }
            }
            for c in 0..m {
                for b2 in 0..k {
                    let x = &he.lambda[(c * k + b2, b)];
                    if !x.is_zero() {
                        map[((a * m + c) * k + b2, col)] -= x;
                    }
                }
            }
        }
    }
    Subspace::kernel_of(&map)
}

/// Restricts (id_W⊗ρ_e) to a subspace of W⊗He.
fn coaction_on(he: &HeBicomodule, d: usize, space: &Subspace) -> Result<PartialComodule> {
    let hopf = he.rho.hopf.clone();
    let n = hopf.dim();
    let k = he.dim();
    let basis = space.basis();
    let r = basis.len();
    let mut rho = Matrix::zeros(r * n, r);
    for (j, v) in basis.iter().enumerate() {
        for hh in 0..n {
            let mut img = vec![FieldElem::zero(); d * k];
            for a in 0..d {
                for b in 0..k {
                    let x = &v[a * k + b];
                    if x.is_zero() {
                        continue;
                    }
                    for b2 in 0..k {
                        let y = &he.rho.rho[(b2 * n + hh, b)];
                        if !y.is_zero() {
                            img[a * k + b2] += &(x * y);
                        }
                    }
                }
            }
            if is_zero_vec(&img) {
                continue;
            }
            let c = space.coords(&img).ok_or_else(|| Error::Verification("coaction leaves the cotensor product".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                rho[(i * n + hh, j)] = x;
            }
        }
    }
    PartialComodule::new(hopf, rho)
}

pub fn cotensor_comodule(w: &HbarComodule, he: &HeBicomodule, q: &QuotientCoalgebra, e_repr: &str) -> Result<PartialComodule> {
    let space = cotensor_space(w, he, q.dim());
    let hopf = he.rho.hopf.clone();
    if space.dim() == 0 {
        log::warn!("empty cotensor product for e = {e_repr}, W = {}", w.description);
        return Ok(PartialComodule::zero(hopf).with_provenance(json!({"idempotent": e_repr, "W": w.description})));
    }
    let m = coaction_on(he, w.dim, &space)?;
    if !m.check_pcm().all_pass() {
        return Err(Error::Verification("cotensor product fails the partial comodule axioms".into()));
    }
    Ok(m.with_provenance(json!({"idempotent": e_repr, "W": w.description})))
}

/// {x ∈ He : λ(x) = π(1)⊗x} with the restricted coaction, cross-checked
/// against the cotensor product with the trivial comodule and against A_e·e.
pub fn coinvariants(a: &SubcentralIdempotent, q: &QuotientCoalgebra, he: &HeBicomodule) -> Result<(PartialComodule, Subspace)> {
    let h = &a.hopf;
    let m = q.dim();
    let k = he.dim();
    let p1 = q.project(&h.one());
    let mut map = he.lambda.clone();
    for c in 0..m {
        for b in 0..k {
            map[(c * k + b, b)] -= &p1[c];
        }
    }
    let space = Subspace::kernel_of(&map);
    if space != cotensor_space(&HbarComodule::trivial(q), he, m) {
        return Err(Error::Verification("coinvariants differ from the trivial cotensor product".into()));
    }
    let ae: Vec<Vector> = a.a.basis().iter().map(|x| he.he.coords(&h.mul(x, &a.e)).expect("Ae ⊆ He")).collect();
    if Subspace::span(k, &ae) != space {
        log::warn!("coinvariants differ from A_e·e for e = {}", h.format_element(&a.e));
    }
    let c = coaction_on(he, 1, &space)?;
    Ok((c.with_provenance(json!({"idempotent": h.format_element(&a.e), "W": "trivial"})), space))
}

/// The whole pipeline for one idempotent.
#[derive(Clone, Debug)]
pub struct Construction {
    pub idem: SubcentralIdempotent,
    pub quotient: QuotientCoalgebra,
    pub he: HeBicomodule,
}

impl Construction {
    pub fn new(h: Arc<FiniteDimHopf>, e: &[FieldElem]) -> Result<Self> {
        Self::with_candidates(h, e, &[])
    }

    /// `extra` are additional grouplike candidates for H̄.
    pub fn with_candidates(h: Arc<FiniteDimHopf>, e: &[FieldElem], extra: &[Vector]) -> Result<Self> {
        let idem = generate_coideal_subalgebra(h, e)?;
        let quotient = quotient_coalgebra_with(&idem, extra)?;
        let he = he_bicomodule(&idem, &quotient)?;
        Ok(Construction { idem, quotient, he })
    }

    pub fn hopf(&self) -> &Arc<FiniteDimHopf> {
        &self.idem.hopf
    }

    pub fn e_repr(&self) -> String {
        self.hopf().format_element(&self.idem.e)
    }

    pub fn cotensor(&self, w: &HbarComodule) -> Result<PartialComodule> {
        cotensor_comodule(w, &self.he, &self.quotient, &self.e_repr())
    }

    /// W □ He for the grouplike π(g) of H̄.
    pub fn with_grouplike(&self, g: &[FieldElem]) -> Result<PartialComodule> {
        let pg = self.quotient.project(g);
        let w = HbarComodule::grouplike(&self.quotient, &pg)?;
        self.cotensor(&w)
    }

    /// W □ He for every simple H̄-comodule W.
    pub fn simple_comodules(&self) -> Result<Vec<PartialComodule>> {
        simple_hbar_comodules(&self.quotient)?.iter().map(|w| self.cotensor(w)).collect()
    }

    pub fn coinvariants(&self) -> Result<PartialComodule> {
        Ok(coinvariants(&self.idem, &self.quotient, &self.he)?.0)
    }
}

/// One row of the group-case classification.
#[derive(Clone, Debug)]
pub struct GroupRow {
    pub subgroup: Vec<usize>,
    pub idempotent: Vector,
    pub equivalent: Vec<Vector>,
    pub dim_i: usize,
    pub index: usize,
    pub comodules: Vec<PartialComodule>,
}

impl GroupRow {
    pub fn dims(&self) -> Vec<usize> {
        self.comodules.iter().map(|c| c.dim).collect()
    }
}

fn distinct_values(v: &[FieldElem], support: &[usize]) -> usize {
    let mut seen: Vec<&FieldElem> = Vec::new();
    for &i in support {
        if !seen.contains(&&v[i]) {
            seen.push(&v[i]);
        }
    }
    seen.len()
}

struct Candidate {
    e: Vector,
    dim_i: usize,
}

/// Central idempotents of kK whose support generates K, grouped into
/// orbits under ν·e for linear characters ν of K.
fn orbits_for(g: &FiniteGroup, k: &Subgroup, n: u16) -> Result<Vec<(Candidate, Vec<Vector>)>> {
    let prims = central_primitive_idempotents(g, k, n)?;
    let degrees = character_table(&g.restrict(k), n)?.degrees;
    let ord = g.order();
    let mut cands: Vec<Candidate> = Vec::new();
    for mask in 1u64..(1 << prims.len()) {
        let mut e = vec![FieldElem::zero(); ord];
        let mut dim_i = 0;
        for (i, p) in prims.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (x, y) in e.iter_mut().zip(p) {
                    *x += y;
                }
                dim_i += degrees[i] * degrees[i];
            }
        }
        let support = (0..ord).filter(|&x| !e[x].is_zero());
        if g.generate(support) != k.mask {
            continue;
        }
        cands.push(Candidate { e, dim_i });
    }
    let local = g.restrict(k);
    let nus = linear_characters(&local, n)?;
    let mut assigned = vec![false; cands.len()];
    let mut out = Vec::new();
    for i in 0..cands.len() {
        if assigned[i] {
            continue;
        }
        let mut members: Vec<usize> = Vec::new();
        for nu in &nus {
            let mut f = cands[i].e.clone();
            for (li, &x) in k.elements.iter().enumerate() {
                f[x] = &f[x] * &nu[li];
            }
            let j = cands
                .iter()
                .position(|c| c.e == f)
                .ok_or_else(|| Error::Verification("character translate is not a candidate".into()))?;
            if !members.contains(&j) {
                members.push(j);
            }
        }
        members.sort_unstable();
        for &j in &members {
            assigned[j] = true;
        }
        let rep = *members
            .iter()
            .min_by_key(|&&j| (distinct_values(&cands[j].e, &k.elements), j))
            .unwrap();
        let equivalent = members.iter().filter(|&&j| j != rep).map(|&j| cands[j].e.clone()).collect();
        out.push((Candidate { e: cands[rep].e.clone(), dim_i: cands[rep].dim_i }, equivalent));
    }
    out.sort_by_key(|(c, _)| c.dim_i);
    Ok(out)
}

/// Simple partial kG-comodules: one row per subgroup K and orbit of
/// central idempotents of kK, with [G:K] grouplike translates each.
pub fn classify_group_simples(g: &FiniteGroup, n: u16) -> Result<Vec<GroupRow>> {
    let h = Arc::new(group_algebra(g, n));
    let mut rows = Vec::new();
    for k in g.subgroups() {
        for (cand, equivalent) in orbits_for(g, &k, n)? {
            let c = Construction::new(h.clone(), &cand.e)?;
            if c.idem.a != Subspace::span(g.order(), &k.elements.iter().map(|&x| h.basis(x)).collect::<Vec<_>>()) {
                return Err(Error::Verification("A_e differs from kK".into()));
            }
            let ke: Vec<Vector> = k.elements.iter().map(|&x| h.mul(&h.basis(x), &cand.e)).collect();
            if Subspace::span(g.order(), &ke).dim() != cand.dim_i || c.he.dim() != cand.dim_i * k.index() {
                return Err(Error::Verification("dim kK·e differs from Σχ(1)²".into()));
            }
            let mut comodules = Vec::new();
            for &r in &k.left_reps {
                let m = c.with_grouplike(&h.basis(r))?;
                if !m.is_simple().is_simple() {
                    return Err(Error::Verification(format!("translate by {} is not simple", g.labels[r])));
                }
                comodules.push(m);
            }
            rows.push(GroupRow {
                subgroup: k.elements.clone(),
                idempotent: cand.e,
                equivalent,
                dim_i: cand.dim_i,
                index: k.index(),
                comodules,
            });
        }
    }
    Ok(rows)
}

pub fn format_subgroup(g: &FiniteGroup, elems: &[usize]) -> String {
    let labels: Vec<&str> = elems.iter().map(|&x| g.labels[x].as_str()).collect();
    format!("{{{}}}", labels.join(", "))
}

/// Table-1 style CSV.
pub fn group_rows_csv(g: &FiniteGroup, h: &FiniteDimHopf, rows: &[GroupRow]) -> String {
    let mut out = String::from("subgroup,idempotent,equivalent_idempotents,dim_I,index,n_simples,dims\n");
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
    for r in rows {
        let eq: Vec<String> = r.equivalent.iter().map(|e| h.format_element(e)).collect();
        let dims: Vec<String> = r.dims().iter().map(|d| d.to_string()).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            quote(&format_subgroup(g, &r.subgroup)),
            quote(&h.format_element(&r.idempotent)),
            quote(&eq.join("; ")),
            r.dim_i,
            r.index,
            r.comodules.len(),
            quote(&dims.join(";")),
        ));
    }
    out
}

/// One row of a classification driven by declared idempotents.
#[derive(Clone, Debug)]
pub struct DeclaredRow {
    pub coideal: String,
    pub expr: String,
    pub element: Vector,
    pub coideal_dim: usize,
    pub coinvariant_dim: usize,
    pub comodules: Vec<PartialComodule>,
}

impl DeclaredRow {
    /// (dimension, multiplicity) in increasing dimension.
    pub fn dim_counts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for c in &self.comodules {
            match out.iter_mut().find(|(d, _)| *d == c.dim) {
                Some(p) => p.1 += 1,
                None => out.push((c.dim, 1)),
            }
        }
        out.sort_unstable();
        out
    }

    pub fn sum_of_squares(&self) -> usize {
        self.comodules.iter().map(|c| c.dim * c.dim).sum()
    }
}

/// Runs the construction for each declared idempotent, checking A_e
/// against the declared coideal subalgebra when one is given.
pub fn classify_declared(
    h: Arc<FiniteDimHopf>,
    idems: &[CatalogIdempotent],
    extra: &[Vector],
    coideal: &dyn Fn(&str) -> Option<Subspace>,
) -> Result<Vec<DeclaredRow>> {
    let mut rows = Vec::new();
    for ci in idems {
        let c = Construction::with_candidates(h.clone(), &ci.element, extra)?;
        if let Some(want) = coideal(ci.coideal) {
            if want != c.idem.a {
                return Err(Error::Verification(format!("A_e for {} is not {}", ci.expr, ci.coideal)));
            }
        }
        let comodules = c.simple_comodules()?;
        for m in &comodules {
            if !m.is_simple().is_simple() {
                log::warn!("cotensor product for {} is not certified simple", ci.expr);
            }
        }
        rows.push(DeclaredRow {
            coideal: ci.coideal.to_string(),
            expr: ci.expr.to_string(),
            element: ci.element.clone(),
            coideal_dim: c.idem.dim(),
            coinvariant_dim: c.coinvariants()?.dim,
            comodules,
        });
    }
    Ok(rows)
}

/// The declared catalog of the Kac–Paljutkin algebra, in catalog order.
pub fn classify_kac(h: Arc<FiniteDimHopf>) -> Result<Vec<DeclaredRow>> {
    let idems = kac_idempotents(&h)?;
    let extra = kac_grouplike_candidates(&h)?;
    let hh = h.clone();
    classify_declared(h, &idems, &extra, &|name| kac_coideal(&hh, name).ok())
}

/// "4*1^2 + 1*2^2"
pub fn format_dim_counts(counts: &[(usize, usize)]) -> String {
    let parts: Vec<String> = counts.iter().map(|(d, m)| format!("{m}*{d}^2")).collect();
    parts.join(" + ")
}

/// Table-2 style CSV.
pub fn declared_rows_csv(h: &FiniteDimHopf, rows: &[DeclaredRow]) -> String {
    let mut out = String::from("coideal,idempotent,normal_form,coideal_dim,dim_Ae,simples,sum_of_squares\n");
    let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            quote(&r.coideal),
            quote(&r.expr),
            quote(&h.format_element(&r.element)),
            r.coideal_dim,
            r.coinvariant_dim,
            quote(&format_dim_counts(&r.dim_counts())),
            r.sum_of_squares(),
        ));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BridgeReport {
    pub subset: Vec<String>,
    pub stabilizer: Vec<String>,
    pub w_dim: usize,
    pub module_dim: usize,
    pub cotensor_dim: usize,
    pub theta_invertible: bool,
    pub intertwines: bool,
    pub cotensor_simple: bool,
}

impl BridgeReport {
    pub fn ok(&self) -> bool {
        self.module_dim == self.cotensor_dim && self.theta_invertible && self.intertwines && self.cotensor_simple
    }
}

pub fn left_stabilizer(g: &FiniteGroup, x: u64) -> Subgroup {
    let mut mask = 0u64;
    for k in 0..g.order() {
        if (0..g.order()).filter(|&y| x >> y & 1 == 1).all(|y| x >> g.mul(k, y) & 1 == 1) {
            mask |= 1 << k;
        }
    }
    g.subgroup_from_mask(mask)
}

/// Compares W □ (kG*)e, e = Σ_{x∈X} p_x, with the partial kG-module
/// kX⁻¹⊗_{kK}W along θ(g_i⁻¹⊗w) = Σ_{h∈K} h·w ⊗ p_{hg_i}.
pub fn dual_group_bridge(g: &FiniteGroup, x: u64, w_index: usize, n: u16) -> Result<BridgeReport> {
    if x & (1 << g.identity) == 0 {
        return Err(Error::Input("X must contain the identity".into()));
    }
    let ord = g.order();
    let k = left_stabilizer(g, x);
    let local = g.restrict(&k);
    let reps_k = irreps(&local, n)?;
    let w: &Irrep = reps_k.get(w_index).ok_or_else(|| Error::Input("no such irreducible representation".into()))?;
    let d = w.dim;
    let rep_of = |h: usize| -> &Matrix {
        let li = k.elements.iter().position(|&y| y == h).unwrap();
        &w.mats[li]
    };

    // right cosets K g_i inside X, identity first
    let mut reps: Vec<usize> = Vec::new();
    let mut covered = 0u64;
    for y in 0..ord {
        if x >> y & 1 == 1 && covered >> y & 1 == 0 {
            reps.push(y);
            for &h in &k.elements {
                covered |= 1 << g.mul(h, y);
            }
        }
    }

    let hopf = Arc::new(dual_group_algebra(g, n));
    let mut e = vec![FieldElem::zero(); ord];
    for (y, c) in e.iter_mut().enumerate() {
        if x >> y & 1 == 1 {
            *c = FieldElem::one();
        }
    }
    let c = Construction::new(hopf.clone(), &e)?;
    let q = &c.quotient;
    let m = q.dim();
    let mut rho = Matrix::zeros(d * m, d);
    for &h in &k.elements {
        let ph = q.project(&hopf.basis(h));
        let r = rep_of(h);
        for i in 0..d {
            for j in 0..d {
                for cc in 0..m {
                    if !ph[cc].is_zero() && !r[(i, j)].is_zero() {
                        rho[(i * m + cc, j)] += &(&r[(i, j)] * &ph[cc]);
                    }
                }
            }
        }
    }
    let wc = HbarComodule { dim: d, rho, description: format!("irreducible representation {w_index} of K") };
    if !wc.check(q) {
        return Err(Error::Verification("W is not an H̄-comodule".into()));
    }
    let space = cotensor_space(&wc, &c.he, m);
    let module = c.cotensor(&wc)?;
    let kk = c.he.dim();

    let dz = reps.len() * d;
    let mut theta_cols = Vec::with_capacity(dz);
    for &gi in &reps {
        for j in 0..d {
            let mut v = vec![FieldElem::zero(); d * kk];
            for &h in &k.elements {
                let py = c.he.he.coords(&hopf.basis(g.mul(h, gi))).expect("p_y ∈ He");
                let r = rep_of(h);
                for a in 0..d {
                    if r[(a, j)].is_zero() {
                        continue;
                    }
                    for (b, y) in py.iter().enumerate() {
                        if !y.is_zero() {
                            v[a * kk + b] += &(&r[(a, j)] * y);
                        }
                    }
                }
            }
            theta_cols.push(space.coords(&v).ok_or_else(|| Error::Verification("θ leaves the cotensor product".into()))?);
        }
    }
    let theta = Matrix::from_cols(space.dim(), &theta_cols);
    let theta_invertible = space.dim() == dz && theta.is_invertible();

    let mut intertwines = true;
    for gg in 0..ord {
        let mut dmat = Matrix::zeros(dz, dz);
        for (i, &gi) in reps.iter().enumerate() {
            let t = g.mul(gi, g.inv(gg));
            if x >> t & 1 == 0 {
                continue;
            }
            let (jj, gj) = reps
                .iter()
                .enumerate()
                .find(|&(_, &gj)| k.contains(g.mul(t, g.inv(gj))))
                .map(|(a, &b)| (a, b))
                .unwrap();
            let hp = g.mul(t, g.inv(gj));
            let r = rep_of(g.inv(hp));
            for j in 0..d {
                for a in 0..d {
                    dmat[(jj * d + a, i * d + j)] = r[(a, j)].clone();
                }
            }
        }
        if theta.mul(&dmat) != module.operator(gg).mul(&theta) {
            intertwines = false;
            break;
        }
    }
    let label_set = |mask: u64| (0..ord).filter(|&y| mask >> y & 1 == 1).map(|y| g.labels[y].clone()).collect();
    Ok(BridgeReport {
        subset: label_set(x),
        stabilizer: label_set(k.mask),
        w_dim: d,
        module_dim: dz,
        cotensor_dim: module.dim,
        theta_invertible,
        intertwines,
        cotensor_simple: module.is_simple().is_simple(),
    })
}
