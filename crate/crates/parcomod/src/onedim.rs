//! One-dimensional partial comodules, given by the single element r = ρ(1).

use std::sync::Arc;

use serde::Serialize;

use crate::catalog::group::FiniteGroup;
use crate::comodule::PartialComodule;
use crate::construction::{cotensor_space, is_subcentral, Construction, HbarComodule};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hopf::{AxiomResult, FiniteDimHopf, Vector};
use crate::linalg::{Matrix, Subspace};

/// Applies `m` to the left factor of an element of H⊗H.
fn on_left(t: &[FieldElem], m: &Matrix, n: usize) -> Vector {
    let mut out = vec![FieldElem::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let c = &t[i * n + j];
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                let x = &m[(k, i)];
                if !x.is_zero() {
                    out[k * n + j] += &(c * x);
                }
            }
        }
    }
    out
}

fn on_right(t: &[FieldElem], m: &Matrix, n: usize) -> Vector {
    let mut out = vec![FieldElem::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let c = &t[i * n + j];
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                let x = &m[(k, j)];
                if !x.is_zero() {
                    out[i * n + k] += &(c * x);
                }
            }
        }
    }
    out
}

fn first_diff(a: &[FieldElem], b: &[FieldElem], h: &FiniteDimHopf) -> Option<String> {
    let n = h.dim();
    (0..a.len()).find(|&i| a[i] != b[i]).map(|i| format!("{}⊗{}", h.labels[i / n], h.labels[i % n]))
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckR {
    pub element: String,
    pub results: Vec<AxiomResult>,
    /// rS(r)r = r and S(r)rS(r) = S(r)
    pub von_neumann: bool,
}

impl CheckR {
    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// The five element equations PCM1r–PCM5r.
pub fn check_r(h: &FiniteDimHopf, r: &[FieldElem]) -> CheckR {
    let n = h.dim();
    let sr = h.s(r);
    let dr = h.delta(r);
    let s = &h.antipode;
    let mut results = Vec::new();
    let mut push = |axiom: &str, witness: Option<String>| {
        results.push(AxiomResult { axiom: axiom.into(), pass: witness.is_none(), witness });
    };
    let e = h.eps(r);
    push("PCM1r", (!e.is_one()).then(|| format!("ε(r) = {e}")));
    // r⊗rS(r) = r(1)⊗r(2)S(r)
    let lhs = h.tensor(r, &h.mul(r, &sr));
    let rhs = on_right(&dr, &h.right_mult_matrix(&sr), n);
    push("PCM2r", first_diff(&lhs, &rhs, h));
    // rS(r(1))⊗r(2) = rS(r)⊗r
    let lhs = on_left(&dr, &h.left_mult_matrix(r).mul(s), n);
    let rhs = h.tensor(&h.mul(r, &sr), r);
    push("PCM3r", first_diff(&lhs, &rhs, h));
    // r⊗S(r)r = r(1)⊗S(r(2))r
    let lhs = h.tensor(r, &h.mul(&sr, r));
    let rhs = on_right(&dr, &h.right_mult_matrix(r).mul(s), n);
    push("PCM4r", first_diff(&lhs, &rhs, h));
    // S(r)r⊗r = S(r)r(1)⊗r(2)
    let lhs = h.tensor(&h.mul(&sr, r), r);
    let rhs = on_left(&dr, &h.left_mult_matrix(&sr), n);
    push("PCM5r", first_diff(&lhs, &rhs, h));
    let von_neumann = h.mul(&h.mul(r, &sr), r) == r && h.mul(&h.mul(&sr, r), &sr) == sr;
    CheckR { element: h.format_element(r), results, von_neumann }
}

/// e e(1)⊗e(2) = e⊗e = e(1)e⊗e(2)
pub fn satisfies_pp(h: &FiniteDimHopf, e: &[FieldElem]) -> bool {
    let n = h.dim();
    let d = h.delta(e);
    let ee = h.tensor(e, e);
    on_left(&d, &h.left_mult_matrix(e), n) == ee && on_left(&d, &h.right_mult_matrix(e), n) == ee
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureFacts {
    pub s_r: bool,
    /// gr passes for every declared grouplike g
    pub g_r: bool,
    pub s_inv_r: bool,
    pub e_left: String,
    pub e_left_idempotent: bool,
    pub e_left_pp: bool,
    pub e_sub: String,
    pub e_sub_subcentral: bool,
    pub e_sub_pp: bool,
    /// π(S(r)) grouplike in H/HA⁺ for A generated by rS(r)
    pub pi_s_r_grouplike: bool,
    /// π(r) grouplike in H/HA⁺ for A generated by S⁻¹(r)r
    pub pi_r_grouplike: bool,
    /// ae = ε(a)e = ea on A generated by S⁻¹(r)r
    pub e_integral: bool,
}

impl ClosureFacts {
    pub fn all_hold(&self) -> bool {
        self.s_r
            && self.g_r
            && self.s_inv_r
            && self.e_left_idempotent
            && self.e_left_pp
            && self.e_sub_subcentral
            && self.e_sub_pp
            && self.pi_s_r_grouplike
            && self.pi_r_grouplike
            && self.e_integral
    }
}

fn require_pass(h: &FiniteDimHopf, r: &[FieldElem]) -> Result<()> {
    let c = check_r(h, r);
    if !c.pass() {
        let failed: Vec<&str> = c.results.iter().filter(|x| !x.pass).map(|x| x.axiom.as_str()).collect();
        return Err(Error::Input(format!("{} fails {}", c.element, failed.join(", "))));
    }
    Ok(())
}

pub fn closure_facts(h: &Arc<FiniteDimHopf>, r: &[FieldElem]) -> Result<ClosureFacts> {
    require_pass(h, r)?;
    let sr = h.s(r);
    let sinv = h.s_inv(r)?;
    let g_r = h.grouplike_basis().iter().all(|&g| check_r(h, &h.mul(&h.basis(g), r)).pass());
    let e_left = h.mul(r, &sr);
    let e_sub = h.mul(&sinv, r);
    let left = Construction::with_candidates(h.clone(), &e_left, &[sr.clone()])?;
    let sub = Construction::with_candidates(h.clone(), &e_sub, &[r.to_vec()])?;
    Ok(ClosureFacts {
        s_r: check_r(h, &sr).pass(),
        g_r,
        s_inv_r: check_r(h, &sinv).pass(),
        e_left: h.format_element(&e_left),
        e_left_idempotent: h.mul(&e_left, &e_left) == e_left,
        e_left_pp: satisfies_pp(h, &e_left),
        e_sub: h.format_element(&e_sub),
        e_sub_subcentral: is_subcentral(h, &e_sub).subcentral,
        e_sub_pp: satisfies_pp(h, &e_sub),
        pi_s_r_grouplike: left.quotient.is_grouplike(&left.quotient.project(&sr)),
        pi_r_grouplike: sub.quotient.is_grouplike(&sub.quotient.project(r)),
        e_integral: sub.idem.is_integral(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Reconstruction {
    pub element: String,
    pub idempotent: String,
    pub grouplike: String,
    pub cotensor_dim: usize,
    pub spanned_by_r: bool,
    pub isomorphic: bool,
}

impl Reconstruction {
    pub fn ok(&self) -> bool {
        self.cotensor_dim == 1 && self.spanned_by_r && self.isomorphic
    }
}

/// e = S⁻¹(r)r and W = π(r); the cotensor product must be the span of r
/// with coaction r ↦ r⊗r.
pub fn reconstruct(h: &Arc<FiniteDimHopf>, r: &[FieldElem]) -> Result<Reconstruction> {
    require_pass(h, r)?;
    let e = h.mul(&h.s_inv(r)?, r);
    let c = Construction::with_candidates(h.clone(), &e, &[r.to_vec()])?;
    let pr = c.quotient.project(r);
    let w = HbarComodule::grouplike(&c.quotient, &pr)?;
    let space = cotensor_space(&w, &c.he, c.quotient.dim());
    let spanned_by_r = match c.he.he.coords(r) {
        Some(x) => space == Subspace::span(c.he.dim(), &[x]),
        None => false,
    };
    let m = c.cotensor(&w)?;
    let input = PartialComodule::one_dim(h.clone(), r)?;
    let isomorphic = m.dim == 1 && m.iso_test(&input)?.is_iso();
    Ok(Reconstruction {
        element: h.format_element(r),
        idempotent: h.format_element(&e),
        grouplike: c.quotient.format(&pr),
        cotensor_dim: space.dim(),
        spanned_by_r,
        isomorphic,
    })
}

/// g·(1/|K|)Σ_{h∈K} h over subgroups K and left coset representatives g.
pub fn classify_group_onedim(g: &FiniteGroup, h: &FiniteDimHopf) -> Vec<Vector> {
    let mut out = Vec::new();
    for k in g.subgroups() {
        let avg = FieldElem::frac(1, k.order() as i64);
        for &t in &k.left_reps {
            let mut r = vec![FieldElem::zero(); h.dim()];
            for &x in &k.elements {
                r[g.mul(t, x)] = avg.clone();
            }
            out.push(r);
        }
    }
    out
}

/// Default γ samples: 1, −1, 2, ζ₄.
pub fn gamma_samples(order: u16) -> Result<Vec<FieldElem>> {
    if order % 4 != 0 {
        return Err(Error::Input(format!("Q(ζ_{order}) does not contain ζ_4")));
    }
    Ok(vec![FieldElem::one(), FieldElem::from_int(-1), FieldElem::from_int(2), FieldElem::zeta_pow(order, (order / 4) as i64)])
}

#[derive(Clone, Debug, Serialize)]
pub struct H4Entry {
    pub family: usize,
    pub gamma: Option<String>,
    pub element: String,
    #[serde(skip)]
    pub r: Vector,
    pub pass: bool,
}

/// The five families over Sweedler's algebra with basis 1, g, x, gx.
pub fn h4_catalog(h: &FiniteDimHopf, gammas: &[FieldElem]) -> Result<Vec<H4Entry>> {
    let idx = |l: &str| h.index_of(l).ok_or_else(|| Error::Input(format!("{} has no basis element {l}", h.name)));
    let (g, x, gx) = (h.basis(idx("g")?), h.basis(idx("x")?), h.basis(idx("gx")?));
    let half = h.scale(&h.add(&h.one(), &g), &FieldElem::frac(1, 2));
    let mut out = Vec::new();
    let mut push = |family: usize, gamma: Option<&FieldElem>, r: Vector| {
        let pass = check_r(h, &r).pass();
        out.push(H4Entry { family, gamma: gamma.map(|c| c.to_string()), element: h.format_element(&r), r, pass });
    };
    push(1, None, h.one());
    push(2, None, g.clone());
    push(3, None, half.clone());
    for c in gammas {
        push(4, Some(c), h.add(&half, &h.scale(&x, c)));
        push(5, Some(c), h.add(&half, &h.scale(&gx, c)));
    }
    Ok(out)
}

/// Pairwise non-isomorphic as 1-dimensional partial comodules.
pub fn pairwise_non_isomorphic(h: &Arc<FiniteDimHopf>, rs: &[Vector]) -> Result<bool> {
    let ms: Vec<PartialComodule> = rs.iter().map(|r| PartialComodule::one_dim(h.clone(), r)).collect::<Result<_>>()?;
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            if a.iso_test(b)?.is_iso() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

