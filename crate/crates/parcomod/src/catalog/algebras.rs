//! Catalog Hopf algebras: kG, kG*, Sweedler's H₄ and the Kac-Paljutkin algebra.

use crate::catalog::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::expr;
use crate::field::FieldElem;
use crate::hopf::{FiniteDimHopf, Vector};
use crate::linalg::{Matrix, Subspace};

fn e(n: usize, i: usize) -> Vector {
    let mut v = vec![FieldElem::zero(); n];
    v[i] = FieldElem::one();
    v
}

fn ee(n: usize, i: usize, j: usize) -> Vector {
    e(n * n, i * n + j)
}

pub fn group_algebra(g: &FiniteGroup, order: u16) -> FiniteDimHopf {
    let n = g.order();
    let mult = (0..n * n).map(|ij| e(n, g.mul(ij / n, ij % n))).collect();
    let comult = (0..n).map(|i| ee(n, i, i)).collect();
    let s_cols: Vec<Vector> = (0..n).map(|i| e(n, g.inv(i))).collect();
    let mut h = FiniteDimHopf::new(
        format!("k{}", g.name),
        order,
        g.labels.clone(),
        e(n, g.identity),
        mult,
        comult,
        vec![FieldElem::one(); n],
        Matrix::from_cols(n, &s_cols),
        (0..n).collect(),
    )
    .expect("group algebra shapes");
    h.antipode_inv = Some(h.antipode.clone());
    h
}

/// kG* on the basis p_g of point functions.
pub fn dual_group_algebra(g: &FiniteGroup, order: u16) -> FiniteDimHopf {
    let n = g.order();
    let zero = vec![FieldElem::zero(); n];
    let mult = (0..n * n).map(|ij| if ij / n == ij % n { e(n, ij / n) } else { zero.clone() }).collect();
    let mut comult = vec![vec![FieldElem::zero(); n * n]; n];
    for a in 0..n {
        for b in 0..n {
            comult[g.mul(a, b)][a * n + b] = FieldElem::one();
        }
    }
    let s_cols: Vec<Vector> = (0..n).map(|i| e(n, g.inv(i))).collect();
    let mut h = FiniteDimHopf::new(
        format!("k{}*", g.name),
        order,
        g.labels.iter().map(|l| format!("p_{l}")).collect(),
        vec![FieldElem::one(); n],
        mult,
        comult,
        e(n, g.identity),
        Matrix::from_cols(n, &s_cols),
        vec![],
    )
    .expect("dual group algebra shapes");
    h.grouplikes = h.grouplike_basis();
    h.antipode_inv = Some(h.antipode.clone());
    h
}

/// Structure constants from a monomial multiplication on basis indices.
fn from_monomials(
    name: &str,
    order: u16,
    labels: &[&str],
    mono: impl Fn(usize, usize) -> Vector,
    gens_comult: impl Fn(&dyn Fn(&Vector, &Vector) -> Vector) -> Vec<Vector>,
    counit: Vector,
    antipode_cols: Vec<Vector>,
    grouplikes: Vec<usize>,
) -> FiniteDimHopf {
    let n = labels.len();
    let mult: Vec<Vector> = (0..n * n).map(|ij| mono(ij / n, ij % n)).collect();
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    // provisional algebra to multiply tensors while building Δ
    let probe = FiniteDimHopf::new(
        name,
        order,
        labels.clone(),
        e(n, 0),
        mult.clone(),
        vec![vec![FieldElem::zero(); n * n]; n],
        counit.clone(),
        Matrix::identity(n),
        vec![],
    )
    .expect("shapes");
    let tmul = |a: &Vector, b: &Vector| probe.tensor_mul(2, a, b);
    let comult = gens_comult(&tmul);
    FiniteDimHopf::new(name, order, labels, e(n, 0), mult, comult, counit, Matrix::from_cols(n, &antipode_cols), grouplikes)
        .expect("shapes")
}

/// Sweedler's H₄ on 1, g, x, gx: g² = 1, x² = 0, xg = −gx,
/// Δ(x) = 1⊗x + x⊗g, S(x) = gx.
pub fn sweedler(order: u16) -> FiniteDimHopf {
    let n = 4;
    // basis index = a + 2b for g^a x^b
    let mono = |i: usize, j: usize| {
        let (a, b) = (i % 2, i / 2);
        let (c, d) = (j % 2, j / 2);
        if b + d > 1 {
            return vec![FieldElem::zero(); n];
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        let mut v = vec![FieldElem::zero(); n];
        v[(a + c) % 2 + 2 * (b + d)] = FieldElem::from_int(sign);
        v
    };
    let comult = |tm: &dyn Fn(&Vector, &Vector) -> Vector| {
        let one = ee(n, 0, 0);
        let g = ee(n, 1, 1);
        let mut x = ee(n, 0, 2);
        x[2 * n + 1] = FieldElem::one();
        let gx = tm(&g, &x);
        vec![one, g, x, gx]
    };
    let mut s = vec![e(n, 0), e(n, 1), e(n, 3), e(n, 2)];
    s[3][2] = FieldElem::from_int(-1);
    let mut h = from_monomials(
        "H4",
        order,
        &["1", "g", "x", "gx"],
        mono,
        comult,
        vec![FieldElem::one(), FieldElem::one(), FieldElem::zero(), FieldElem::zero()],
        s,
        vec![0, 1],
    );
    h.antipode_inv = h.antipode.inverse();
    h
}

const KAC_LABELS: [&str; 8] = ["1", "x", "y", "z", "xy", "xz", "yz", "xyz"];

fn kac_index(a: usize, b: usize, c: usize) -> usize {
    match (a, b, c) {
        (0, 0, 0) => 0,
        (1, 0, 0) => 1,
        (0, 1, 0) => 2,
        (0, 0, 1) => 3,
        (1, 1, 0) => 4,
        (1, 0, 1) => 5,
        (0, 1, 1) => 6,
        _ => 7,
    }
}

fn kac_exps(i: usize) -> (usize, usize, usize) {
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)][i]
}

/// The Kac-Paljutkin algebra on x^a y^b z^c: zx = yz, zy = xz,
/// z² = ½(1 + x + y − xy), Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z).
pub fn kac(order: u16) -> FiniteDimHopf {
    let n = 8;
    let mono = |i: usize, j: usize| {
        let (a, b, c) = kac_exps(i);
        let (mut a2, mut b2, c2) = kac_exps(j);
        if c == 1 {
            std::mem::swap(&mut a2, &mut b2);
        }
        let (aa, bb) = ((a + a2) % 2, (b + b2) % 2);
        let mut v = vec![FieldElem::zero(); n];
        if c + c2 < 2 {
            v[kac_index(aa, bb, c + c2)] = FieldElem::one();
        } else {
            for (da, db, s) in [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, -1)] {
                v[kac_index((aa + da) % 2, (bb + db) % 2, 0)] += &FieldElem::frac(s, 2);
            }
        }
        v
    };
    let comult = |tm: &dyn Fn(&Vector, &Vector) -> Vector| {
        let d1 = ee(n, 0, 0);
        let dx = ee(n, 1, 1);
        let dy = ee(n, 2, 2);
        let mut f = vec![FieldElem::zero(); n * n];
        f[0] = FieldElem::frac(1, 2);
        f[1] = FieldElem::frac(1, 2);
        f[2 * n] = FieldElem::frac(1, 2);
        f[2 * n + 1] = FieldElem::frac(-1, 2);
        let dz = tm(&f, &ee(n, 3, 3));
        let dxy = tm(&dx, &dy);
        let dxz = tm(&dx, &dz);
        let dyz = tm(&dy, &dz);
        let dxyz = tm(&dxy, &dz);
        vec![d1, dx, dy, dz, dxy, dxz, dyz, dxyz]
    };
    // S(x^a y^b z^c) = z^c y^b x^a
    let s_cols: Vec<Vector> = (0..n)
        .map(|i| {
            let (a, b, c) = kac_exps(i);
            let mut r = e(n, 0);
            for _ in 0..c {
                r = mul_raw(&mono, &r, &e(n, 3));
            }
            for _ in 0..b {
                r = mul_raw(&mono, &r, &e(n, 2));
            }
            for _ in 0..a {
                r = mul_raw(&mono, &r, &e(n, 1));
            }
            r
        })
        .collect();
    let mut h = from_monomials("Kac", order, &KAC_LABELS, mono, comult, vec![FieldElem::one(); n], s_cols, vec![0, 1, 2, 4]);
    h.antipode_inv = h.antipode.inverse();
    h
}

fn mul_raw(mono: &impl Fn(usize, usize) -> Vector, a: &Vector, b: &Vector) -> Vector {
    let n = a.len();
    let mut out = vec![FieldElem::zero(); n];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            for (k, c) in mono(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(&(x * y) * c);
                }
            }
        }
    }
    out
}

/// A primitive 8th root of unity ζ₈ in Q(ζ_N).
pub fn zeta8(order: u16) -> Result<FieldElem> {
    if order % 8 != 0 {
        return Err(Error::Unsupported(format!("the Kac-Paljutkin catalog needs 8 | N, got N = {order}")));
    }
    Ok(FieldElem::zeta_pow(order, (order / 8) as i64))
}

/// Bindings `s`, `sbar`, `zeta8` used by the catalog expressions.
pub fn kac_symbols(h: &FiniteDimHopf) -> Result<Vec<(&'static str, Vector)>> {
    let z8 = zeta8(h.order)?;
    let i = z8.pow(2);
    let one = FieldElem::one();
    let half = FieldElem::frac(1, 2);
    let a = &(&one - &i) * &half;
    let b = &(&one + &i) * &half;
    let z = h.basis(3);
    let xz = h.basis(5);
    let s = h.add(&h.scale(&z, &a), &h.scale(&xz, &b));
    let sbar = h.add(&h.scale(&z, &b), &h.scale(&xz, &a));
    Ok(vec![("s", s), ("sbar", sbar), ("zeta8", h.scale(&h.unit, &z8))])
}

/// g·s and g·s̄ for the grouplikes g of 𝒜, tried as grouplike candidates in quotients.
pub fn kac_grouplike_candidates(h: &FiniteDimHopf) -> Result<Vec<Vector>> {
    let sym = kac_symbols(h)?;
    let mut out = Vec::new();
    for (_, t) in &sym[..2] {
        for &g in &h.grouplikes {
            out.push(h.mul(&h.basis(g), t));
        }
    }
    Ok(out)
}

/// Right coideal subalgebras of 𝒜 by name, as spans.
pub fn kac_coideal(h: &FiniteDimHopf, name: &str) -> Result<Subspace> {
    let sym = kac_symbols(h)?;
    let get = |k: &str| sym.iter().find(|(n, _)| *n == k).map(|(_, v)| v.clone()).unwrap();
    let b = |i: usize| h.basis(i);
    let vecs = match name {
        "<1>" => vec![b(0)],
        "<1,x>" => vec![b(0), b(1)],
        "<1,y>" => vec![b(0), b(2)],
        "<1,xy>" => vec![b(0), b(4)],
        "<1,x,y,xy>" => vec![b(0), b(1), b(2), b(4)],
        "S1" => {
            let s = get("s");
            vec![b(0), b(4), s.clone(), h.mul(&b(4), &s)]
        }
        "S2" => {
            let s = get("sbar");
            vec![b(0), b(4), s.clone(), h.mul(&b(4), &s)]
        }
        "A" => (0..8).map(b).collect(),
        _ => return Err(Error::Input(format!("unknown coideal subalgebra {name}"))),
    };
    Ok(Subspace::span(8, &vecs))
}

#[derive(Clone, Debug)]
pub struct CatalogIdempotent {
    pub coideal: &'static str,
    pub expr: &'static str,
    pub element: Vector,
}

/// The declared subcentral idempotent representatives of 𝒜.
pub const KAC_IDEMPOTENTS: [(&str, &str); 16] = [
    ("<1>", "1"),
    ("<1,x>", "(1 + x)/2"),
    ("<1,y>", "(1 + y)/2"),
    ("<1,xy>", "(1 + xy)/2"),
    ("<1,x,y,xy>", "(1 + x + y + xy)/4"),
    ("<1,x,y,xy>", "(3 - x - y - xy)/4"),
    ("S1", "(1 + xy + s + xy*s)/4"),
    ("S1", "(2 + (1 + zeta8)*s + (1 - zeta8)*xy*s)/4"),
    ("S1", "(3 - xy - s - xy*s)/4"),
    ("S2", "(1 + xy + sbar + xy*sbar)/4"),
    ("S2", "(2 + (1 - zeta8^7)*sbar + (1 + zeta8^7)*xy*sbar)/4"),
    ("S2", "(3 - xy - sbar - xy*sbar)/4"),
    ("A", "(1 + x + y + xy + z + xz + yz + xyz)/8"),
    ("A", "(3 - x - y + 3*xy + z + xz + yz + xyz)/8"),
    ("A", "(5 + x + y - 3*xy + z + xz + yz + xyz)/8"),
    ("A", "(7 - x - y - xy - z - xz - yz - xyz)/8"),
];

pub fn kac_idempotents(h: &FiniteDimHopf) -> Result<Vec<CatalogIdempotent>> {
    let sym = kac_symbols(h)?;
    KAC_IDEMPOTENTS
        .iter()
        .map(|&(coideal, ex)| {
            Ok(CatalogIdempotent { coideal, expr: ex, element: expr::parse_with(h, ex, &sym)? })
        })
        .collect()
}

/// The normalized integral t of 𝒜.
pub fn kac_integral(h: &FiniteDimHopf) -> Vector {
    vec![FieldElem::frac(1, 8); h.dim()]
}

/// Algebra presets: `sweedler`, `kac`, or a group preset (group algebra).
pub fn preset_algebra(name: &str, order: u16) -> Result<FiniteDimHopf> {
    match name {
        "sweedler" | "h4" => Ok(sweedler(order)),
        "kac" => {
            zeta8(order)?;
            Ok(kac(order))
        }
        _ => Ok(group_algebra(&FiniteGroup::preset(name)?, order)),
    }
}
