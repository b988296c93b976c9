//! Characters, irreducible representations and central idempotents.

use crate::catalog::group::{find_isomorphism, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// `chars[c][g]` = χ_c(g), g a local index of the group
    pub chars: Vec<Vec<FieldElem>>,
    pub degrees: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub dim: usize,
    /// one matrix per group element (local index)
    pub mats: Vec<Matrix>,
}

fn root(n: u16, order: usize) -> Result<i64> {
    if n as usize % order != 0 {
        return Err(Error::Unsupported(format!(
            "Q(ζ_{n}) lacks roots of unity of order {order}"
        )));
    }
    Ok((n as usize / order) as i64)
}

/// Linear characters as ζ_N exponents per element, found by assigning
/// roots of unity to a generating set.
pub fn linear_character_exponents(g: &FiniteGroup, n: u16) -> Result<Vec<Vec<i64>>> {
    let gens = g.generators();
    let nn = n as i64;
    let mut steps = Vec::new();
    for &x in &gens {
        steps.push(root(n, g.element_order(x))?);
    }
    let mut out = Vec::new();
    let mut choice = vec![0i64; gens.len()];
    loop {
        if let Some(ex) = extend_char(g, &gens, &choice, nn) {
            out.push(ex);
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += steps[i];
            if choice[i] < nn {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn extend_char(g: &FiniteGroup, gens: &[usize], exps: &[i64], n: i64) -> Option<Vec<i64>> {
    let ord = g.order();
    let mut v = vec![-1i64; ord];
    v[g.identity] = 0;
    let mut stack = vec![g.identity];
    while let Some(x) = stack.pop() {
        for (&s, &e) in gens.iter().zip(exps) {
            let y = g.mul(x, s);
            let val = (v[x] + e) % n;
            if v[y] < 0 {
                v[y] = val;
                stack.push(y);
            } else if v[y] != val {
                return None;
            }
        }
    }
    for a in 0..ord {
        for b in 0..ord {
            if v[g.mul(a, b)] != (v[a] + v[b]) % n {
                return None;
            }
        }
    }
    Some(v)
}

pub fn linear_characters(g: &FiniteGroup, n: u16) -> Result<Vec<Vec<FieldElem>>> {
    Ok(linear_character_exponents(g, n)?
        .into_iter()
        .map(|ex| ex.into_iter().map(|e| FieldElem::zeta_pow(n, e)).collect())
        .collect())
}

struct Builtin {
    preset: FiniteGroup,
    gens: Vec<usize>,
    linear: Vec<Vec<i64>>,
    two_dim: Vec<Vec<Vec<i64>>>,
    two_dim_i: bool,
}

fn builtin(order: usize) -> Vec<Builtin> {
    match order {
        6 => vec![Builtin {
            preset: FiniteGroup::s3(),
            gens: vec![1, 3],
            linear: vec![vec![1; 6], vec![1, 1, 1, -1, -1, -1]],
            two_dim: vec![vec![vec![0, -1, 1, -1], vec![0, 1, 1, 0]]],
            two_dim_i: false,
        }],
        8 => vec![
            Builtin {
                preset: FiniteGroup::d8(),
                gens: vec![1, 4],
                linear: vec![
                    vec![1; 8],
                    vec![1, 1, 1, 1, -1, -1, -1, -1],
                    vec![1, -1, 1, -1, 1, -1, 1, -1],
                    vec![1, -1, 1, -1, -1, 1, -1, 1],
                ],
                two_dim: vec![vec![vec![0, -1, 1, 0], vec![1, 0, 0, -1]]],
                two_dim_i: false,
            },
            Builtin {
                preset: FiniteGroup::q8(),
                gens: vec![2, 4],
                linear: vec![
                    vec![1; 8],
                    vec![1, 1, 1, 1, -1, -1, -1, -1],
                    vec![1, 1, -1, -1, 1, 1, -1, -1],
                    vec![1, 1, -1, -1, -1, -1, 1, 1],
                ],
                // i ↦ diag(ζ₄, −ζ₄) is encoded by the flag below
                two_dim: vec![vec![vec![1, 0, 0, -1], vec![0, -1, 1, 0]]],
                two_dim_i: true,
            },
        ],
        _ => vec![],
    }
}

/// Extends generator images to a representation of `g`.
fn extend_rep(g: &FiniteGroup, gens: &[usize], imgs: &[Matrix]) -> Option<Vec<Matrix>> {
    let d = imgs[0].rows();
    let mut mats: Vec<Option<Matrix>> = vec![None; g.order()];
    mats[g.identity] = Some(Matrix::identity(d));
    let mut stack = vec![g.identity];
    while let Some(x) = stack.pop() {
        for (&s, m) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let v = mats[x].as_ref().unwrap().mul(m);
            match &mats[y] {
                None => {
                    mats[y] = Some(v);
                    stack.push(y);
                }
                Some(old) if *old != v => return None,
                _ => {}
            }
        }
    }
    let mats: Vec<Matrix> = mats.into_iter().collect::<Option<_>>()?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if mats[g.mul(a, b)] != mats[a].mul(&mats[b]) {
                return None;
            }
        }
    }
    Some(mats)
}

/// Irreducible representations: linear characters for abelian groups,
/// built-in data transported along an isomorphism for S₃, D₈, Q₈.
pub fn irreps(g: &FiniteGroup, n: u16) -> Result<Vec<Irrep>> {
    if g.is_abelian() {
        return Ok(linear_characters(g, n)?
            .into_iter()
            .map(|c| Irrep { dim: 1, mats: c.into_iter().map(|x| Matrix::from_rows(vec![vec![x]]).unwrap()).collect() })
            .collect());
    }
    for b in builtin(g.order()) {
        let Some(iso) = find_isomorphism(&b.preset, &b.gens, g) else {
            continue;
        };
        if b.two_dim_i {
            root(n, 4)?;
        }
        let mut out = Vec::new();
        let lift = |vals: &Vec<FieldElem>| {
            let mut m = vec![FieldElem::zero(); g.order()];
            for (p, v) in vals.iter().enumerate() {
                m[iso[p]] = v.clone();
            }
            m
        };
        for lin in &b.linear {
            let vals: Vec<FieldElem> = lin.iter().map(|&x| FieldElem::from_int(x)).collect();
            let vals = lift(&vals);
            out.push(Irrep { dim: 1, mats: vals.into_iter().map(|x| Matrix::from_rows(vec![vec![x]]).unwrap()).collect() });
        }
        for gens2 in &b.two_dim {
            let mut imgs: Vec<Matrix> = gens2
                .iter()
                .map(|e| Matrix::from_rows(vec![
                    vec![FieldElem::from_int(e[0]), FieldElem::from_int(e[1])],
                    vec![FieldElem::from_int(e[2]), FieldElem::from_int(e[3])],
                ]).unwrap())
                .collect();
            if b.two_dim_i {
                imgs[0] = imgs[0].scale(&FieldElem::zeta_pow(n, (n / 4) as i64));
            }
            let pre = extend_rep(&b.preset, &b.gens, &imgs)
                .ok_or_else(|| Error::Verification("built-in representation is not a homomorphism".into()))?;
            let mut mats = vec![Matrix::zeros(2, 2); g.order()];
            for (p, m) in pre.into_iter().enumerate() {
                mats[iso[p]] = m;
            }
            out.push(Irrep { dim: 2, mats });
        }
        return Ok(out);
    }
    Err(Error::Unsupported(format!("no irreducible character table for {}", g.name)))
}

pub fn character_table(g: &FiniteGroup, n: u16) -> Result<CharacterTable> {
    let reps = irreps(g, n)?;
    let chars: Vec<Vec<FieldElem>> = reps.iter().map(|r| r.mats.iter().map(|m| m.trace()).collect()).collect();
    let t = CharacterTable { degrees: reps.iter().map(|r| r.dim).collect(), chars, classes: g.classes() };
    verify_orthogonality(g, &t)?;
    Ok(t)
}

pub fn verify_orthogonality(g: &FiniteGroup, t: &CharacterTable) -> Result<()> {
    let ord = g.order();
    let sq: usize = t.degrees.iter().map(|d| d * d).sum();
    if sq != ord || t.chars.len() != t.classes.len() {
        return Err(Error::Verification(format!("character degrees do not fit |G| = {ord}")));
    }
    for (i, a) in t.chars.iter().enumerate() {
        for (j, b) in t.chars.iter().enumerate() {
            let mut s = FieldElem::zero();
            for x in 0..ord {
                s += &(&a[x] * &b[x].conj());
            }
            let want = if i == j { ord as i64 } else { 0 };
            if s != FieldElem::from_int(want) {
                return Err(Error::Verification(format!("row orthogonality fails for ({i}, {j})")));
            }
        }
    }
    for (ci, c) in t.classes.iter().enumerate() {
        for (di, d) in t.classes.iter().enumerate() {
            let mut s = FieldElem::zero();
            for ch in &t.chars {
                s += &(&ch[c[0]] * &ch[d[0]].conj());
            }
            let want = if ci == di { (ord / c.len()) as i64 } else { 0 };
            if s != FieldElem::from_int(want) {
                return Err(Error::Verification(format!("column orthogonality fails for classes ({ci}, {di})")));
            }
        }
    }
    Ok(())
}

/// e_χ = χ(1)/|K| Σ_{h∈K} χ(h⁻¹) h for every irreducible χ of K, as vectors in kG.
pub fn central_primitive_idempotents(g: &FiniteGroup, k: &Subgroup, n: u16) -> Result<Vec<Vec<FieldElem>>> {
    let local = g.restrict(k);
    let t = character_table(&local, n)?;
    let ord = k.order() as i64;
    Ok(t
        .chars
        .iter()
        .zip(&t.degrees)
        .map(|(ch, &d)| {
            let c = FieldElem::frac(d as i64, ord);
            let mut v = vec![FieldElem::zero(); g.order()];
            for (li, &h) in k.elements.iter().enumerate() {
                v[h] = &c * &ch[local.inv(li)];
            }
            v
        })
        .collect())
}
