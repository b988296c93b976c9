//! H_par = T(H)/I by vector enumeration, representation lower bounds, and A_par.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::comodule::PartialComodule;
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hopf::{FiniteDimHopf, Vector};
use crate::linalg::closure::{blocks_flatten, blocks_mul, blocks_unflatten, generate, Blocks};
use crate::linalg::{Echelon, Matrix, Subspace};

pub type Word = Vec<u8>;
type Sparse = Vec<(usize, FieldElem)>;

/// Generators of I over the word basis of T≤3, with the unit letter eliminated.
#[derive(Clone, Debug)]
pub struct RelationSpace {
    /// basis indices of H used as letters
    pub letters: Vec<usize>,
    pub unit_index: usize,
    pub generated: usize,
    pub relations: Vec<Vec<(Word, FieldElem)>>,
}

fn word_order(a: &Word, b: &Word) -> std::cmp::Ordering {
    (a.len(), a).cmp(&(b.len(), b))
}

pub fn build_relations(h: &FiniteDimHopf) -> RelationSpace {
    let n = h.dim();
    let u = (0..n).find(|&i| !h.unit[i].is_zero()).expect("nonzero unit");
    let cu = h.unit[u].inv();
    let letters: Vec<usize> = (0..n).filter(|&i| i != u).collect();
    let mut lid = vec![usize::MAX; n];
    for (k, &b) in letters.iter().enumerate() {
        lid[b] = k;
    }
    // b as a combination of words: a letter, or the unit substituted out
    let coords = |b: usize| -> Vec<(Word, FieldElem)> {
        if b != u {
            return vec![(vec![lid[b] as u8], FieldElem::one())];
        }
        let mut r = vec![(Vec::new(), cu.clone())];
        for (i, c) in h.unit.iter().enumerate() {
            if i != u && !c.is_zero() {
                r.push((vec![lid[i] as u8], -&(&cu * c)));
            }
        }
        r
    };
    let sparse = |v: &[FieldElem]| -> Vec<(usize, FieldElem)> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    };
    let add = |r: &mut BTreeMap<Word, FieldElem>, parts: &[&Vec<(Word, FieldElem)>], c: &FieldElem| {
        let mut acc: Vec<(Word, FieldElem)> = vec![(Vec::new(), c.clone())];
        for p in parts {
            let mut next = Vec::new();
            for (w, x) in &acc {
                for (w2, y) in p.iter() {
                    let mut ww = w.clone();
                    ww.extend_from_slice(w2);
                    next.push((ww, x * y));
                }
            }
            acc = next;
        }
        for (w, x) in acc {
            let e = r.entry(w).or_insert_with(FieldElem::zero);
            *e += &x;
        }
    };
    let coord_cache: Vec<Vec<(Word, FieldElem)>> = (0..n).map(coords).collect();
    let mut rels: Vec<BTreeMap<Word, FieldElem>> = Vec::new();
    for hh in 0..n {
        for k in 0..n {
            // h⊗k(1)⊗S(k(2)) − hk(1)⊗S(k(2))
            let mut r = BTreeMap::new();
            for (t, c) in sparse(&h.comult[k]) {
                let (k1, k2) = (t / n, t % n);
                for (s, cs) in sparse(&h.antipode.col(k2)) {
                    let c2 = &c * &cs;
                    add(&mut r, &[&coord_cache[hh], &coord_cache[k1], &coord_cache[s]], &c2);
                    for (p, cp) in sparse(&h.mult[hh * n + k1]) {
                        add(&mut r, &[&coord_cache[p], &coord_cache[s]], &-&(&c2 * &cp));
                    }
                }
            }
            rels.push(r);
            // h(1)⊗S(h(2))⊗k − h(1)⊗S(h(2))k
            let mut r = BTreeMap::new();
            for (t, c) in sparse(&h.comult[hh]) {
                let (h1, h2) = (t / n, t % n);
                for (s, cs) in sparse(&h.antipode.col(h2)) {
                    let c2 = &c * &cs;
                    add(&mut r, &[&coord_cache[h1], &coord_cache[s], &coord_cache[k]], &c2);
                    for (p, cp) in sparse(&h.mult[s * n + k]) {
                        add(&mut r, &[&coord_cache[h1], &coord_cache[p]], &-&(&c2 * &cp));
                    }
                }
            }
            rels.push(r);
        }
    }
    let generated = rels.len();
    // echelon in (length, word) order, pivot = largest word
    let mut piv: BTreeMap<Word, BTreeMap<Word, FieldElem>> = BTreeMap::new();
    let mut out = Vec::new();
    for mut r in rels {
        r.retain(|_, c| !c.is_zero());
        loop {
            let Some(w) = r.keys().filter(|w| piv.contains_key(*w)).max_by(|a, b| word_order(a, b)).cloned() else {
                break;
            };
            let c = r.remove(&w).unwrap();
            for (w2, c2) in &piv[&w] {
                if *w2 == w {
                    continue;
                }
                let e = r.entry(w2.clone()).or_insert_with(FieldElem::zero);
                *e -= &(&c * c2);
                if e.is_zero() {
                    r.remove(w2);
                }
            }
        }
        let Some(w) = r.keys().max_by(|a, b| word_order(a, b)).cloned() else {
            continue;
        };
        let c = r[&w].inv();
        let r: BTreeMap<Word, FieldElem> = r.into_iter().map(|(k, v)| (k, &v * &c)).collect();
        out.push(r.iter().map(|(w, c)| (w.clone(), c.clone())).collect());
        piv.insert(w, r);
    }
    RelationSpace { letters, unit_index: u, generated, relations: out }
}

#[derive(Clone, Debug, Default)]
pub struct VeConfig {
    /// longest word that may be defined; `None` for no limit
    pub max_degree: Option<usize>,
    pub memory_budget_mb: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    /// vectors processed between checkpoint writes
    pub checkpoint_every: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VeStatus {
    Closed,
    BudgetExceeded(String),
}

/// Vector enumeration state: vectors are words, dead vectors carry their
/// expression in smaller indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Enumeration {
    pub version: u32,
    pub algebra: String,
    pub letters: usize,
    parent: Vec<(usize, u8)>,
    len: Vec<usize>,
    table: Vec<Option<Sparse>>,
    dead: Vec<Option<Sparse>>,
    next: usize,
    stored: usize,
}

const CHECKPOINT_VERSION: u32 = 1;

impl Enumeration {
    pub fn new(algebra: &str, letters: usize) -> Self {
        Enumeration {
            version: CHECKPOINT_VERSION,
            algebra: algebra.to_string(),
            letters,
            parent: vec![(usize::MAX, 0)],
            len: vec![0],
            table: vec![None; letters],
            dead: vec![None],
            next: 0,
            stored: 0,
        }
    }

    pub fn defined(&self) -> usize {
        self.len.len()
    }

    pub fn alive(&self) -> Vec<usize> {
        (0..self.defined()).filter(|&i| self.dead[i].is_none()).collect()
    }

    pub fn word(&self, mut i: usize) -> Word {
        let mut w = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_vec(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let e: Enumeration = serde_json::from_slice(&std::fs::read(path)?)?;
        if e.version != CHECKPOINT_VERSION {
            return Err(Error::Input(format!("checkpoint version {} unsupported", e.version)));
        }
        Ok(e)
    }

    fn reduce(&self, x: BTreeMap<usize, FieldElem>) -> BTreeMap<usize, FieldElem> {
        let mut x = x;
        x.retain(|_, c| !c.is_zero());
        loop {
            let Some(k) = x.keys().rev().find(|&&k| self.dead[k].is_some()).copied() else {
                return x;
            };
            let c = x.remove(&k).unwrap();
            for (j, d) in self.dead[k].as_ref().unwrap() {
                let e = x.entry(*j).or_insert_with(FieldElem::zero);
                *e += &(&c * d);
                if e.is_zero() {
                    x.remove(j);
                }
            }
        }
    }

    fn define(&mut self, i: usize, g: u8, max_degree: Option<usize>) -> Result<usize> {
        let l = self.len[i] + 1;
        if max_degree.is_some_and(|m| l > m) {
            return Err(Error::Budget(format!("word length {l} exceeds max degree")));
        }
        let k = self.defined();
        self.parent.push((i, g));
        self.len.push(l);
        self.dead.push(None);
        self.table.extend(std::iter::repeat_n(None, self.letters));
        self.table[i * self.letters + g as usize] = Some(vec![(k, FieldElem::one())]);
        self.stored += 1;
        Ok(k)
    }

    fn img(&mut self, x: BTreeMap<usize, FieldElem>, g: u8, cfg: &VeConfig) -> Result<BTreeMap<usize, FieldElem>> {
        let x = self.reduce(x);
        let mut out: BTreeMap<usize, FieldElem> = BTreeMap::new();
        for (i, c) in x {
            let slot = i * self.letters + g as usize;
            if self.table[slot].is_none() {
                self.define(i, g, cfg.max_degree)?;
            }
            for (j, d) in self.table[slot].as_ref().unwrap() {
                let e = out.entry(*j).or_insert_with(FieldElem::zero);
                *e += &(&c * d);
            }
        }
        Ok(self.reduce(out))
    }

    fn add_relation(&mut self, x: BTreeMap<usize, FieldElem>, cfg: &VeConfig) -> Result<()> {
        let mut queue = vec![x];
        while let Some(x) = queue.pop() {
            let x = self.reduce(x);
            let Some((&p, cp)) = x.iter().next_back() else {
                continue;
            };
            let ci = cp.inv();
            let expr: Sparse = x.iter().filter(|(&j, _)| j != p).map(|(&j, d)| (j, -&(d * &ci))).collect();
            self.stored += expr.len();
            self.dead[p] = Some(expr.clone());
            for g in 0..self.letters as u8 {
                let Some(u) = self.table[p * self.letters + g as usize].clone() else {
                    continue;
                };
                let e = self.img(expr.iter().cloned().collect(), g, cfg)?;
                let mut diff: BTreeMap<usize, FieldElem> = u.into_iter().collect();
                for (j, d) in e {
                    let t = diff.entry(j).or_insert_with(FieldElem::zero);
                    *t -= &d;
                }
                queue.push(diff);
            }
        }
        Ok(())
    }

    fn over_budget(&self, cfg: &VeConfig) -> bool {
        // rough footprint: one coefficient ≈ 64 bytes
        cfg.memory_budget_mb.is_some_and(|mb| self.stored * 64 > mb << 20)
    }

    /// Runs until the table closes or a limit is hit. Resumable.
    pub fn run(&mut self, rels: &RelationSpace, cfg: &VeConfig) -> Result<VeStatus> {
        let mut since_save = 0;
        while self.next < self.defined() {
            let i = self.next;
            if self.dead[i].is_none() {
                let r = self.process(i, rels, cfg);
                match r {
                    Ok(()) => {}
                    Err(Error::Budget(msg)) => {
                        self.checkpoint(cfg)?;
                        return Ok(VeStatus::BudgetExceeded(msg));
                    }
                    Err(e) => return Err(e),
                }
            }
            self.next += 1;
            since_save += 1;
            if self.over_budget(cfg) {
                self.checkpoint(cfg)?;
                return Ok(VeStatus::BudgetExceeded("memory budget".into()));
            }
            if cfg.checkpoint.is_some() && cfg.checkpoint_every > 0 && since_save >= cfg.checkpoint_every {
                self.checkpoint(cfg)?;
                since_save = 0;
            }
            if self.next % 500 == 0 {
                log::info!("processed {} defined {} alive {}", self.next, self.defined(), self.alive().len());
            }
        }
        self.checkpoint(cfg)?;
        Ok(VeStatus::Closed)
    }

    fn checkpoint(&self, cfg: &VeConfig) -> Result<()> {
        match &cfg.checkpoint {
            Some(p) => self.save(p),
            None => Ok(()),
        }
    }

    fn process(&mut self, i: usize, rels: &RelationSpace, cfg: &VeConfig) -> Result<()> {
        // push every relation at vector i, then define its images
        for r in &rels.relations {
            let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
            for (w, c) in r {
                let mut x: BTreeMap<usize, FieldElem> = BTreeMap::from([(i, FieldElem::one())]);
                for &g in w {
                    x = self.img(x, g, cfg)?;
                    if x.is_empty() {
                        break;
                    }
                }
                for (j, d) in x {
                    let e = acc.entry(j).or_insert_with(FieldElem::zero);
                    *e += &(c * &d);
                }
            }
            if self.dead[i].is_some() {
                break;
            }
            self.add_relation(acc, cfg)?;
        }
        if self.dead[i].is_none() {
            for g in 0..self.letters as u8 {
                self.img(BTreeMap::from([(i, FieldElem::one())]), g, cfg)?;
            }
        }
        Ok(())
    }

    /// The regular module on the surviving vectors, with every relation
    /// checked at every basis vector.
    pub fn certify(&self, rels: &RelationSpace) -> Result<ClosedModule> {
        if self.next < self.defined() {
            return Err(Error::Verification("enumeration not closed".into()));
        }
        let alive = self.alive();
        let d = alive.len();
        let mut pos = vec![usize::MAX; self.defined()];
        for (k, &i) in alive.iter().enumerate() {
            pos[i] = k;
        }
        let mut actions = vec![Matrix::zeros(d, d); self.letters];
        for (k, &i) in alive.iter().enumerate() {
            for g in 0..self.letters {
                let t = self.table[i * self.letters + g]
                    .as_ref()
                    .ok_or_else(|| Error::Verification("open table entry".into()))?;
                let y = self.reduce(t.iter().cloned().collect());
                for (j, c) in y {
                    actions[g][(pos[j], k)] = c;
                }
            }
        }
        let m = ClosedModule { dim: d, words: alive.iter().map(|&i| self.word(i)).collect(), actions };
        for k in 0..d {
            for r in &rels.relations {
                let mut acc = vec![FieldElem::zero(); d];
                for (w, c) in r {
                    let mut x = vec![FieldElem::zero(); d];
                    x[k] = FieldElem::one();
                    for &g in w {
                        x = m.actions[g as usize].mul_vec(&x);
                    }
                    for (a, b) in acc.iter_mut().zip(&x) {
                        *a += &(c * b);
                    }
                }
                if acc.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Verification(format!("relation fails at basis vector {k}")));
                }
            }
        }
        Ok(m)
    }
}

/// T(H)/I as a right module over itself; column i of `actions[g]` is v_i·g.
#[derive(Clone, Debug)]
pub struct ClosedModule {
    pub dim: usize,
    pub words: Vec<Word>,
    pub actions: Vec<Matrix>,
}

impl ClosedModule {
    /// dim of the image of T≤d, for d = 0, 1, … until it reaches dim.
    pub fn filtration_dims(&self) -> Vec<usize> {
        let mut s = Subspace::zero(self.dim);
        let mut e0 = vec![FieldElem::zero(); self.dim];
        if self.dim == 0 {
            return vec![0];
        }
        e0[0] = FieldElem::one();
        s.insert(&e0);
        let mut frontier = vec![e0];
        let mut out = vec![s.dim()];
        while s.dim() < self.dim && !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for a in &self.actions {
                    let w = a.mul_vec(v);
                    if s.insert(&w) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
            out.push(s.dim());
        }
        out
    }
}

/// Unital algebra generated by ⊕_M E_h^M over the bundle.
pub fn lower_bound(bundle: &[PartialComodule]) -> usize {
    bundle_algebra(bundle).dim()
}

fn bundle_algebra(bundle: &[PartialComodule]) -> crate::linalg::closure::GeneratedAlgebra {
    let sizes: Vec<usize> = bundle.iter().map(|m| m.dim).collect();
    let n = bundle.first().map_or(0, |m| m.hopf.dim());
    let ops: Vec<Vec<Matrix>> = bundle.iter().map(|m| m.operators()).collect();
    let gens: Vec<Blocks> = (0..n).map(|h| ops.iter().map(|o| o[h].clone()).collect()).collect();
    generate(&sizes, &gens, true)
}

/// (size, multiplicity) in increasing size.
pub fn block_multiset(dims: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &d in dims {
        match out.iter_mut().find(|(x, _)| *x == d) {
            Some(p) => p.1 += 1,
            None => out.push((d, 1)),
        }
    }
    out.sort_unstable();
    out
}

/// k^a x M_n^m x … with exponents 1 omitted.
pub fn block_summary(blocks: &[(usize, usize)]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|&(d, m)| {
            let base = if d == 1 { "k".to_string() } else { format!("M_{d}") };
            if m == 1 { base } else { format!("{base}^{m}") }
        })
        .collect();
    parts.join(" x ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum HparStatus {
    Certified { dim: usize },
    UpperLower { upper: usize, lower: usize },
    BudgetExceeded { lower: usize, reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct HparReport {
    pub algebra: String,
    pub relations_generated: usize,
    pub relations_independent: usize,
    /// exact dimension of the closed enumeration (an upper bound); empty if not closed
    pub upper_bounds: Vec<usize>,
    pub filtration_dims: Vec<usize>,
    pub lower_bound: usize,
    #[serde(flatten)]
    pub status: HparStatus,
    pub blocks: Option<String>,
    pub defined_vectors: usize,
}

impl HparReport {
    pub fn certified(&self) -> Option<usize> {
        match self.status {
            HparStatus::Certified { dim } => Some(dim),
            _ => None,
        }
    }
}

/// Upper bound by enumeration on `h`, lower bound from a bundle of
/// pairwise non-isomorphic simple partial comodules over h*.
pub fn certified_dim(h: &FiniteDimHopf, bundle: &[PartialComodule], cfg: &VeConfig) -> Result<HparReport> {
    let rels = build_relations(h);
    let lower = if bundle.is_empty() { 1 } else { lower_bound(bundle) };
    let mut e = match &cfg.checkpoint {
        Some(p) if p.exists() => {
            let e = Enumeration::load(p)?;
            if e.algebra != h.name || e.letters != rels.letters.len() {
                return Err(Error::Input("checkpoint belongs to a different algebra".into()));
            }
            e
        }
        _ => Enumeration::new(&h.name, rels.letters.len()),
    };
    let status = e.run(&rels, cfg)?;
    let dims: Vec<usize> = bundle.iter().map(|m| m.dim).collect();
    let full = dims.iter().map(|d| d * d).sum::<usize>() == lower;
    let mut report = HparReport {
        algebra: h.name.clone(),
        relations_generated: rels.generated,
        relations_independent: rels.relations.len(),
        upper_bounds: Vec::new(),
        filtration_dims: Vec::new(),
        lower_bound: lower,
        status: HparStatus::BudgetExceeded { lower, reason: String::new() },
        blocks: None,
        defined_vectors: e.defined(),
    };
    match status {
        VeStatus::BudgetExceeded(reason) => {
            report.status = HparStatus::BudgetExceeded { lower, reason };
        }
        VeStatus::Closed => {
            let m = e.certify(&rels)?;
            if lower > m.dim {
                return Err(Error::Verification(format!("lower bound {lower} exceeds upper bound {}", m.dim)));
            }
            report.upper_bounds = vec![m.dim];
            report.filtration_dims = m.filtration_dims();
            report.status = if lower == m.dim {
                HparStatus::Certified { dim: m.dim }
            } else {
                HparStatus::UpperLower { upper: m.dim, lower }
            };
            if lower == m.dim && full {
                report.blocks = Some(block_summary(&block_multiset(&dims)));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct AparReport {
    pub dim: usize,
    pub semisimple: bool,
    pub center_dim: usize,
    /// (block size, multiplicity) when semisimple and split
    pub blocks: Option<Vec<(usize, usize)>>,
    pub summary: Option<String>,
}

/// Generated algebra with its canonical echelon basis, for structure computations.
struct BasisAlgebra {
    sizes: Vec<usize>,
    basis: Vec<Blocks>,
    ech: Echelon,
}

impl BasisAlgebra {
    fn coords(&self, a: &Blocks) -> Vector {
        self.ech.coords(&blocks_flatten(a)).expect("closed under products")
    }

    fn left_matrix(&self, a: &Blocks) -> Matrix {
        let cols: Vec<Vector> = self.basis.iter().map(|b| self.coords(&blocks_mul(a, b))).collect();
        Matrix::from_cols(self.basis.len(), &cols)
    }

    fn combine(&self, c: &[FieldElem]) -> Blocks {
        let len: usize = self.sizes.iter().map(|d| d * d).sum();
        let mut v = vec![FieldElem::zero(); len];
        for (x, b) in c.iter().zip(&self.basis) {
            if x.is_zero() {
                continue;
            }
            for (t, y) in v.iter_mut().zip(blocks_flatten(b)) {
                *t += &(x * &y);
            }
        }
        blocks_unflatten(&self.sizes, &v)
    }
}

/// Generators ε_φ = [φ(1)][S*(φ(2))] for the dual basis φ of H*, as block
/// operators on the bundle of partial H-comodules.
pub fn apar_generators(bundle: &[PartialComodule]) -> Vec<Blocks> {
    let Some(first) = bundle.first() else {
        return Vec::new();
    };
    let h = &first.hopf;
    let n = h.dim();
    let ops: Vec<Vec<Matrix>> = bundle.iter().map(|m| m.operators()).collect();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let blocks: Blocks = ops
            .iter()
            .zip(bundle)
            .map(|(o, m)| {
                let mut acc = Matrix::zeros(m.dim, m.dim);
                // S*(φ_j) = Σ_l S[j][l] φ_l
                let sphi: Vec<Matrix> = (0..n)
                    .map(|j| {
                        let mut s = Matrix::zeros(m.dim, m.dim);
                        for l in 0..n {
                            let c = &h.antipode[(j, l)];
                            if !c.is_zero() {
                                s = s.add(&o[l].scale(c));
                            }
                        }
                        s
                    })
                    .collect();
                for i in 0..n {
                    for j in 0..n {
                        let c = &h.mult[i * n + j][k];
                        if !c.is_zero() {
                            acc = acc.add(&o[i].mul(&sphi[j]).scale(c));
                        }
                    }
                }
                acc
            })
            .collect();
        out.push(blocks);
    }
    out
}

pub fn apar_analysis(bundle: &[PartialComodule]) -> Result<AparReport> {
    let sizes: Vec<usize> = bundle.iter().map(|m| m.dim).collect();
    let gens = apar_generators(bundle);
    let g = generate(&sizes, &gens, true);
    let basis: Vec<Blocks> = g.echelon.basis().iter().map(|v| blocks_unflatten(&sizes, v)).collect();
    let alg = BasisAlgebra { sizes: sizes.clone(), basis, ech: g.echelon.clone() };
    let d = alg.basis.len();
    let lefts: Vec<Matrix> = alg.basis.iter().map(|b| alg.left_matrix(b)).collect();
    let mut gram = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = trace_pair(&lefts[i], &lefts[j]);
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    let semisimple = gram.rank() == d;
    // center: Σ c_i b_i commuting with every b_j
    let mut rows = Vec::new();
    for j in 0..d {
        let comms: Vec<Vector> = (0..d)
            .map(|i| {
                let a = blocks_mul(&alg.basis[i], &alg.basis[j]);
                let b = blocks_mul(&alg.basis[j], &alg.basis[i]);
                let (fa, fb) = (alg.coords(&a), alg.coords(&b));
                fa.iter().zip(&fb).map(|(x, y)| x - y).collect()
            })
            .collect();
        for t in 0..d {
            rows.push((0..d).map(|i| comms[i][t].clone()).collect::<Vec<_>>());
        }
    }
    let center = if d == 0 { Vec::new() } else { Matrix::from_rows(rows)?.kernel() };
    let mut report = AparReport { dim: d, semisimple, center_dim: center.len(), blocks: None, summary: None };
    if semisimple {
        if let Some(b) = split_blocks(&alg, &center) {
            report.summary = Some(block_summary(&b));
            report.blocks = Some(b);
        }
    }
    Ok(report)
}

/// tr(AB) without forming the product.
fn trace_pair(a: &Matrix, b: &Matrix) -> FieldElem {
    let n = a.rows();
    let mut t = FieldElem::zero();
    for i in 0..n {
        for k in 0..n {
            let (x, y) = (&a[(i, k)], &b[(k, i)]);
            if !x.is_zero() && !y.is_zero() {
                t += &(x * y);
            }
        }
    }
    t
}

/// Block sizes of a split semisimple algebra. The central element ω with
/// tr_Z(ωz) = tr_A(z) for all central z is Σ n_i² e_i, so the eigenspace of
/// ω on Z for the eigenvalue n² has dimension #{blocks M_n}.
fn split_blocks(alg: &BasisAlgebra, center: &[Vector]) -> Option<Vec<(usize, usize)>> {
    let d = alg.basis.len();
    let mut zech = Echelon::new(d);
    for z in center {
        zech.insert(z);
    }
    let zb: Vec<Blocks> = zech.basis().iter().map(|z| alg.combine(z)).collect();
    let c = zb.len();
    let mults: Vec<Matrix> = zb
        .iter()
        .map(|zi| {
            let cols: Vec<Vector> = zb.iter().map(|zj| zech.coords(&alg.coords(&blocks_mul(zi, zj)))).collect::<Option<_>>()?;
            Some(Matrix::from_cols(c, &cols))
        })
        .collect::<Option<_>>()?;
    let mut gram = Matrix::zeros(c, c);
    for i in 0..c {
        for j in 0..c {
            gram[(i, j)] = trace_pair(&mults[i], &mults[j]);
        }
    }
    let rhs: Vector = zb.iter().map(|z| alg.left_matrix(z).trace()).collect();
    let w = gram.solve(&rhs)?;
    let mut omega = Matrix::zeros(c, c);
    for (x, m) in w.iter().zip(&mults) {
        omega = omega.add(&m.scale(x));
    }
    let mut blocks = Vec::new();
    let (mut count, mut total) = (0, 0);
    for n in (1..).take_while(|n| n * n <= d) {
        let shifted = omega.sub(&Matrix::identity(c).scale(&FieldElem::from_int((n * n) as i64)));
        let m = c - shifted.rank();
        if m > 0 {
            blocks.push((n, m));
            count += m;
            total += m * n * n;
        }
    }
    (count == c && total == d).then_some(blocks)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureCReport {
    pub representatives: usize,
    /// Σ_e dim A_e·e
    pub target_dim: usize,
    pub image_dim: usize,
    pub apar_dim: Option<usize>,
    pub injective_on_apar: Option<bool>,
}

/// ε_φ ↦ (e·e(1)φ(e(2)))_e into Π A_e·e; the image is the unital subalgebra
/// generated by the images of the generators.
pub fn conjecture_c(h: &FiniteDimHopf, reps: &[Vector], apar_dim: Option<usize>) -> Result<ConjectureCReport> {
    let n = h.dim();
    let r = reps.len();
    let mut target = 0;
    for e in reps {
        let a = crate::construction::generate_coideal_subalgebra(std::sync::Arc::new(h.clone()), e)?;
        let ae: Vec<Vector> = a.a.basis().iter().map(|x| h.mul(x, e)).collect();
        target += Subspace::span(n, &ae).dim();
    }
    let gens: Vec<Vector> = (0..n)
        .map(|k| {
            let mut v = Vec::with_capacity(r * n);
            for e in reps {
                let d = h.delta(e);
                let comp: Vector = (0..n).map(|a| d[a * n + k].clone()).collect();
                v.extend(h.mul(e, &comp));
            }
            v
        })
        .collect();
    let mul = |x: &Vector, y: &Vector| -> Vector {
        let mut out = Vec::with_capacity(r * n);
        for i in 0..r {
            out.extend(h.mul(&x[i * n..(i + 1) * n], &y[i * n..(i + 1) * n]));
        }
        out
    };
    let unit: Vector = reps.iter().flat_map(|e| e.iter().cloned()).collect();
    let mut ech = Echelon::new(r * n);
    let mut elems = Vec::new();
    if ech.insert(&unit).is_some() {
        elems.push(unit);
    }
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in &gens {
            let y = mul(&x, g);
            if ech.insert(&y).is_some() {
                elems.push(y);
            }
        }
    }
    let image = ech.rank();
    Ok(ConjectureCReport {
        representatives: r,
        target_dim: target,
        image_dim: image,
        apar_dim,
        injective_on_apar: apar_dim.map(|a| a == image),
    })
}
