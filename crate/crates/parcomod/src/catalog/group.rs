//! Finite groups by Cayley table, presets, subgroups and cosets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub cayley: Vec<Vec<usize>>,
}

/// A subgroup K ≤ G with coset transversals (least-index representatives,
/// identity first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    pub mask: u64,
    /// representatives g of the left cosets gK
    pub left_reps: Vec<usize>,
    /// representatives g of the right cosets Kg
    pub right_reps: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.left_reps.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask >> g & 1 == 1
    }
}

fn labels(prefix: &[&str]) -> Vec<String> {
    prefix.iter().map(|s| s.to_string()).collect()
}

impl FiniteGroup {
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > 64 {
            return Err(Error::Input(format!("group order {n} outside 1..=64")));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Input("Cayley table has the wrong shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Input("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (g, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Input(format!("element {} has no inverse", labels[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Input(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), labels, table, identity, inverse })
    }

    /// Presets: `c<n>`, `klein`, `s3`, `d8`, `q8`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "klein" => Ok(Self::klein()),
            "s3" => Ok(Self::s3()),
            "d8" => Ok(Self::d8()),
            "q8" => Ok(Self::q8()),
            _ => {
                let n = name
                    .strip_prefix('c')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&n| (1..=64).contains(&n))
                    .ok_or_else(|| Error::Input(format!("unknown group preset {name:?}")))?;
                Ok(Self::cyclic(n))
            }
        }
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(format!("C{n}"), labels, table).expect("cyclic group")
    }

    pub fn klein() -> Self {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::from_table("Klein", labels(&["1", "a", "b", "ab"]), table).expect("klein")
    }

    /// r^i s^j with s r = r^{-1} s, r of order m.
    fn dihedral(name: &str, m: usize, labels: Vec<String>) -> Self {
        let idx = |i: usize, j: usize| j * m + i;
        let mut table = vec![vec![0; 2 * m]; 2 * m];
        for j in 0..2 {
            for i in 0..m {
                for l in 0..2 {
                    for k in 0..m {
                        let r = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                        table[idx(i, j)][idx(k, l)] = idx(r, (j + l) % 2);
                    }
                }
            }
        }
        Self::from_table(name, labels, table).expect("dihedral")
    }

    /// Elements σ^i α^j in the order 1, σ, σ², α, σα, σ²α.
    pub fn s3() -> Self {
        Self::dihedral("S3", 3, labels(&["1", "s", "s2", "a", "sa", "s2a"]))
    }

    pub fn d8() -> Self {
        Self::dihedral("D8", 4, labels(&["1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]))
    }

    /// ±1, ±i, ±j, ±k; `m` stands for −1.
    pub fn q8() -> Self {
        // units 1,i,j,k as 0..4, unit products with sign
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            const T: [[(bool, usize); 4]; 4] = [
                [(false, 0), (false, 1), (false, 2), (false, 3)],
                [(false, 1), (true, 0), (false, 3), (true, 2)],
                [(false, 2), (true, 3), (true, 0), (false, 1)],
                [(false, 3), (false, 2), (true, 1), (true, 0)],
            ];
            T[a][b]
        };
        let mut table = vec![vec![0; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (sx, ux) = (x % 2 == 1, x / 2);
                let (sy, uy) = (y % 2 == 1, y / 2);
                let (s, u) = unit_mul(ux, uy);
                let neg = sx ^ sy ^ s;
                table[x][y] = 2 * u + neg as usize;
            }
        }
        Self::from_table("Q8", labels(&["1", "m", "i", "mi", "j", "mj", "k", "mk"]), table).expect("q8")
    }

    pub fn from_json(name: &str, j: &GroupJson) -> Result<Self> {
        if j.labels.len() != j.order {
            return Err(Error::Input("labels length differs from order".into()));
        }
        Self::from_table(name, j.labels.clone(), j.cayley.clone())
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order(), labels: self.labels.clone(), cayley: self.table.clone() }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|g| self.element_order(g)).fold(1, num_integer::lcm)
    }

    /// Subgroup generated by a set of elements, as a bitmask.
    pub fn generate(&self, gens: impl IntoIterator<Item = usize>) -> u64 {
        let mut mask = 1u64 << self.identity;
        let mut stack: Vec<usize> = vec![self.identity];
        let gens: Vec<usize> = gens.into_iter().collect();
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    stack.push(y);
                }
            }
        }
        mask
    }

    fn mask_elements(&self, mask: u64) -> Vec<usize> {
        (0..self.order()).filter(|&g| mask >> g & 1 == 1).collect()
    }

    pub fn subgroup_from_mask(&self, mask: u64) -> Subgroup {
        let elements = self.mask_elements(mask);
        let reps = |left: bool| {
            let mut seen = 0u64;
            let mut reps = vec![self.identity];
            seen |= mask;
            for g in 0..self.order() {
                if seen >> g & 1 == 1 {
                    continue;
                }
                reps.push(g);
                for &k in &elements {
                    let c = if left { self.mul(g, k) } else { self.mul(k, g) };
                    seen |= 1 << c;
                }
            }
            reps
        };
        Subgroup { left_reps: reps(true), right_reps: reps(false), elements, mask }
    }

    /// All subgroups ordered by (|K|, sorted element list).
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let mut found: BTreeSet<u64> = BTreeSet::new();
        let mut frontier: Vec<u64> = vec![1u64 << self.identity];
        found.insert(1u64 << self.identity);
        while let Some(m) = frontier.pop() {
            let mut gens = self.mask_elements(m);
            for g in 0..n {
                if m >> g & 1 == 1 {
                    continue;
                }
                gens.push(g);
                let j = self.generate(gens.iter().copied());
                gens.pop();
                if found.insert(j) {
                    frontier.push(j);
                }
            }
        }
        let mut subs: Vec<Subgroup> = found.into_iter().map(|m| self.subgroup_from_mask(m)).collect();
        subs.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        subs
    }

    /// K as a group in its own right, with local indices in the order of `sub.elements`.
    pub fn restrict(&self, sub: &Subgroup) -> FiniteGroup {
        let pos = |g: usize| sub.elements.iter().position(|&x| x == g).expect("closed");
        let table = sub
            .elements
            .iter()
            .map(|&a| sub.elements.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let labels = sub.elements.iter().map(|&g| self.labels[g].clone()).collect();
        FiniteGroup::from_table(format!("{}<{}>", self.name, sub.elements.len()), labels, table)
            .expect("subgroup is a group")
    }

    /// Greedy generating set: each element not yet generated, in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = 1u64 << self.identity;
        for g in 0..self.order() {
            if mask >> g & 1 == 0 {
                gens.push(g);
                mask = self.generate(gens.iter().copied());
            }
        }
        gens
    }

    /// Conjugacy classes, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut cl: Vec<usize> = (0..n).map(|h| self.mul(self.mul(h, g), self.inv(h))).collect();
            cl.sort_unstable();
            cl.dedup();
            for &c in &cl {
                seen[c] = true;
            }
            out.push(cl);
        }
        out
    }
}

/// Bijective homomorphism `from → to` sending `gens` somewhere; brute force.
pub fn find_isomorphism(from: &FiniteGroup, gens: &[usize], to: &FiniteGroup) -> Option<Vec<usize>> {
    let n = from.order();
    if n != to.order() {
        return None;
    }
    let k = gens.len();
    let mut imgs = vec![0usize; k];
    loop {
        if let Some(map) = extend_hom(from, gens, &imgs, to) {
            return Some(map);
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            imgs[i] += 1;
            if imgs[i] < n {
                break;
            }
            imgs[i] = 0;
            i += 1;
        }
    }
}

fn extend_hom(from: &FiniteGroup, gens: &[usize], imgs: &[usize], to: &FiniteGroup) -> Option<Vec<usize>> {
    let n = from.order();
    let mut map = vec![usize::MAX; n];
    map[from.identity] = to.identity;
    let mut stack = vec![from.identity];
    while let Some(x) = stack.pop() {
        for (&g, &hg) in gens.iter().zip(imgs) {
            let y = from.mul(x, g);
            let v = to.mul(map[x], hg);
            if map[y] == usize::MAX {
                map[y] = v;
                stack.push(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if std::mem::replace(&mut hit[m], true) {
            return None;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[from.mul(a, b)] != to.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}
