//! Unital algebras generated by block-diagonal matrices.

use crate::field::FieldElem;
use crate::linalg::echelon::Echelon;
use crate::linalg::matrix::Matrix;

/// A block-diagonal matrix, one square block per summand.
pub type Blocks = Vec<Matrix>;

pub fn blocks_identity(sizes: &[usize]) -> Blocks {
    sizes.iter().map(|&d| Matrix::identity(d)).collect()
}

pub fn blocks_mul(a: &Blocks, b: &Blocks) -> Blocks {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

pub fn blocks_flatten(a: &Blocks) -> Vec<FieldElem> {
    a.iter().flat_map(|m| m.data().iter().cloned()).collect()
}

pub fn blocks_unflatten(sizes: &[usize], v: &[FieldElem]) -> Blocks {
    let mut out = Vec::with_capacity(sizes.len());
    let mut off = 0;
    for &d in sizes {
        out.push(Matrix::from_flat(d, d, v[off..off + d * d].to_vec()));
        off += d * d;
    }
    out
}

/// Basis of a generated algebra: the words that raised the rank, plus the echelon.
#[derive(Clone, Debug)]
pub struct GeneratedAlgebra {
    pub sizes: Vec<usize>,
    pub elements: Vec<Blocks>,
    pub echelon: Echelon,
}

impl GeneratedAlgebra {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Blocks) -> bool {
        self.echelon.contains(&blocks_flatten(a))
    }

    /// Coordinates of `a` in the word basis, if it lies in the algebra.
    pub fn coords(&self, a: &Blocks) -> Option<Vec<FieldElem>> {
        let cols: Vec<Vec<FieldElem>> = self.elements.iter().map(blocks_flatten).collect();
        let m = Matrix::from_cols(cols.first().map_or(0, |c| c.len()), &cols);
        m.solve(&blocks_flatten(a))
    }
}

/// Closure of {1} under right multiplication by the generators.
pub fn generate(sizes: &[usize], gens: &[Blocks], unital: bool) -> GeneratedAlgebra {
    let ambient: usize = sizes.iter().map(|d| d * d).sum();
    let mut ech = Echelon::new(ambient);
    let mut elements = Vec::new();
    let mut queue: Vec<Blocks> = Vec::new();
    let seeds: Vec<Blocks> = if unital { vec![blocks_identity(sizes)] } else { gens.to_vec() };
    for s in seeds {
        if ech.insert(&blocks_flatten(&s)).is_some() {
            elements.push(s.clone());
            queue.push(s);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head].clone();
        head += 1;
        for g in gens {
            let y = blocks_mul(&x, g);
            if ech.insert(&blocks_flatten(&y)).is_some() {
                elements.push(y.clone());
                queue.push(y);
            }
        }
        if ech.rank() == ambient {
            break;
        }
    }
    GeneratedAlgebra { sizes: sizes.to_vec(), elements, echelon: ech }
}
