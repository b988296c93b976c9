use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::echelon::Echelon;
use crate::linalg::matrix::Matrix;

/// A subspace of k^n stored by its canonical RREF basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient() == other.ambient() && self.basis() == other.basis()
    }
}

impl Eq for Subspace {}

/// Projection onto the complement spanned by non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    /// Coordinates of k^n that survive in the quotient, in increasing order.
    pub complement: Vec<usize>,
    /// (n - dim) × n matrix.
    pub projection: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ech: Echelon::new(ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &Matrix::identity(ambient).row_vecs())
    }

    pub fn span(ambient: usize, vecs: &[Vec<FieldElem>]) -> Self {
        let mut ech = Echelon::new(ambient);
        for v in vecs {
            ech.insert(v);
        }
        Subspace { ech }
    }

    pub fn ambient(&self) -> usize {
        self.ech.ambient()
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn basis(&self) -> Vec<Vec<FieldElem>> {
        self.ech.basis()
    }

    pub fn basis_matrix(&self) -> Matrix {
        self.ech.basis_matrix()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.ech.pivots_sorted()
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.ech.contains(v)
    }

    /// Adds a vector; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        self.ech.insert(v).is_some()
    }

    /// Coordinates in the RREF basis.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        self.ech.coords(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|b| other.contains(b))
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {}",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut s = self.clone();
        for b in other.basis() {
            s.insert(&b);
        }
        Ok(s)
    }

    /// Intersection via the kernel of the stacked bases.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let n = self.ambient();
        let u = self.basis();
        let v = other.basis();
        if u.is_empty() || v.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let mut cols: Vec<Vec<FieldElem>> = u.clone();
        cols.extend(v.iter().map(|x| x.iter().map(|c| -c).collect::<Vec<_>>()));
        let m = Matrix::from_cols(n, &cols);
        let mut out = Subspace::zero(n);
        for k in m.kernel() {
            let mut w = vec![FieldElem::zero(); n];
            for (i, ui) in u.iter().enumerate() {
                if k[i].is_zero() {
                    continue;
                }
                for (j, x) in ui.iter().enumerate() {
                    w[j] += &(&k[i] * x);
                }
            }
            out.insert(&w);
        }
        Ok(out)
    }

    /// Kernel of `map` acting on column vectors of length `map.cols()`.
    pub fn kernel_of(map: &Matrix) -> Subspace {
        Subspace::span(map.cols(), &map.kernel())
    }

    /// Image of `map` acting on column vectors.
    pub fn image_of(map: &Matrix) -> Subspace {
        let cols: Vec<Vec<FieldElem>> = (0..map.cols()).map(|j| map.col(j)).collect();
        Subspace::span(map.rows(), &cols)
    }

    /// {x : map·x ∈ target}.
    pub fn preimage(map: &Matrix, target: &Subspace) -> Result<Subspace> {
        if map.rows() != target.ambient() {
            return Err(Error::Shape("preimage target ambient".into()));
        }
        let w = target.basis();
        let neg: Vec<Vec<FieldElem>> =
            w.iter().map(|x| x.iter().map(|c| -c).collect()).collect();
        let big = map.hstack(&Matrix::from_cols(map.rows(), &neg));
        let xs: Vec<Vec<FieldElem>> =
            big.kernel().into_iter().map(|k| k[..map.cols()].to_vec()).collect();
        Ok(Subspace::span(map.cols(), &xs))
    }

    /// Image of this subspace under `map`.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        let imgs: Vec<Vec<FieldElem>> = self.basis().iter().map(|b| map.mul_vec(b)).collect();
        Subspace::span(map.rows(), &imgs)
    }

    pub fn quotient_map(&self) -> QuotientMap {
        let n = self.ambient();
        let pivots = self.pivots();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, &c) in complement.iter().enumerate() {
            pos[c] = k;
        }
        let mut proj = Matrix::zeros(complement.len(), n);
        for &c in &complement {
            proj[(pos[c], c)] = FieldElem::one();
        }
        for (row, &p) in self.basis().iter().zip(&pivots) {
            for &c in &complement {
                if !row[c].is_zero() {
                    proj[(pos[c], p)] = -&row[c];
                }
            }
        }
        QuotientMap { complement, projection: proj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<FieldElem> {
        xs.iter().map(|&x| FieldElem::from_int(x)).collect()
    }

    #[test]
    fn self_intersection() {
        let u = Subspace::span(4, &[v(&[1, 2, 0, 1]), v(&[0, 1, 1, 0])]);
        assert_eq!(u.intersection(&u).unwrap(), u);
    }

    #[test]
    fn complementary_coordinates() {
        let u = Subspace::span(3, &[v(&[1, 0, 0])]);
        let w = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(u.intersection(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&w).unwrap().dim(), 3);
    }

    #[test]
    fn quotient_kills_subspace() {
        let u = Subspace::span(3, &[v(&[1, 1, 0])]);
        let q = u.quotient_map();
        assert_eq!(q.complement, vec![1, 2]);
        assert!(q.projection.mul_vec(&v(&[1, 1, 0])).iter().all(|x| x.is_zero()));
        assert_eq!(q.projection.mul_vec(&v(&[1, 0, 0])), v(&[-1, 0]));
    }

    #[test]
    fn preimage_of_line() {
        let a = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
        let t = Subspace::span(2, &[v(&[0, 1])]);
        let p = Subspace::preimage(&a, &t).unwrap();
        assert_eq!(p, Subspace::span(2, &[v(&[0, 1])]));
    }

    #[test]
    fn mismatch_is_error() {
        assert!(Subspace::zero(2).sum(&Subspace::zero(3)).is_err());
    }
}
