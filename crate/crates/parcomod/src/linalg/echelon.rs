//! Incremental sparse row reduction.
//!
//! Rows are kept fully reduced (zero in every other pivot column), so the
//! sorted row list is the canonical RREF of everything inserted so far.

use crate::field::FieldElem;
use crate::linalg::matrix::Matrix;

pub type SparseVec = Vec<(usize, FieldElem)>;

pub fn to_sparse(v: &[FieldElem]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<FieldElem> {
    let mut out = vec![FieldElem::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    /// rows[k] has leading coefficient 1 at column pivots[k]
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivots: Vec::new(), row_of_col: vec![None; ambient] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after clearing all pivot columns.
    pub fn reduce_dense(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut out = v.to_vec();
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if let Some(r) = self.row_of_col[c] {
                let f = x.clone();
                for (j, y) in &self.rows[r] {
                    let t = &f * y;
                    out[*j] -= &t;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce_dense(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` with respect to the rows in pivot order, if `v` lies in the span.
    pub fn coords(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        if !self.contains(v) {
            return None;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        Some(order.iter().map(|&k| v[self.pivots[k]].clone()).collect())
    }

    /// Inserts `v`; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, v: &[FieldElem]) -> Option<usize> {
        let r = self.reduce_dense(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inv();
        let row: SparseVec = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x * &inv))
            .collect();
        for k in 0..self.rows.len() {
            let Some(pos) = self.rows[k].iter().position(|(i, _)| *i == p) else {
                continue;
            };
            let f = self.rows[k][pos].1.clone();
            let mut dense = to_dense(&self.rows[k], self.ambient);
            for (j, y) in &row {
                let t = &f * y;
                dense[*j] -= &t;
            }
            self.rows[k] = to_sparse(&dense);
        }
        self.row_of_col[p] = Some(self.rows.len());
        self.rows.push(row);
        self.pivots.push(p);
        Some(p)
    }

    /// Pivot columns in increasing order.
    pub fn pivots_sorted(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Rows sorted by pivot column: the canonical RREF basis.
    pub fn basis(&self) -> Vec<Vec<FieldElem>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        order.iter().map(|&k| to_dense(&self.rows[k], self.ambient)).collect()
    }

    pub fn basis_matrix(&self) -> Matrix {
        let b = self.basis();
        if b.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(b).expect("rectangular")
    }
}

/// Sparse RREF of a matrix; must agree entry-wise with [`Matrix::rref`].
pub fn rref_sparse(m: &Matrix) -> crate::linalg::matrix::Rref {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i));
    }
    let rank = e.rank();
    let mut rows = e.basis();
    rows.resize(m.rows(), vec![FieldElem::zero(); m.cols()]);
    let matrix = if m.rows() == 0 {
        Matrix::zeros(0, m.cols())
    } else {
        Matrix::from_rows(rows).expect("rectangular")
    };
    crate::linalg::matrix::Rref { matrix, rank, pivots: e.pivots_sorted() }
}
