//! Dense multi-index vectors in V₁⊗…⊗V_k with maps applied to factor ranges.

use crate::field::FieldElem;
use crate::linalg::matrix::Matrix;

/// Column-sparse copy of a matrix for repeated application.
#[derive(Clone, Debug)]
pub struct LinMap {
    pub out_dim: usize,
    pub in_dim: usize,
    cols: Vec<Vec<(usize, FieldElem)>>,
}

impl LinMap {
    pub fn new(m: &Matrix) -> Self {
        let cols = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i, m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        LinMap { out_dim: m.rows(), in_dim: m.cols(), cols }
    }

    pub fn column(&self, j: usize) -> &[(usize, FieldElem)] {
        &self.cols[j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: Vec<FieldElem>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<FieldElem>) -> Self {
        assert_eq!(shape.iter().product::<usize>(), data.len(), "tensor size");
        Tensor { shape, data }
    }

    pub fn basis(shape: Vec<usize>, idx: usize) -> Self {
        let mut data = vec![FieldElem::zero(); shape.iter().product()];
        data[idx] = FieldElem::one();
        Tensor { shape, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Replaces factors `start..start+count` by `out_shape` through `map`.
    pub fn apply(&self, start: usize, count: usize, map: &LinMap, out_shape: &[usize]) -> Tensor {
        let left: usize = self.shape[..start].iter().product();
        let mid: usize = self.shape[start..start + count].iter().product();
        let right: usize = self.shape[start + count..].iter().product();
        let mid_out: usize = out_shape.iter().product();
        assert_eq!(map.in_dim, mid, "map input dimension");
        assert_eq!(map.out_dim, mid_out, "map output dimension");
        let mut data = vec![FieldElem::zero(); left * mid_out * right];
        for l in 0..left {
            for i in 0..mid {
                let col = map.column(i);
                if col.is_empty() {
                    continue;
                }
                for r in 0..right {
                    let x = &self.data[(l * mid + i) * right + r];
                    if x.is_zero() {
                        continue;
                    }
                    for (o, a) in col {
                        data[(l * mid_out + o) * right + r] += &(a * x);
                    }
                }
            }
        }
        let mut shape = self.shape[..start].to_vec();
        shape.extend_from_slice(out_shape);
        shape.extend_from_slice(&self.shape[start + count..]);
        Tensor { shape, data }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape);
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }
}
