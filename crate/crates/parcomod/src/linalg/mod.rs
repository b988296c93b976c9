//! Exact dense and sparse linear algebra over Q(ζ_N).

pub mod closure;
pub mod echelon;
pub mod matrix;
pub mod poly;
pub mod subspace;
pub mod tensor;

pub use echelon::{rref_sparse, Echelon, SparseVec};
pub use matrix::{Matrix, Rref};
pub use poly::{charpoly, Poly};
pub use subspace::{QuotientMap, Subspace};
pub use tensor::{LinMap, Tensor};
