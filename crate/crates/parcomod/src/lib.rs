//! Exact computations with partial comodules over finite-dimensional Hopf algebras.

pub mod error;
pub mod catalog;
pub mod comodule;
pub mod construction;
pub mod expr;
pub mod field;
pub mod hopf;
pub mod hpar;
pub mod linalg;
pub mod onedim;
pub mod rational;

pub use error::{Error, FieldError, Result};
pub use field::FieldElem;
pub use hopf::FiniteDimHopf;
pub use linalg::{Matrix, Subspace};
pub use rational::Rational;
