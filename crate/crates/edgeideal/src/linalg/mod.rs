//! Exact linear algebra over the rationals and prime fields: field contexts,
//! a small-footprint rational type, and sparse rank/kernel computations.

pub mod field;
pub mod matrix;
pub mod rat;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::SparseMatrix;
pub use rat::Rat;
