//! Exact computation of homological invariants of monomial ideals — above all
//! edge ideals of finite simple graphs: graded and multigraded Betti tables,
//! Castelnuovo–Mumford regularity, projective dimension, Betti splittings,
//! and the linearity defect, together with the graph invariants these are
//! expressed in (weak chordality, induced matching number, two-pairs,
//! strongly disjoint families of complete bipartite subgraphs).
//!
//! Everything is exact: coefficients live in `QQ` (arbitrary-precision
//! rationals) or in a prime field `ZZ/p`.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod lind;
pub mod monomial;
pub mod resolution;
pub mod splitting;

pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::{FieldSpec, SparseMatrix};
pub use monomial::{MonomialIdeal, Multidegree};
