//! Minimal multigraded free resolutions of monomial ideals (Taylor complex
//! plus cancellation), an independent Betti-number route through simplicial
//! homology, and the derived invariants: Betti tables, regularity, projective
//! dimension, graded strand dimensions.

mod betti;
mod complex;
mod hochster;
mod pieces;
mod reduce;
mod taylor;

pub use betti::BettiTable;
pub use complex::{GradedFreeComplex, MdegTable, SparseCols};
pub use hochster::{hochster_betti, hochster_betti_ideal};
pub use pieces::graded_piece_dims;
pub use reduce::{minimalize_complex, minimalize_complex_with, PivotRule};
pub use taylor::{minimal_resolution, minimal_resolution_with, taylor_complex, DEFAULT_TAYLOR_CAP};

use crate::error::Result;
use crate::linalg::field::{FieldSpec, PrimeField, Rationals};
use crate::monomial::MonomialIdeal;

/// Betti table through the Taylor + cancellation route over a runtime field
/// choice.
pub fn betti_via_taylor(ideal: &MonomialIdeal, f: &FieldSpec, cap: usize) -> Result<BettiTable> {
    match f {
        FieldSpec::Char0 => {
            BettiTable::from_minimal_complex(&minimal_resolution(ideal, Rationals, cap)?)
        }
        FieldSpec::Prime(p) => {
            BettiTable::from_minimal_complex(&minimal_resolution(ideal, PrimeField::new(*p)?, cap)?)
        }
    }
}

/// Betti table preferring the homology route for squarefree ideals and
/// falling back to Taylor + cancellation otherwise.
pub fn betti_table_of(ideal: &MonomialIdeal, f: &FieldSpec, cap: usize) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::from_multigraded(*f, std::iter::empty()));
    }
    if ideal.is_squarefree() && !ideal.is_unit() {
        hochster_betti_ideal(ideal, f)
    } else {
        betti_via_taylor(ideal, f, cap)
    }
}
