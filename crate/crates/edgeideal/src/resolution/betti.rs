//! Graded and multigraded Betti tables, regularity and projective dimension.

use super::complex::GradedFreeComplex;
use crate::error::{Error, Result};
use crate::linalg::field::{Field, FieldSpec};
use crate::monomial::Multidegree;
use std::collections::BTreeMap;

/// Betti numbers of a module over a fixed field: multigraded entries
/// (homological degree, multidegree) -> beta, with the graded table
/// (homological degree, internal degree) -> beta aggregated from them. Only
/// positive entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    multigraded: BTreeMap<(u32, Multidegree), u64>,
    graded: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn from_multigraded(
        field: FieldSpec,
        entries: impl IntoIterator<Item = ((u32, Multidegree), u64)>,
    ) -> Self {
        let mut multigraded: BTreeMap<(u32, Multidegree), u64> = BTreeMap::new();
        for ((i, m), v) in entries {
            if v > 0 {
                *multigraded.entry((i, m)).or_insert(0) += v;
            }
        }
        let mut graded = BTreeMap::new();
        for ((i, m), v) in &multigraded {
            *graded.entry((*i, m.total_degree())).or_insert(0) += v;
        }
        BettiTable {
            field,
            multigraded,
            graded,
        }
    }

    /// Reads the table off a minimal complex: basis shifts are the
    /// multigraded Betti numbers.
    pub fn from_minimal_complex<F: Field>(c: &GradedFreeComplex<F>) -> Result<Self> {
        if !c.is_minimal() {
            return Err(Error::Precondition(
                "Betti numbers can only be read off a minimal complex".into(),
            ));
        }
        let mut entries = Vec::new();
        for i in 0..c.num_levels() {
            for b in 0..c.rank(i) {
                entries.push(((i as u32, c.shift(i, b).clone()), 1));
            }
        }
        Ok(BettiTable::from_multigraded(c.field().spec(), entries))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_empty(&self) -> bool {
        self.multigraded.is_empty()
    }

    pub fn graded_entries(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.graded
    }

    pub fn multigraded_entries(&self) -> &BTreeMap<(u32, Multidegree), u64> {
        &self.multigraded
    }

    pub fn beta(&self, i: u32, j: u32) -> u64 {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn beta_multi(&self, i: u32, m: &Multidegree) -> u64 {
        self.multigraded.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number at homological degree i.
    pub fn beta_total(&self, i: u32) -> u64 {
        self.graded
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// reg = max(j - i) over nonzero entries; None for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.graded.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// pd = max i with a nonzero entry; None for the zero module.
    pub fn projective_dimension(&self) -> Option<u32> {
        self.graded.keys().map(|&(i, _)| i).max()
    }

    /// max(j - i) over entries with i <= bound; used to check that the
    /// regularity is already achieved within the first `bound` steps.
    pub fn regularity_up_to(&self, bound: u32) -> Option<i64> {
        self.graded
            .keys()
            .filter(|&&(i, _)| i <= bound)
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
    }

    /// The multiset of total-degree shifts at homological degree i.
    pub fn shifts_at(&self, i: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for ((ii, m), v) in &self.multigraded {
            if *ii == i {
                for _ in 0..*v {
                    out.push(m.total_degree());
                }
            }
        }
        out.sort_unstable();
        out
    }
}
