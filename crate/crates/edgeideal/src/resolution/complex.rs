//! Chain complexes of free multigraded modules whose differentials have
//! single-term entries.
//!
//! Multihomogeneity makes the monomial of every entry redundant: a nonzero
//! entry from a source basis element of multidegree `a` to a target of
//! multidegree `b` necessarily carries the monomial `x^(a-b)`. The complex
//! therefore stores only the scalar of each entry, plus the shift of every
//! basis element; the monomial is reconstructed on access, and illegal
//! entries (where `b` does not divide `a`) are structurally unrepresentable.

use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::monomial::Multidegree;
use std::collections::HashMap;

/// Interner for multidegrees, so shift comparisons are integer comparisons.
#[derive(Clone, Debug, Default)]
pub struct MdegTable {
    map: HashMap<Box<[u32]>, u32>,
    list: Vec<Multidegree>,
}

impl MdegTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, m: &Multidegree) -> u32 {
        if let Some(&id) = self.map.get(m.exponents()) {
            return id;
        }
        let id = self.list.len() as u32;
        self.map.insert(m.exponents().into(), id);
        self.list.push(m.clone());
        id
    }

    pub fn get(&self, id: u32) -> &Multidegree {
        &self.list[id as usize]
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

/// Sparse matrix in column-major form; rows within a column are sorted.
pub type SparseCols<E> = Vec<Vec<(u32, E)>>;

/// A complex of free multigraded modules `F_0 <- F_1 <- ...` with
/// single-term differential entries over an exact field.
#[derive(Clone, Debug)]
pub struct GradedFreeComplex<F: Field> {
    pub(crate) field: F,
    pub(crate) nvars: usize,
    pub(crate) mdegs: MdegTable,
    /// `shifts[i][b]` is the interned multidegree of basis element b of F_i.
    pub(crate) shifts: Vec<Vec<u32>>,
    /// `diffs[i-1]` is d_i: F_i -> F_{i-1} (column-major, rows in F_{i-1}).
    pub(crate) diffs: Vec<SparseCols<F::Elem>>,
    pub(crate) minimal: bool,
}

impl<F: Field> GradedFreeComplex<F> {
    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of homological levels with a free module present (length =
    /// projective dimension of the resolved module + 1).
    pub fn num_levels(&self) -> usize {
        self.shifts.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts.get(i).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(Vec::len).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// The shift (multidegree) of basis element b at level i.
    pub fn shift(&self, i: usize, b: usize) -> &Multidegree {
        self.mdegs.get(self.shifts[i][b])
    }

    /// Total-degree shifts of level i, in basis order.
    pub fn level_degrees(&self, i: usize) -> Vec<u32> {
        self.shifts[i]
            .iter()
            .map(|&id| self.mdegs.get(id).total_degree())
            .collect()
    }

    /// The differential d_i: F_i -> F_{i-1} (i >= 1) in column-major form.
    pub fn differential(&self, i: usize) -> &SparseCols<F::Elem> {
        &self.diffs[i - 1]
    }

    /// Scalar and monomial of entry (row, col) of d_i, if nonzero.
    pub fn entry(&self, i: usize, row: usize, col: usize) -> Option<(F::Elem, Multidegree)> {
        let col_entries = &self.diffs[i - 1][col];
        let pos = col_entries
            .binary_search_by_key(&(row as u32), |e| e.0)
            .ok()?;
        let scalar = col_entries[pos].1.clone();
        let mono = self
            .shift(i, col)
            .checked_div(self.shift(i - 1, row))
            .expect("multihomogeneous entry");
        Some((scalar, mono))
    }

    /// Checks multihomogeneity (target shift divides source shift for every
    /// nonzero entry), d∘d = 0, and — when the minimal flag is set — that no
    /// entry is an isomorphism (monomial 1).
    pub fn validate(&self) -> Result<()> {
        for i in 1..self.num_levels() {
            let d = &self.diffs[i - 1];
            if d.len() != self.rank(i) {
                return Err(Error::Internal(format!("d_{i} has wrong column count")));
            }
            for (c, col) in d.iter().enumerate() {
                let mut prev: Option<u32> = None;
                for &(r, ref a) in col {
                    if prev.is_some_and(|p| p >= r) {
                        return Err(Error::Internal(format!(
                            "d_{i} column {c} rows out of order"
                        )));
                    }
                    prev = Some(r);
                    if r as usize >= self.rank(i - 1) {
                        return Err(Error::Internal(format!("d_{i} row out of range")));
                    }
                    if self.field.is_zero(a) {
                        return Err(Error::Internal(format!("stored zero at d_{i}({r},{c})")));
                    }
                    let src = self.shift(i, c);
                    let tgt = self.shift(i - 1, r as usize);
                    if !tgt.divides(src) {
                        return Err(Error::Internal(format!(
                            "entry d_{i}({r},{c}) is not multihomogeneous"
                        )));
                    }
                    if self.minimal && src == tgt {
                        return Err(Error::Internal(format!(
                            "invertible entry d_{i}({r},{c}) in a minimal complex"
                        )));
                    }
                }
            }
        }
        self.check_composites()
    }

    /// d_{i} ∘ d_{i+1} = 0 for all i; the composite entry at (row, col) is a
    /// single term whose scalar is the plain scalar product sum.
    fn check_composites(&self) -> Result<()> {
        for i in 1..self.num_levels().saturating_sub(1) {
            let d_lo = &self.diffs[i - 1]; // d_i
            let d_hi = &self.diffs[i]; // d_{i+1}
            for (c, col) in d_hi.iter().enumerate() {
                let mut acc: HashMap<u32, F::Elem> = HashMap::new();
                for &(mid, ref a) in col {
                    for &(r, ref b) in &d_lo[mid as usize] {
                        let term = self.field.mul(a, b);
                        match acc.entry(r) {
                            std::collections::hash_map::Entry::Occupied(mut e) => {
                                let v = self.field.add(e.get(), &term);
                                *e.get_mut() = v;
                            }
                            std::collections::hash_map::Entry::Vacant(e) => {
                                e.insert(term);
                            }
                        }
                    }
                }
                for (r, v) in acc {
                    if !self.field.is_zero(&v) {
                        return Err(Error::Internal(format!(
                            "d_{i} ∘ d_{} nonzero at ({r},{c})",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
