//! Vector-space dimensions of single degree strands of a resolution: the
//! degree-d parts of F_0, of the first syzygy module, and of the ideal.

use super::complex::GradedFreeComplex;
use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::linalg::matrix::SparseMatrix;
use crate::monomial::{monomial_count, monomials_of_degree, MonomialIdeal};

/// For a minimal resolution `c` of `ideal`, returns
/// (dim F_0 in degree d, dim of the first syzygy in degree d, dim of the
/// ideal in degree d). The syzygy dimension is computed as a rank and
/// cross-checked against exactness: dim F_0 = dim syzygy + dim ideal.
pub fn graded_piece_dims<F: Field>(
    ideal: &MonomialIdeal,
    c: &GradedFreeComplex<F>,
    d: u32,
) -> Result<(u64, u64, u64)> {
    if !c.is_minimal() {
        return Err(Error::Precondition(
            "graded strand dimensions are read off a minimal resolution".into(),
        ));
    }
    let field = c.field();
    let nvars = ideal.nvars();

    let f0_degrees = c.level_degrees(0);
    let dim_f0: u64 = f0_degrees
        .iter()
        .filter(|&&s| s <= d)
        .map(|&s| monomial_count(nvars, d - s))
        .sum();

    let dim_ideal = monomials_of_degree(nvars, d)
        .iter()
        .filter(|m| ideal.contains_monomial(m))
        .count() as u64;

    // Degree-d slice of the image of d_1 in F_0: columns are the monomial
    // multiples of the differential columns landing in degree d.
    let dim_syz = if c.num_levels() < 2 {
        0
    } else {
        // Basis of (F_0)_d: pairs (basis element, monomial of complementary
        // degree), indexed consecutively.
        let mut row_offset = Vec::with_capacity(f0_degrees.len());
        let mut total_rows = 0usize;
        for &s in &f0_degrees {
            row_offset.push(total_rows);
            if s <= d {
                total_rows += monomial_count(nvars, d - s) as usize;
            }
        }
        let mono_index =
            |deg: u32| -> Vec<crate::monomial::Multidegree> { monomials_of_degree(nvars, deg) };
        // Cache the monomial lists per degree.
        let mut lists: std::collections::HashMap<u32, Vec<crate::monomial::Multidegree>> =
            std::collections::HashMap::new();
        for delta in 0..=d {
            lists.entry(delta).or_insert_with(|| mono_index(delta));
        }
        let position = |list: &[crate::monomial::Multidegree],
                        m: &crate::monomial::Multidegree|
         -> usize { list.binary_search(m).expect("monomial enumerated") };

        let f1_degrees = c.level_degrees(1);
        let mut triples: Vec<(usize, usize, F::Elem)> = Vec::new();
        let mut col_count = 0usize;
        for (col, &cs) in f1_degrees.iter().enumerate() {
            if cs > d {
                continue;
            }
            let multipliers = &lists[&(d - cs)];
            for mult in multipliers {
                for &(r, ref a) in &c.differential(1)[col] {
                    let tgt_shift = c.shift(0, r as usize).clone();
                    let entry_mono = c
                        .shift(1, col)
                        .checked_div(&tgt_shift)
                        .expect("multihomogeneous");
                    let row_mono = mult.mul(&entry_mono);
                    let list = &lists[&(d - tgt_shift.total_degree())];
                    let row = row_offset[r as usize] + position(list, &row_mono);
                    triples.push((row, col_count, a.clone()));
                }
                col_count += 1;
            }
        }
        SparseMatrix::from_triples(field, total_rows, col_count, triples)?.rank(field) as u64
    };

    if dim_f0 != dim_syz + dim_ideal {
        return Err(Error::Internal(format!(
            "strand dimensions violate exactness at degree {d}: {dim_f0} != {dim_syz} + {dim_ideal}"
        )));
    }
    Ok((dim_f0, dim_syz, dim_ideal))
}
