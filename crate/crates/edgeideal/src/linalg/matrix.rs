use crate::error::{Error, Result};
use crate::linalg::field::Field;

/// Sparse matrix over an exact field. Only nonzero entries are stored.
#[derive(Clone, Debug)]
pub struct SparseMatrix<F: Field> {
    nrows: usize,
    ncols: usize,
    /// Row-major: `rows[r]` is sorted by column and contains no zeros.
    rows: Vec<Vec<(u32, F::Elem)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i].push((i as u32, field.one()));
        }
        m
    }

    /// Builds from (row, col, value) triples; later triples at the same
    /// position are rejected, zeros are dropped.
    pub fn from_triples(
        field: F,
        nrows: usize,
        ncols: usize,
        triples: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let mut m = Self::zero(nrows, ncols);
        for (r, c, v) in triples {
            if r >= nrows || c >= ncols {
                return Err(Error::Input(format!(
                    "entry ({r},{c}) outside a {nrows}x{ncols} matrix"
                )));
            }
            if field.is_zero(&v) {
                continue;
            }
            let row = &mut m.rows[r];
            match row.binary_search_by_key(&(c as u32), |e| e.0) {
                Ok(_) => {
                    return Err(Error::Input(format!("duplicate entry at ({r},{c})")));
                }
                Err(pos) => row.insert(pos, (c as u32, v)),
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&F::Elem> {
        self.rows[r]
            .binary_search_by_key(&(c as u32), |e| e.0)
            .ok()
            .map(|pos| &self.rows[r][pos].1)
    }

    pub fn row(&self, r: usize) -> &[(u32, F::Elem)] {
        &self.rows[r]
    }

    /// Matrix-vector product over the field.
    pub fn mul_vec(&self, field: F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                let mut acc = field.zero();
                for (c, a) in row {
                    acc = field.add(&acc, &field.mul(a, &v[*c as usize]));
                }
                acc
            })
            .collect()
    }

    /// Exact rank by sparse elimination with a Markowitz-style minimum-fill
    /// pivot choice, ties broken by lowest row then lowest column.
    pub fn rank(&self, field: F) -> usize {
        let mut rows: Vec<Vec<(u32, F::Elem)>> = self.rows.clone();
        let mut col_count = vec![0usize; self.ncols];
        for row in &rows {
            for (c, _) in row {
                col_count[*c as usize] += 1;
            }
        }
        let mut live: Vec<usize> = (0..self.nrows).filter(|&r| !rows[r].is_empty()).collect();
        let mut rank = 0;
        while !live.is_empty() {
            // Pick the pivot minimizing (nnz(row)-1)*(nnz(col)-1).
            let mut best: Option<(usize, usize, u32)> = None; // (score, row, col)
            for &r in &live {
                let rscore = rows[r].len() - 1;
                for (c, _) in &rows[r] {
                    let score = rscore * (col_count[*c as usize] - 1);
                    let cand = (score, r, *c);
                    if best.map_or(true, |(s, br, bc)| cand < (s, br, bc)) {
                        best = Some(cand);
                    }
                }
            }
            let (_, pr, pc) = best.expect("live rows are nonempty");
            rank += 1;
            let pivot_row = std::mem::take(&mut rows[pr]);
            for (c, _) in &pivot_row {
                col_count[*c as usize] -= 1;
            }
            let pivot_val = pivot_row
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .expect("pivot entry exists");
            let pivot_inv = field.inv(&pivot_val);
            live.retain(|&r| r != pr);
            let mut emptied = Vec::new();
            for &r in &live {
                let Ok(pos) = rows[r].binary_search_by_key(&pc, |e| e.0) else {
                    continue;
                };
                let factor = field.mul(&rows[r][pos].1, &pivot_inv);
                let merged = row_sub_scaled(field, &rows[r], &pivot_row, &factor, &mut col_count);
                rows[r] = merged;
                if rows[r].is_empty() {
                    emptied.push(r);
                }
            }
            if !emptied.is_empty() {
                live.retain(|r| !emptied.contains(r));
            }
        }
        rank
    }

    /// Basis of the right kernel: vectors v with M v = 0. The basis size is
    /// ncols - rank.
    pub fn kernel_basis(&self, field: F) -> Vec<Vec<F::Elem>> {
        // Reduced row echelon form with pivot bookkeeping.
        let mut rows: Vec<Vec<(u32, F::Elem)>> = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        let mut pivots: Vec<(u32, usize)> = Vec::new(); // (pivot col, index into echelon)
        let mut echelon: Vec<Vec<(u32, F::Elem)>> = Vec::new();
        while let Some(mut row) = rows.pop() {
            // Full reduction: eliminate every entry sitting in a pivot
            // column, so echelon rows touch no pivot column but their own.
            loop {
                let hit = row.iter().find_map(|&(col, ref v)| {
                    pivots
                        .binary_search_by_key(&col, |p| p.0)
                        .ok()
                        .map(|idx| (pivots[idx].1, v.clone()))
                });
                match hit {
                    Some((e, factor)) => {
                        row = row_sub_scaled_nocount(field, &row, &echelon[e], &factor);
                    }
                    None => break,
                }
            }
            if row.is_empty() {
                continue;
            }
            // Normalize so the leading entry is 1.
            let lead_inv = field.inv(&row[0].1);
            for (_, v) in row.iter_mut() {
                *v = field.mul(v, &lead_inv);
            }
            let lead = row[0].0;
            // Back-substitute into previous echelon rows.
            for e in echelon.iter_mut() {
                if let Ok(pos) = e.binary_search_by_key(&lead, |x| x.0) {
                    let factor = e[pos].1.clone();
                    *e = row_sub_scaled_nocount(field, e, &row, &factor);
                }
            }
            let idx = echelon.len();
            echelon.push(row);
            let at = pivots
                .binary_search_by_key(&lead, |p| p.0)
                .expect_err("fresh pivot");
            pivots.insert(at, (lead, idx));
        }
        let pivot_cols: Vec<u32> = pivots.iter().map(|p| p.0).collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols as u32 {
            if pivot_cols.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![field.zero(); self.ncols];
            v[free as usize] = field.one();
            for &(pcol, e) in &pivots {
                if let Ok(pos) = echelon[e].binary_search_by_key(&free, |x| x.0) {
                    v[pcol as usize] = field.neg(&echelon[e][pos].1);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// `a - factor * b` for sorted sparse rows, maintaining column counts.
fn row_sub_scaled<F: Field>(
    field: F,
    a: &[(u32, F::Elem)],
    b: &[(u32, F::Elem)],
    factor: &F::Elem,
    col_count: &mut [usize],
) -> Vec<(u32, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = field.sub_mul(&a[i].1, factor, &b[j].1);
                if field.is_zero(&v) {
                    col_count[x as usize] -= 1;
                } else {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                let _ = x;
                i += 1;
            }
            (Some(_), Some(y)) => {
                let v = field.neg(&field.mul(factor, &b[j].1));
                if !field.is_zero(&v) {
                    col_count[y as usize] += 1;
                    out.push((y, v));
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, Some(y)) => {
                let v = field.neg(&field.mul(factor, &b[j].1));
                if !field.is_zero(&v) {
                    col_count[y as usize] += 1;
                    out.push((y, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn row_sub_scaled_nocount<F: Field>(
    field: F,
    a: &[(u32, F::Elem)],
    b: &[(u32, F::Elem)],
    factor: &F::Elem,
) -> Vec<(u32, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0);
        let cb = b.get(j).map(|e| e.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = field.sub_mul(&a[i].1, factor, &b[j].1);
                if !field.is_zero(&v) {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                let _ = x;
                i += 1;
            }
            (Some(_), Some(_)) => {
                let v = field.neg(&field.mul(factor, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, Some(_)) => {
                let v = field.neg(&field.mul(factor, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};
    use crate::linalg::rat::Rat;

    fn qmat(
        nrows: usize,
        ncols: usize,
        entries: &[(usize, usize, i64)],
    ) -> SparseMatrix<Rationals> {
        SparseMatrix::from_triples(
            Rationals,
            nrows,
            ncols,
            entries.iter().map(|&(r, c, v)| (r, c, Rat::from_i64(v))),
        )
        .unwrap()
    }

    #[test]
    fn rank_identity() {
        let m = SparseMatrix::identity(Rationals, 3);
        assert_eq!(m.rank(Rationals), 3);
    }

    #[test]
    fn rank_augmentation_of_three_points() {
        // Boundary from three 0-simplices to the empty simplex: one row of ones.
        let m = qmat(1, 3, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        assert_eq!(m.rank(Rationals), 1);
        // Reduced H_0 of three points has rank 3 - 1 - 0 = 2.
    }

    #[test]
    fn rank_respects_characteristic() {
        let f2 = PrimeField::new(2).unwrap();
        let m =
            SparseMatrix::from_triples(f2, 2, 2, vec![(0, 0, 2u64 % 2), (1, 1, 4u64 % 2)]).unwrap();
        assert_eq!(m.rank(f2), 0);
        let q = qmat(2, 2, &[(0, 0, 2), (1, 1, 4)]);
        assert_eq!(q.rank(Rationals), 2);
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let m: SparseMatrix<Rationals> = SparseMatrix::zero(2, 4);
        let basis = m.kernel_basis(Rationals);
        assert_eq!(basis.len(), 4);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let m = qmat(1, 2, &[(0, 0, 1), (0, 1, 1)]);
        let basis = m.kernel_basis(Rationals);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // span{(1,-1)} up to scaling
        assert_eq!(v[0].mul(&v[1].neg()).abs(), v[0].mul(&v[0]).abs());
        let prod = m.mul_vec(Rationals, v);
        assert!(prod.iter().all(Rat::is_zero));
    }

    #[test]
    fn kernel_dimension_plus_rank_is_ncols() {
        let m = qmat(
            3,
            5,
            &[
                (0, 0, 1),
                (0, 2, -2),
                (1, 1, 3),
                (1, 2, 1),
                (2, 0, 2),
                (2, 2, -4),
            ],
        );
        let r = m.rank(Rationals);
        let k = m.kernel_basis(Rationals);
        assert_eq!(r + k.len(), 5);
        for v in &k {
            assert!(m.mul_vec(Rationals, v).iter().all(Rat::is_zero));
        }
    }
}
