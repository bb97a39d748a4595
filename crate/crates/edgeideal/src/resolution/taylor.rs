//! The Taylor complex of a monomial ideal and the minimal resolutions derived
//! from it by streaming cancellation.

use super::complex::{GradedFreeComplex, MdegTable, SparseCols};
use super::reduce::{PivotRule, StreamingReducer};
use crate::error::{Error, Result};
use crate::linalg::field::Field;
use crate::monomial::{MonomialIdeal, Multidegree};

/// Default bound on the generator count: the Taylor complex has 2^g basis
/// elements, and past 20 generators the build is a deliberate opt-in.
pub const DEFAULT_TAYLOR_CAP: usize = 20;

fn check_cap(ideal: &MonomialIdeal, cap: usize) -> Result<usize> {
    let g = ideal.num_gens();
    if g == 0 {
        return Err(Error::Input(
            "the zero ideal has no Taylor complex; handle it by convention upstream".into(),
        ));
    }
    if g > cap {
        return Err(Error::Resource(format!(
            "ideal has {g} generators, above the Taylor cap {cap} (2^{g} subsets); \
             raise --taylor-cap or run in long-running mode"
        )));
    }
    if g > 30 {
        return Err(Error::Resource(format!(
            "{g} generators is beyond any tractable Taylor build"
        )));
    }
    Ok(g)
}

/// Iterates size-k subsets of 0..g (k >= 1) as bitmasks in ascending numeric
/// (colex) order, via Gosper's hack.
fn subsets_of_size(g: usize, k: usize) -> impl Iterator<Item = u32> {
    debug_assert!(k >= 1 && k <= g && g < 32);
    let start: u32 = (1u32 << k) - 1;
    let end: u32 = 1u32 << g;
    std::iter::successors(Some(start), move |&m| {
        let c = m & m.wrapping_neg();
        let r = m + c;
        Some((((r ^ m) >> 2) / c) | r)
    })
    .take_while(move |&m| m < end)
}

/// Rank of a popcount-k mask in the colex (ascending numeric) order of all
/// popcount-k masks: sum of C(c_j, j) over the bit positions c_1 < c_2 < ...
fn colex_rank(mask: u32, binom: &[Vec<u64>]) -> u32 {
    let mut rank = 0u64;
    let mut m = mask;
    let mut j = 1usize;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        m &= m - 1;
        rank += binom[c][j.min(c + 1)];
        j += 1;
    }
    rank as u32
}

fn binom_table(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = 1;
        for j in 1..=i {
            row[j] = 0;
        }
    }
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
    }
    t
}

fn subset_lcm(gens: &[Multidegree], mask: u32, nvars: usize) -> Multidegree {
    let mut exps = vec![0u32; nvars];
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        for (e, &ge) in exps.iter_mut().zip(gens[v].exponents()) {
            *e = (*e).max(ge);
        }
    }
    Multidegree::new(exps)
}

/// Shifts (interned) and differential columns of Taylor level i (basis =
/// (i+1)-subsets), with rows filtered by the alive mask of level i-1.
fn taylor_level<F: Field>(
    ideal: &MonomialIdeal,
    field: F,
    level: usize,
    mdegs: &mut MdegTable,
    binom: &[Vec<u64>],
    row_alive: Option<&[bool]>,
) -> (Vec<u32>, SparseCols<F::Elem>) {
    let g = ideal.num_gens();
    let k = level + 1;
    let mut shifts = Vec::new();
    let mut cols: SparseCols<F::Elem> = Vec::new();
    let one = field.one();
    let neg_one = field.neg(&one);
    for mask in subsets_of_size(g, k) {
        let lcm = subset_lcm(ideal.gens(), mask, ideal.nvars());
        shifts.push(mdegs.intern(&lcm));
        if level == 0 {
            continue;
        }
        let mut col = Vec::with_capacity(k);
        // Removing the t-th smallest element: colex rank of the face
        // decreases as t grows, so iterate t downward for sorted rows.
        let bits: Vec<u32> = {
            let mut b = Vec::with_capacity(k);
            let mut m = mask;
            while m != 0 {
                b.push(m.trailing_zeros());
                m &= m - 1;
            }
            b
        };
        for t in (0..k).rev() {
            let face = mask & !(1u32 << bits[t]);
            let row = colex_rank(face, binom);
            if row_alive.is_some_and(|alive| !alive[row as usize]) {
                continue;
            }
            let sign = if t % 2 == 0 {
                one.clone()
            } else {
                neg_one.clone()
            };
            col.push((row, sign));
        }
        cols.push(col);
    }
    if level == 0 {
        cols = Vec::new();
    }
    (shifts, cols)
}

/// The full (generally non-minimal) Taylor complex: level i is free on the
/// (i+1)-subsets of the minimal generators, shifted by the subset lcm, with
/// the signed face-omission differential.
pub fn taylor_complex<F: Field>(
    ideal: &MonomialIdeal,
    field: F,
    cap: usize,
) -> Result<GradedFreeComplex<F>> {
    let g = check_cap(ideal, cap)?;
    let binom = binom_table(g.max(1));
    let mut mdegs = MdegTable::new();
    let mut shifts = Vec::with_capacity(g);
    let mut diffs = Vec::with_capacity(g.saturating_sub(1));
    for level in 0..g {
        let (s, cols) = taylor_level(ideal, field, level, &mut mdegs, &binom, None);
        shifts.push(s);
        if level > 0 {
            diffs.push(cols);
        }
    }
    Ok(GradedFreeComplex {
        field,
        nvars: ideal.nvars(),
        mdegs,
        shifts,
        diffs,
        minimal: false,
    })
}

/// Minimal free resolution of the ideal: Taylor levels are built one at a
/// time and cancelled on the fly, so only one un-reduced differential is in
/// memory at once.
pub fn minimal_resolution_with<F: Field>(
    ideal: &MonomialIdeal,
    field: F,
    cap: usize,
    rule: PivotRule,
) -> Result<GradedFreeComplex<F>> {
    let g = check_cap(ideal, cap)?;
    let binom = binom_table(g.max(1));
    let mut red = StreamingReducer::new(field, ideal.nvars(), rule);
    for level in 0..g {
        if level == 0 {
            let (s, _) = taylor_level(ideal, field, level, &mut red.mdegs, &binom, None);
            red.push_base(s);
        } else {
            let mut mdegs = std::mem::take(&mut red.mdegs);
            let (s, cols) = taylor_level(ideal, field, level, &mut mdegs, &binom, red.prev_alive());
            red.mdegs = mdegs;
            red.push_level(s, cols);
        }
    }
    Ok(red.finish())
}

/// Minimal resolution under the default pivot order.
pub fn minimal_resolution<F: Field>(
    ideal: &MonomialIdeal,
    field: F,
    cap: usize,
) -> Result<GradedFreeComplex<F>> {
    minimal_resolution_with(ideal, field, cap, PivotRule::default())
}
