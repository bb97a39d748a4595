//! Betti splittings: detection of the splitting equation
//! beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K)
//! for generator partitions I = J + K, the co-two-pair and y-partition
//! splitting families, and the linearity-defect / projective-dimension /
//! regularity consequences of a passing splitting.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::field::FieldSpec;
use crate::lind::linearity_defect;
use crate::monomial::{MonomialIdeal, Multidegree};
use crate::resolution::{betti_table_of, BettiTable};
use std::collections::BTreeSet;

/// One (i, j) row of the splitting ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRow {
    pub i: u32,
    pub j: u32,
    pub beta_whole: u64,
    pub beta_left: u64,
    pub beta_right: u64,
    /// beta_{i-1, j} of the intersection.
    pub beta_meet_prev: u64,
    /// beta_whole - (beta_left + beta_right + beta_meet_prev).
    pub residual: i64,
}

/// Full per-(i, j) ledger of a candidate Betti splitting.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub field: FieldSpec,
    pub is_splitting: bool,
    pub rows: Vec<SplitRow>,
    pub whole: BettiTable,
    pub left: BettiTable,
    pub right: BettiTable,
    pub meet: BettiTable,
}

impl SplittingReport {
    /// Residual of the total Betti numbers at homological degree i.
    pub fn total_residual(&self, i: u32) -> i64 {
        self.rows
            .iter()
            .filter(|r| r.i == i)
            .map(|r| r.residual)
            .sum()
    }
}

/// Evaluates the splitting equation for a generator partition I = J + K.
/// The generators of J and K must partition the generators of I; that is
/// checked, not assumed.
pub fn is_betti_splitting(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    f: &FieldSpec,
    cap: usize,
) -> Result<SplittingReport> {
    check_partition(whole, left, right)?;
    let meet_ideal = left.intersect(right)?;
    let whole_t = betti_table_of(whole, f, cap)?;
    let left_t = betti_table_of(left, f, cap)?;
    let right_t = betti_table_of(right, f, cap)?;
    let meet_t = betti_table_of(&meet_ideal, f, cap)?;
    let report = build_report(*f, whole_t, left_t, right_t, meet_t);
    if report.is_splitting {
        // On a splitting, pd and reg of the whole are forced by the parts and
        // the intersection; a violation means the Betti computation is wrong.
        let pd_rhs = [
            report.left.projective_dimension().map(|v| v as i64),
            report.right.projective_dimension().map(|v| v as i64),
            report.meet.projective_dimension().map(|v| v as i64 + 1),
        ]
        .into_iter()
        .flatten()
        .max();
        let reg_rhs = [
            report.left.regularity(),
            report.right.regularity(),
            report.meet.regularity().map(|v| v - 1),
        ]
        .into_iter()
        .flatten()
        .max();
        let pd_lhs = report.whole.projective_dimension().map(|v| v as i64);
        let reg_lhs = report.whole.regularity();
        if pd_lhs != pd_rhs || reg_lhs != reg_rhs {
            return Err(Error::Internal(format!(
                "splitting passed but pd/reg identities fail: pd {pd_lhs:?} vs {pd_rhs:?}, \
                 reg {reg_lhs:?} vs {reg_rhs:?}"
            )));
        }
    }
    Ok(report)
}

fn check_partition(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
) -> Result<()> {
    let l: BTreeSet<&Multidegree> = left.gens().iter().collect();
    let r: BTreeSet<&Multidegree> = right.gens().iter().collect();
    let w: BTreeSet<&Multidegree> = whole.gens().iter().collect();
    if !l.is_disjoint(&r) {
        return Err(Error::Input(
            "generator sets of the two parts overlap".into(),
        ));
    }
    let union: BTreeSet<&Multidegree> = l.union(&r).copied().collect();
    if union != w {
        return Err(Error::Input(
            "generators of the parts do not partition the generators of the whole".into(),
        ));
    }
    Ok(())
}

fn build_report(
    field: FieldSpec,
    whole: BettiTable,
    left: BettiTable,
    right: BettiTable,
    meet: BettiTable,
) -> SplittingReport {
    let mut keys: BTreeSet<(u32, u32)> = BTreeSet::new();
    keys.extend(whole.graded_entries().keys().copied());
    keys.extend(left.graded_entries().keys().copied());
    keys.extend(right.graded_entries().keys().copied());
    keys.extend(meet.graded_entries().keys().map(|&(i, j)| (i + 1, j)));
    let mut rows = Vec::with_capacity(keys.len());
    let mut ok = true;
    for (i, j) in keys {
        let w = whole.beta(i, j);
        let l = left.beta(i, j);
        let r = right.beta(i, j);
        let m = if i > 0 { meet.beta(i - 1, j) } else { 0 };
        let residual = w as i64 - (l + r + m) as i64;
        if residual != 0 {
            ok = false;
        }
        rows.push(SplitRow {
            i,
            j,
            beta_whole: w,
            beta_left: l,
            beta_right: r,
            beta_meet_prev: m,
            residual,
        });
    }
    SplittingReport {
        field,
        is_splitting: ok,
        rows,
        whole,
        left,
        right,
        meet,
    }
}

/// For every co-two-pair e of a weakly chordal graph, the decomposition
/// I(G) = (e) + I(G \ e) with its splitting report. Inputs outside the
/// theorem scope (not weakly chordal, or edgeless) are domain errors.
pub fn co_two_pair_splittings(
    g: &Graph,
    f: &FieldSpec,
    cap: usize,
) -> Result<Vec<((usize, usize), SplittingReport)>> {
    if g.edge_count() == 0 {
        return Err(Error::Domain("the graph has no edges".into()));
    }
    if !g.is_weakly_chordal() {
        return Err(Error::Domain(
            "co-two-pair splittings are stated for weakly chordal graphs".into(),
        ));
    }
    let whole = MonomialIdeal::edge_ideal(g);
    let mut out = Vec::new();
    for e in g.co_two_pairs() {
        let left = edge_generator_ideal(g, e);
        let right = MonomialIdeal::edge_ideal(&g.delete_edge(e.0, e.1));
        out.push((e, is_betti_splitting(&whole, &left, &right, f, cap)?));
    }
    Ok(out)
}

fn edge_generator_ideal(g: &Graph, e: (usize, usize)) -> MonomialIdeal {
    let mut exps = vec![0u32; g.vertex_count()];
    exps[e.0] = 1;
    exps[e.1] = 1;
    MonomialIdeal::new(g.vertex_count(), vec![Multidegree::new(exps)])
}

/// The y-partition splitting I = J + x_v L: valid in the scope where L is
/// Koszul (linearity defect 0), which is checked first.
pub fn y_partition_splitting(
    ideal: &MonomialIdeal,
    v: usize,
    f: &FieldSpec,
    cap: usize,
) -> Result<SplittingReport> {
    let (j, l) = ideal.variable_partition(v);
    if linearity_defect(&l, f, cap)? != 0 {
        return Err(Error::Domain(format!(
            "the variable part L of the x{v}-partition is not Koszul"
        )));
    }
    let xv = Multidegree::var_pow(ideal.nvars(), v, 1);
    let k = l.product_by_monomial(&xv);
    is_betti_splitting(ideal, &j, &k, f, cap)
}

/// Linearity defects around a Betti splitting, with the three inequalities
/// lind I <= max(lind J, lind K, lind(J∩K) + 1),
/// max(lind J, lind K) <= max(lind(J∩K), lind I),
/// lind(J∩K) <= max(lind J, lind K, lind I - 1),
/// and the projective-dimension / regularity identities of a splitting.
#[derive(Clone, Debug)]
pub struct InequalityReport {
    pub field: FieldSpec,
    pub lind_whole: u32,
    pub lind_left: u32,
    pub lind_right: u32,
    pub lind_meet: u32,
    pub upper_bound_holds: bool,
    pub parts_bound_holds: bool,
    pub meet_bound_holds: bool,
    pub pd_formula_holds: bool,
    pub reg_formula_holds: bool,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.upper_bound_holds
            && self.parts_bound_holds
            && self.meet_bound_holds
            && self.pd_formula_holds
            && self.reg_formula_holds
    }
}

/// Checks the linearity-defect inequalities and the pd/reg formulas on a
/// decomposition that must already be a Betti splitting (propagates a
/// splitting failure as a domain error).
pub fn check_splitting_inequalities(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    f: &FieldSpec,
    cap: usize,
) -> Result<InequalityReport> {
    check_splitting_inequalities_with(whole, left, right, f, cap, |ideal| {
        linearity_defect(ideal, f, cap)
    })
}

/// Same check with a caller-supplied linearity-defect routine, so exhaustive
/// sweeps can memoize defects across decompositions sharing parts.
pub fn check_splitting_inequalities_with(
    whole: &MonomialIdeal,
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    f: &FieldSpec,
    cap: usize,
    lind_of: impl Fn(&MonomialIdeal) -> Result<u32>,
) -> Result<InequalityReport> {
    let report = is_betti_splitting(whole, left, right, f, cap)?;
    if !report.is_splitting {
        return Err(Error::Domain(
            "the decomposition is not a Betti splitting".into(),
        ));
    }
    let meet_ideal = left.intersect(right)?;
    let li = lind_of(whole)?;
    let lj = lind_of(left)?;
    let lk = lind_of(right)?;
    let lm = lind_of(&meet_ideal)?;

    let upper_bound_holds = li <= lj.max(lk).max(lm + 1);
    let parts_bound_holds = lj.max(lk) <= lm.max(li);
    let meet_bound_holds = lm <= lj.max(lk).max(li.saturating_sub(1));

    // pd I = max(pd J, pd K, pd(J∩K) + 1) and
    // reg I = max(reg J, reg K, reg(J∩K) - 1) on every splitting.
    let pd = |t: &BettiTable| t.projective_dimension().map(|v| v as i64);
    let reg = |t: &BettiTable| t.regularity();
    let pd_formula_holds = {
        let rhs = [
            pd(&report.left),
            pd(&report.right),
            pd(&report.meet).map(|v| v + 1),
        ]
        .into_iter()
        .flatten()
        .max();
        pd(&report.whole) == rhs
    };
    let reg_formula_holds = {
        let rhs = [
            reg(&report.left),
            reg(&report.right),
            reg(&report.meet).map(|v| v - 1),
        ]
        .into_iter()
        .flatten()
        .max();
        reg(&report.whole) == rhs
    };

    Ok(InequalityReport {
        field: *f,
        lind_whole: li,
        lind_left: lj,
        lind_right: lk,
        lind_meet: lm,
        upper_bound_holds,
        parts_bound_holds,
        meet_bound_holds,
        pd_formula_holds,
        reg_formula_holds,
    })
}
