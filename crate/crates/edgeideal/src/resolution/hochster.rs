//! Betti numbers of squarefree monomial ideals by reduced simplicial
//! homology of restrictions of the Stanley–Reisner complex — for an edge
//! ideal, the independence complex of the graph. This route is independent
//! of the Taylor/cancellation machinery and serves as its oracle.

use super::betti::BettiTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::linalg::matrix::SparseMatrix;
use crate::monomial::{MonomialIdeal, Multidegree};
use rayon::prelude::*;
use std::collections::HashSet;

/// Betti table of the edge ideal of a graph over the given field.
pub fn hochster_betti(g: &Graph, f: &FieldSpec) -> BettiTable {
    hochster_betti_ideal(&MonomialIdeal::edge_ideal(g), f)
        .expect("edge ideals are squarefree and proper")
}

/// Betti table of an arbitrary squarefree monomial ideal: for every vertex
/// subset s, beta_{i,s}(I) is the dimension of the reduced homology
/// H~_{|s|-i-2} of the restricted Stanley–Reisner complex
/// { t ⊆ s : x^t ∉ I }.
pub fn hochster_betti_ideal(ideal: &MonomialIdeal, f: &FieldSpec) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::Precondition(
            "this Betti route requires a squarefree ideal".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal is not proper".into()));
    }
    let n = ideal.nvars();
    if n > 64 {
        return Err(Error::Resource("more than 64 variables".into()));
    }
    let supports: Vec<u64> = ideal.gens().iter().map(Multidegree::support).collect();
    // Nonzero multigraded Betti numbers live only at lcms of generator
    // subsets; for small ambients the full subset scan is cheap enough.
    let sigmas: Vec<u64> = if n <= 12 {
        (1u64..(1u64 << n)).collect()
    } else {
        union_closure(&supports)
    };
    let contributions: Vec<(u32, u64, u64)> = sigmas
        .par_iter()
        .flat_map_iter(|&sigma| sigma_betti(&supports, sigma, f).into_iter())
        .collect();
    Ok(BettiTable::from_multigraded(
        *f,
        contributions
            .into_iter()
            .map(|(i, sigma, dim)| ((i, Multidegree::from_support(n, sigma)), dim)),
    ))
}

/// All nonempty unions of the given supports.
fn union_closure(supports: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: Vec<u64> = Vec::new();
    for &s in supports {
        if seen.insert(s) {
            queue.push(s);
        }
    }
    while let Some(sigma) = queue.pop() {
        for &s in supports {
            let u = sigma | s;
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Nonzero contributions (i, sigma, dim) from one vertex subset.
fn sigma_betti(supports: &[u64], sigma: u64, f: &FieldSpec) -> Vec<(u32, u64, u64)> {
    let faces = faces_by_dimension(supports, sigma);
    let hom = match f {
        FieldSpec::Char0 => homology_dims(Rationals, &faces),
        FieldSpec::Prime(p) => homology_dims(PrimeField::new(*p).expect("validated prime"), &faces),
    };
    let size = sigma.count_ones() as i64;
    let mut out = Vec::new();
    for (d_idx, dim) in hom.into_iter().enumerate() {
        if dim == 0 {
            continue;
        }
        let d = d_idx as i64 - 1; // homological dimension, starting at -1
        let i = size - d - 2;
        if i >= 0 {
            out.push((i as u32, sigma, dim));
        }
    }
    out
}

/// Faces of { t ⊆ sigma : no generator support is contained in t }, grouped
/// by cardinality: faces[k] lists the k-subsets as sorted bitmasks. The empty
/// face is always present (position 0).
fn faces_by_dimension(supports: &[u64], sigma: u64) -> Vec<Vec<u64>> {
    let verts: Vec<usize> = (0..64).filter(|v| (sigma >> v) & 1 == 1).collect();
    let mut faces: Vec<Vec<u64>> = vec![vec![0]];
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((from, current)) = stack.pop() {
        for (idx, &v) in verts.iter().enumerate().skip(from) {
            let cand = current | (1u64 << v);
            // Reject if some generator lands inside the extended set; only
            // generators through v need checking.
            let dead = supports
                .iter()
                .any(|&s| (s >> v) & 1 == 1 && s & !cand == 0);
            if dead {
                continue;
            }
            let k = cand.count_ones() as usize;
            if faces.len() <= k {
                faces.resize(k + 1, Vec::new());
            }
            faces[k].push(cand);
            stack.push((idx + 1, cand));
        }
    }
    for level in faces.iter_mut() {
        level.sort_unstable();
    }
    faces
}

/// Reduced homology dimensions of the complex, indexed from dimension -1:
/// result[d+1] = dim H~_d.
fn homology_dims<F: Field>(field: F, faces: &[Vec<u64>]) -> Vec<u64> {
    // faces[k] holds k-element faces (dimension k-1); boundary_k maps
    // faces[k] -> faces[k-1] for k >= 1.
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = boundary_matrix(field, &faces[k - 1], &faces[k]).rank(field);
    }
    let mut out = Vec::with_capacity(faces.len());
    for k in 0..faces.len() {
        let dim_ck = faces[k].len();
        let h = dim_ck - ranks[k] - ranks[k + 1];
        out.push(h as u64);
    }
    out
}

fn boundary_matrix<F: Field>(field: F, targets: &[u64], sources: &[u64]) -> SparseMatrix<F> {
    let one = field.one();
    let neg_one = field.neg(&one);
    let mut triples = Vec::with_capacity(sources.len() * 4);
    for (c, &face) in sources.iter().enumerate() {
        let mut m = face;
        let mut t = 0usize;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            let sub = face & !(1u64 << v);
            let r = targets.binary_search(&sub).expect("face closure");
            let sign = if t % 2 == 0 {
                one.clone()
            } else {
                neg_one.clone()
            };
            triples.push((r, c, sign));
            t += 1;
        }
    }
    SparseMatrix::from_triples(field, targets.len(), sources.len(), triples)
        .expect("well-formed boundary")
}
