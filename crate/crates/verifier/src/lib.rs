//! Library side of the verifier binary: file formats, per-object analysis,
//! exhaustive theorem checks, and splitting reports in text and JSON.

pub mod analyze;
pub mod formats;
pub mod theorems;

use edgeideal::error::{Error, Result};
use edgeideal::graph::Graph;
use edgeideal::linalg::FieldSpec;
use edgeideal::monomial::{MonomialIdeal, Multidegree};
use edgeideal::splitting::{is_betti_splitting, y_partition_splitting, SplittingReport};
use serde_json::json;

/// A decomposition request for `split-check`: either an explicit generator
/// split (edges `u-v` for graphs, 0-based generator indices for ideals) or a
/// variable partition.
#[derive(Clone, Debug)]
pub enum SplitSpec {
    Edges(Vec<(usize, usize)>),
    GeneratorIndices(Vec<usize>),
    Variable(usize),
}

/// Parses `U:0-5,0-1,1-2` (edge list; the `NAME:` prefix is optional) or a
/// comma-separated index list like `0,2,4`.
pub fn parse_split_spec(spec: &str) -> Result<SplitSpec> {
    let body = spec.split_once(':').map_or(spec, |(_, rest)| rest).trim();
    if body.is_empty() {
        return Err(Error::Input("empty split specification".into()));
    }
    if body.contains('-') {
        let mut edges = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            let (u, v) = part
                .split_once('-')
                .ok_or_else(|| Error::Input(format!("bad edge `{part}` in split spec")))?;
            let u: usize = u
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad vertex `{u}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad vertex `{v}`")))?;
            edges.push((u, v));
        }
        Ok(SplitSpec::Edges(edges))
    } else {
        let mut idx = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            idx.push(
                part.parse()
                    .map_err(|_| Error::Input(format!("bad generator index `{part}`")))?,
            );
        }
        Ok(SplitSpec::GeneratorIndices(idx))
    }
}

/// Builds the (J, K) decomposition of a graph's edge ideal from an edge list:
/// J is generated by the listed edges, K by the remaining ones.
pub fn graph_split(g: &Graph, edges: &[(usize, usize)]) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let n = g.vertex_count();
    let mut left_gens = Vec::new();
    let mut left_set = std::collections::BTreeSet::new();
    for &(u, v) in edges {
        if u >= n || v >= n || !g.has_edge(u, v) {
            return Err(Error::Input(format!(
                "({u},{v}) is not an edge of the graph"
            )));
        }
        let mut exps = vec![0u32; n];
        exps[u] = 1;
        exps[v] = 1;
        left_set.insert((u.min(v), u.max(v)));
        left_gens.push(Multidegree::new(exps));
    }
    let right_gens = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !left_set.contains(&(u, v)))
        .map(|(u, v)| {
            let mut exps = vec![0u32; n];
            exps[u] = 1;
            exps[v] = 1;
            Multidegree::new(exps)
        })
        .collect();
    Ok((
        MonomialIdeal::new(n, left_gens),
        MonomialIdeal::new(n, right_gens),
    ))
}

/// Builds the (J, K) decomposition of an ideal from generator indices into
/// its canonical generator order.
pub fn ideal_split(
    ideal: &MonomialIdeal,
    indices: &[usize],
) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let gens = ideal.gens();
    let mut chosen = vec![false; gens.len()];
    for &i in indices {
        if i >= gens.len() {
            return Err(Error::Input(format!(
                "generator index {i} out of range (the ideal has {})",
                gens.len()
            )));
        }
        if chosen[i] {
            return Err(Error::Input(format!("generator index {i} repeated")));
        }
        chosen[i] = true;
    }
    let left: Vec<Multidegree> = gens
        .iter()
        .zip(&chosen)
        .filter(|(_, &c)| c)
        .map(|(g, _)| g.clone())
        .collect();
    let right: Vec<Multidegree> = gens
        .iter()
        .zip(&chosen)
        .filter(|(_, &c)| !c)
        .map(|(g, _)| g.clone())
        .collect();
    Ok((
        MonomialIdeal::new(ideal.nvars(), left),
        MonomialIdeal::new(ideal.nvars(), right),
    ))
}

/// Runs a split check on an ideal according to the decomposition request.
pub fn split_check(
    ideal: &MonomialIdeal,
    spec: &SplitSpec,
    graph: Option<&Graph>,
    f: &FieldSpec,
    cap: usize,
) -> Result<SplittingReport> {
    match spec {
        SplitSpec::Edges(edges) => {
            let g = graph.ok_or_else(|| {
                Error::Input("an edge split specification needs a graph input".into())
            })?;
            let (left, right) = graph_split(g, edges)?;
            is_betti_splitting(ideal, &left, &right, f, cap)
        }
        SplitSpec::GeneratorIndices(idx) => {
            let (left, right) = ideal_split(ideal, idx)?;
            is_betti_splitting(ideal, &left, &right, f, cap)
        }
        SplitSpec::Variable(v) => {
            if *v >= ideal.nvars() {
                return Err(Error::Input(format!(
                    "variable index {v} out of range for {} variables",
                    ideal.nvars()
                )));
            }
            y_partition_splitting(ideal, *v, f, cap)
        }
    }
}

/// Splitting report rendering: stable key order throughout.
pub fn splitting_report_json(r: &SplittingReport) -> serde_json::Value {
    json!({
        "schema": 1,
        "type": "splitting",
        "field": r.field.characteristic(),
        "is_splitting": r.is_splitting,
        "ledger": r.rows.iter().map(|row| json!({
            "i": row.i,
            "j": row.j,
            "beta_whole": row.beta_whole,
            "beta_left": row.beta_left,
            "beta_right": row.beta_right,
            "beta_meet_prev": row.beta_meet_prev,
            "residual": row.residual,
        })).collect::<Vec<_>>(),
    })
}

pub fn splitting_report_text(r: &SplittingReport) -> String {
    let mut out = format!(
        "betti splitting over {}: {}\n",
        r.field,
        if r.is_splitting { "YES" } else { "NO" }
    );
    out.push_str("  (i, j)    whole    left   right  meet@i-1  residual\n");
    for row in &r.rows {
        out.push_str(&format!(
            "  ({}, {})  {:>7} {:>7} {:>7} {:>9} {:>9}\n",
            row.i,
            row.j,
            row.beta_whole,
            row.beta_left,
            row.beta_right,
            row.beta_meet_prev,
            row.residual
        ));
    }
    out
}
