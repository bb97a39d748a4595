//! The `analyze` operation: all invariants of a graph (or of a monomial
//! ideal) over a chosen field, in text and JSON forms.

use crate::formats::{betti_grid, betti_json, field_json};
use edgeideal::error::Result;
use edgeideal::graph::Graph;
use edgeideal::linalg::FieldSpec;
use edgeideal::lind::linearity_defect;
use edgeideal::monomial::MonomialIdeal;
use edgeideal::resolution::{betti_table_of, BettiTable};
use serde_json::json;

/// Invariants of one graph over one field. `linearity_defect` is `None` when
/// the generator count exceeds the Taylor cap, with the refusal recorded in
/// `lind_skipped`.
#[derive(Clone, Debug)]
pub struct GraphReport {
    pub graph: Graph,
    pub field: FieldSpec,
    pub connected: bool,
    pub chordal: bool,
    pub weakly_chordal: bool,
    pub co_chordal: bool,
    pub forest: bool,
    pub induced_matching_number: usize,
    pub d_invariant: Option<usize>,
    pub betti: BettiTable,
    pub regularity: Option<i64>,
    pub projective_dimension: Option<u32>,
    pub linearity_defect: Option<u32>,
    pub lind_skipped: Option<String>,
}

/// Analyzes a graph: combinatorial flags, the Betti table of its edge ideal
/// (through the homology route), regularity, projective dimension, and — if
/// the generator count is within the cap — the linearity defect.
pub fn analyze_graph(g: &Graph, f: &FieldSpec, cap: usize) -> Result<GraphReport> {
    let ideal = MonomialIdeal::edge_ideal(g);
    let betti = betti_table_of(&ideal, f, cap)?;
    let (lind, skipped) = match linearity_defect(&ideal, f, cap) {
        Ok(v) => (Some(v), None),
        Err(edgeideal::Error::Resource(msg)) => (None, Some(format!("skipped: {msg}"))),
        Err(e) => return Err(e),
    };
    Ok(GraphReport {
        graph: g.clone(),
        field: *f,
        connected: g.is_connected(),
        chordal: g.is_chordal(),
        weakly_chordal: g.is_weakly_chordal(),
        co_chordal: g.is_co_chordal(),
        forest: g.is_forest(),
        induced_matching_number: g.induced_matching_number(),
        d_invariant: g.d_invariant().ok().map(|(d, _)| d),
        regularity: betti.regularity(),
        projective_dimension: betti.projective_dimension(),
        betti,
        linearity_defect: lind,
        lind_skipped: skipped,
    })
}

impl GraphReport {
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<Vec<usize>> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| vec![u, v])
            .collect();
        json!({
            "schema": 1,
            "type": "graph",
            "n": self.graph.vertex_count(),
            "edges": edges,
            "edge_count": self.graph.edge_count(),
            "field": field_json(&self.field),
            "connected": self.connected,
            "chordal": self.chordal,
            "weakly_chordal": self.weakly_chordal,
            "co_chordal": self.co_chordal,
            "forest": self.forest,
            "induced_matching_number": self.induced_matching_number,
            "d_invariant": self.d_invariant,
            "betti": betti_json(&self.betti),
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
            "linearity_defect": self.linearity_defect,
            "lind_skipped": self.lind_skipped,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        out.push_str(&format!(
            "graph on {} vertices, {} edges (field {})\n",
            g.vertex_count(),
            g.edge_count(),
            self.field
        ));
        out.push_str(&format!(
            "connected: {}   forest: {}\nchordal: {}   weakly chordal: {}   co-chordal: {}\n",
            self.connected, self.forest, self.chordal, self.weakly_chordal, self.co_chordal
        ));
        out.push_str(&format!(
            "induced matching number: {}\n",
            self.induced_matching_number
        ));
        match self.d_invariant {
            Some(d) => out.push_str(&format!("d(G): {d}\n")),
            None => out.push_str("d(G): undefined (no edges)\n"),
        }
        out.push_str("betti table of the edge ideal:\n");
        out.push_str(&betti_grid(&self.betti));
        out.push_str(&format!(
            "regularity: {}   projective dimension: {}\n",
            opt(self.regularity),
            opt(self.projective_dimension)
        ));
        match (self.linearity_defect, &self.lind_skipped) {
            (Some(l), _) => out.push_str(&format!("linearity defect: {l}\n")),
            (None, Some(reason)) => out.push_str(&format!("linearity defect: {reason}\n")),
            (None, None) => out.push_str("linearity defect: -\n"),
        }
        out
    }
}

/// Invariants of a monomial ideal over one field.
#[derive(Clone, Debug)]
pub struct IdealReport {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub betti: Option<BettiTable>,
    pub betti_skipped: Option<String>,
    pub regularity: Option<i64>,
    pub projective_dimension: Option<u32>,
    pub linearity_defect: Option<u32>,
    pub lind_skipped: Option<String>,
}

pub fn analyze_ideal(
    names: &[String],
    ideal: &MonomialIdeal,
    f: &FieldSpec,
    cap: usize,
) -> Result<IdealReport> {
    let (betti, betti_skipped) = match betti_table_of(ideal, f, cap) {
        Ok(t) => (Some(t), None),
        Err(edgeideal::Error::Resource(msg)) => (None, Some(format!("skipped: {msg}"))),
        Err(e) => return Err(e),
    };
    let (lind, lind_skipped) = match linearity_defect(ideal, f, cap) {
        Ok(v) => (Some(v), None),
        Err(edgeideal::Error::Resource(msg)) => (None, Some(format!("skipped: {msg}"))),
        Err(e) => return Err(e),
    };
    Ok(IdealReport {
        names: names.to_vec(),
        ideal: ideal.clone(),
        field: *f,
        regularity: betti.as_ref().and_then(BettiTable::regularity),
        projective_dimension: betti.as_ref().and_then(BettiTable::projective_dimension),
        betti,
        betti_skipped,
        linearity_defect: lind,
        lind_skipped,
    })
}

impl IdealReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": 1,
            "type": "ideal",
            "nvars": self.ideal.nvars(),
            "variables": self.names,
            "generators": self.ideal.gens().iter()
                .map(|g| g.format_with(&self.names)).collect::<Vec<_>>(),
            "field": field_json(&self.field),
            "betti": self.betti.as_ref().map(betti_json),
            "betti_skipped": self.betti_skipped,
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
            "linearity_defect": self.linearity_defect,
            "lind_skipped": self.lind_skipped,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ideal with {} generators in {} variables (field {})\n",
            self.ideal.num_gens(),
            self.ideal.nvars(),
            self.field
        ));
        out.push_str(&format!("  {}\n", self.ideal.format_with(&self.names)));
        match (&self.betti, &self.betti_skipped) {
            (Some(t), _) => {
                out.push_str("betti table:\n");
                out.push_str(&betti_grid(t));
            }
            (None, Some(reason)) => out.push_str(&format!("betti table: {reason}\n")),
            (None, None) => {}
        }
        out.push_str(&format!(
            "regularity: {}   projective dimension: {}\n",
            opt(self.regularity),
            opt(self.projective_dimension)
        ));
        match (self.linearity_defect, &self.lind_skipped) {
            (Some(l), _) => out.push_str(&format!("linearity defect: {l}\n")),
            (None, Some(reason)) => out.push_str(&format!("linearity defect: {reason}\n")),
            (None, None) => out.push_str("linearity defect: -\n"),
        }
        out
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}
