//! Strongly disjoint families of complete bipartite subgraphs and the
//! invariant d(G) = max over such families of (total vertices - block count).

use super::Graph;
use crate::error::{Error, Result};

/// A family of complete bipartite subgraphs B_1..B_g with pairwise disjoint
/// vertex sets, witnessed by an induced matching with one edge inside each
/// block. Blocks are stored as bipartition bitmasks (side_a, side_b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyDisjointFamily {
    pub blocks: Vec<(u64, u64)>,
    pub witness_matching: Vec<(usize, usize)>,
}

impl StronglyDisjointFamily {
    /// Total score of the family: sum of block sizes minus the block count.
    pub fn score(&self) -> usize {
        let total: usize = self
            .blocks
            .iter()
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum();
        total - self.blocks.len()
    }

    /// Checks all defining conditions against the graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.blocks.len() != self.witness_matching.len() {
            return Err(Error::Internal("family and witness sizes differ".into()));
        }
        let mut used = 0u64;
        for (i, &(a, b)) in self.blocks.iter().enumerate() {
            if a == 0 || b == 0 || a & b != 0 {
                return Err(Error::Internal(format!("block {i} is not a bipartition")));
            }
            if (a | b) & used != 0 {
                return Err(Error::Internal(format!("block {i} overlaps earlier ones")));
            }
            used |= a | b;
            let mut sa = a;
            while sa != 0 {
                let u = sa.trailing_zeros() as usize;
                sa &= sa - 1;
                if b & !g.neighbors(u) != 0 {
                    return Err(Error::Internal(format!("block {i} is not complete")));
                }
            }
            let (x, y) = self.witness_matching[i];
            let inside = ((a >> x) & 1 == 1 && (b >> y) & 1 == 1)
                || ((b >> x) & 1 == 1 && (a >> y) & 1 == 1);
            if !inside {
                return Err(Error::Internal(format!(
                    "witness edge {i} does not span block {i}"
                )));
            }
        }
        if !g.is_induced_matching(&self.witness_matching) {
            return Err(Error::Internal("witness is not an induced matching".into()));
        }
        Ok(())
    }
}

impl Graph {
    /// Exact d(G) together with one maximizing family. Errors on edgeless
    /// graphs, where no family exists.
    pub fn d_invariant(&self) -> Result<(usize, StronglyDisjointFamily)> {
        if self.edge_count() == 0 {
            return Err(Error::Domain(
                "d(G) is undefined for graphs without edges".into(),
            ));
        }
        let blocks = self.complete_bipartite_pairs();
        let mut best: Option<(usize, StronglyDisjointFamily)> = None;
        for matching in self.induced_matchings() {
            let matched: u64 = matching
                .iter()
                .map(|&(u, v)| (1u64 << u) | (1 << v))
                .fold(0, |x, y| x | y);
            let mut chosen = Vec::with_capacity(matching.len());
            self.grow_blocks(&matching, 0, matched, 0u64, &blocks, &mut chosen, &mut best);
        }
        best.ok_or_else(|| Error::Internal("graph with an edge admits a family".into()))
    }

    /// All complete bipartite subgraph bipartitions (a, b), deduplicated by
    /// requiring the smallest involved vertex to lie in `a`.
    fn complete_bipartite_pairs(&self) -> Vec<(u64, u64)> {
        let n = self.n;
        let mut out = Vec::new();
        // Enumerate the side containing the smallest vertex, then all choices
        // of the other side inside the common neighborhood.
        for a in 1u64..(1 << n) {
            let low = a.trailing_zeros() as usize;
            let mut common = self.full_mask();
            let mut sa = a;
            while sa != 0 {
                let u = sa.trailing_zeros() as usize;
                sa &= sa - 1;
                common &= self.neighbors(u);
            }
            // Keep only partners above the anchor to dedup (a,b) vs (b,a).
            common &= !a;
            let rest = common & !((1u64 << low) - 1) & !(1 << low);
            let mut b = rest;
            loop {
                if b != 0 {
                    out.push((a, b));
                }
                if b == 0 {
                    break;
                }
                b = (b - 1) & rest;
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn grow_blocks(
        &self,
        matching: &[(usize, usize)],
        idx: usize,
        matched: u64,
        used: u64,
        blocks: &[(u64, u64)],
        chosen: &mut Vec<(u64, u64)>,
        best: &mut Option<(usize, StronglyDisjointFamily)>,
    ) {
        if idx == matching.len() {
            let family = StronglyDisjointFamily {
                blocks: chosen.clone(),
                witness_matching: matching.to_vec(),
            };
            let score = family.score();
            if best.as_ref().map_or(true, |(s, _)| score > *s) {
                debug_assert!(family.validate(self).is_ok());
                *best = Some((score, family));
            }
            return;
        }
        let (u, v) = matching[idx];
        // The block may use vertices not claimed by other blocks or by the
        // other matched edges.
        let off_limits = used | (matched & !(1 << u) & !(1 << v));
        for &(a, b) in blocks {
            let cover = a | b;
            if cover & off_limits != 0 {
                continue;
            }
            let spans = ((a >> u) & 1 == 1 && (b >> v) & 1 == 1)
                || ((b >> u) & 1 == 1 && (a >> v) & 1 == 1);
            if !spans {
                continue;
            }
            chosen.push((a, b));
            self.grow_blocks(
                matching,
                idx + 1,
                matched,
                used | cover,
                blocks,
                chosen,
                best,
            );
            chosen.pop();
        }
    }
}
