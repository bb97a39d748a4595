//! Canonical forms (lexicographically minimal adjacency bitstrings) and
//! exhaustive enumeration of small graphs, one representative per
//! isomorphism class.

use super::Graph;
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::HashSet;

impl Graph {
    /// Canonical key: the lexicographically minimal adjacency bitstring over
    /// all vertex permutations. Bits enumerate the pairs (0,1), (0,2), (1,2),
    /// (0,3), ... — i.e. vertex by vertex, so a prefix of placed vertices
    /// determines a prefix of the string — with the first pair in the most
    /// significant position. Supports up to 16 vertices (120 bits).
    pub fn canonical_key(&self) -> u128 {
        assert!(self.n <= 16, "canonical keys support up to 16 vertices");
        let nbits = self.n * (self.n - 1) / 2;
        let mut best = u128::MAX;
        let mut assigned = Vec::with_capacity(self.n);
        self.canon_rec(&mut assigned, 0, 0, 0, nbits, &mut best);
        best
    }

    fn canon_rec(
        &self,
        assigned: &mut Vec<usize>,
        used: u64,
        partial: u128,
        bits_done: usize,
        nbits: usize,
        best: &mut u128,
    ) {
        let j = assigned.len();
        if j == self.n {
            if partial < *best {
                *best = partial;
            }
            return;
        }
        for w in 0..self.n {
            if (used >> w) & 1 == 1 {
                continue;
            }
            let mut block: u128 = 0;
            for &prev in assigned.iter() {
                block = (block << 1) | u128::from(self.has_edge(prev, w));
            }
            let partial2 = (partial << j) | block;
            let done2 = bits_done + j;
            // Compare against the best key's prefix of the same length.
            if *best != u128::MAX {
                let best_prefix = *best >> (nbits - done2);
                if partial2 > best_prefix {
                    continue;
                }
            }
            assigned.push(w);
            self.canon_rec(assigned, used | (1 << w), partial2, done2, nbits, best);
            assigned.pop();
        }
    }

    /// The canonical representative of this graph's isomorphism class.
    pub fn canonical_form(&self) -> Graph {
        Graph::from_canonical_key(self.n, self.canonical_key())
    }

    /// Rebuilds a graph from a canonical key (or any key in the same bit
    /// layout).
    pub fn from_canonical_key(n: usize, key: u128) -> Graph {
        let nbits = n * (n - 1) / 2;
        let mut g = Graph::new(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if (key >> (nbits - 1 - t)) & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
                t += 1;
            }
        }
        g
    }
}

/// All graphs on exactly n vertices up to isomorphism, one canonical
/// representative per class, sorted by canonical key. Graphs on fewer
/// vertices appear padded with isolated vertices, so the enumeration also
/// exhausts every class with at most n vertices.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n < 1 || n > 8 {
        return Err(Error::Input(format!(
            "graph enumeration supports 1..=8 vertices, got {n}"
        )));
    }
    let mut keys: Vec<u128> = vec![0]; // the single 1-vertex graph
    let mut size = 1usize;
    while size < n {
        let current: Vec<Graph> = keys
            .iter()
            .map(|&k| Graph::from_canonical_key(size, k))
            .collect();
        let next: HashSet<u128> = current
            .par_iter()
            .flat_map_iter(|g| {
                (0u64..(1 << size)).map(move |mask| {
                    let mut h = Graph::new(size + 1);
                    for (u, v) in g.edges() {
                        h.add_edge(u, v).unwrap();
                    }
                    for v in 0..size {
                        if (mask >> v) & 1 == 1 {
                            h.add_edge(v, size).unwrap();
                        }
                    }
                    h.canonical_key()
                })
            })
            .collect();
        keys = next.into_iter().collect();
        keys.sort_unstable();
        size += 1;
    }
    let graphs = keys
        .into_iter()
        .map(|k| Graph::from_canonical_key(n, k))
        .filter(|g| !connected_only || g.is_connected())
        .collect();
    Ok(graphs)
}
