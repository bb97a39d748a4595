//! Finite simple graphs on indexed vertices with bitset adjacency, the
//! recognition algorithms (chordal, weakly chordal), the combinatorial
//! invariants of edge-ideal theory (induced matching number, two-pairs and
//! co-two-pairs, strongly disjoint families of complete bipartite subgraphs),
//! and exhaustive enumeration of small graphs up to isomorphism.

mod bipartite;
mod dinv;
mod enumerate;
mod matching;
mod recognition;

pub use dinv::*;
pub use enumerate::*;

use crate::error::{Error, Result};

pub(crate) const MAX_VERTICES: usize = 64;

/// Simple undirected graph; vertices are `0..n`, adjacency is symmetric and
/// irreflexive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The cycle 0-1-...-(n-1)-0 (n >= 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    /// The path 0-1-...-(n-1) on n vertices (n >= 1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    /// g disjoint edges (2g vertices): edge 2i-(2i+1).
    pub fn disjoint_edges(g: usize) -> Self {
        let mut graph = Graph::new(2 * g);
        for i in 0..g {
            graph.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        graph
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// The anticycle of length n: the complement of the cycle C_n.
    pub fn anticycle(n: usize) -> Self {
        Graph::cycle(n).complement()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u} not allowed")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbor bitmask of v.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Sorted edge list (u < v).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    /// Bitmask with all n vertex bits set.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Complement graph: x ~ y iff x != y and x is not adjacent to y here.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the vertices of `mask`, reindexed to 0..k; the
    /// second component maps new indices back to original vertices.
    pub fn induced_subgraph(&self, mask: u64) -> Result<(Graph, Vec<usize>)> {
        if mask & !self.full_mask() != 0 {
            return Err(Error::Input(format!(
                "vertex set {mask:#b} outside 0..{}",
                self.n
            )));
        }
        let verts: Vec<usize> = (0..self.n).filter(|v| (mask >> v) & 1 == 1).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        Ok((g, verts))
    }

    /// Deletion of a single edge (vertices kept).
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Applies a vertex relabeling: vertex v of self becomes perm[v].
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    /// True iff the graph has no cycle at all.
    pub fn is_forest(&self) -> bool {
        // A graph is a forest iff every connected component has
        // |edges| = |vertices| - 1; equivalently total edges = n - #components.
        let comps = self.component_count();
        self.edge_count() == self.n - comps
    }

    fn component_count(&self) -> usize {
        let mut unseen = self.full_mask();
        let mut comps = 0;
        while unseen != 0 {
            comps += 1;
            let start = unseen.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            unseen &= !seen;
        }
        comps
    }

    /// Disjoint union on a fresh vertex block.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).unwrap();
        }
        g
    }

    /// Checks the structural invariants (symmetric, irreflexive, edge count
    /// consistent with degree sums). Construction maintains them; this is the
    /// explicit witness used by tests.
    pub fn validate(&self) -> Result<()> {
        let full = self.full_mask();
        for v in 0..self.n {
            if self.adj[v] & !full != 0 {
                return Err(Error::Internal(format!("vertex {v} has out-of-range bits")));
            }
            if (self.adj[v] >> v) & 1 == 1 {
                return Err(Error::Internal(format!("loop at {v}")));
            }
            let mut nb = self.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if (self.adj[u] >> v) & 1 != 1 {
                    return Err(Error::Internal(format!("asymmetric edge ({v},{u})")));
                }
            }
        }
        let degree_sum: usize = (0..self.n).map(|v| self.degree(v)).sum();
        if degree_sum != 2 * self.edge_count() {
            return Err(Error::Internal("edge count mismatch".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_square_is_two_disjoint_edges() {
        let c4 = Graph::cycle(4);
        let c = c4.complement();
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_is_an_involution() {
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn complement_of_pentagon_is_isomorphic_to_pentagon() {
        // Brute-force isomorphism oracle over all 5! vertex relabelings.
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        let mut perm = [0usize, 1, 2, 3, 4];
        let found = permutations(&mut perm, 0, &|p| cc.permuted(p) == c5);
        assert!(found);
    }

    fn permutations(perm: &mut [usize; 5], k: usize, check: &dyn Fn(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return check(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permutations(perm, k + 1, check) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    #[test]
    fn induced_subgraph_of_hexagon() {
        let c6 = Graph::cycle(6);
        let (h, map) = c6.induced_subgraph(0b011011).unwrap();
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]); // a 2K2
    }

    #[test]
    fn induced_subgraph_on_everything_is_identity() {
        let g = Graph::from_edges(5, &[(0, 2), (1, 4), (2, 3)]).unwrap();
        let (h, map) = g.induced_subgraph(g.full_mask()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_subgraph_of_pentagon_is_path() {
        let c5 = Graph::cycle(5);
        let (h, _) = c5.induced_subgraph(0b00111).unwrap();
        assert_eq!(h, Graph::path(3));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let g = Graph::new(3);
        assert!(g.induced_subgraph(0b1000).is_err());
    }

    #[test]
    fn edge_count_matches_half_degree_sum() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (3, 5), (2, 4)]).unwrap();
        g.validate().unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn loops_and_out_of_range_edges_are_rejected() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }

    #[test]
    fn forest_recognition() {
        assert!(Graph::path(6).is_forest());
        assert!(Graph::disjoint_edges(3).is_forest());
        assert!(!Graph::cycle(4).is_forest());
        let mut g = Graph::path(4);
        g.add_edge(0, 3).unwrap(); // closes a cycle
        assert!(!g.is_forest());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected());
        assert!(!Graph::disjoint_edges(2).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(!Graph::new(2).is_connected());
    }
}
