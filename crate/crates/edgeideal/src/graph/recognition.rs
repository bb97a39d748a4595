//! Chordality and weak chordality via induced-cycle search and simplicial
//! elimination.

use super::Graph;

impl Graph {
    /// True iff the graph has no induced cycle with at least `min_len`
    /// vertices. Brute-force induced-path extension with bitset pruning.
    pub fn has_induced_cycle_at_least(&self, min_len: usize) -> bool {
        debug_assert!(min_len >= 3);
        if self.n < min_len {
            return false;
        }
        // The smallest cycle vertex anchors the search to avoid revisits.
        for s in 0..self.n {
            let above = self.full_mask() & !((1u64 << (s + 1)) - 1);
            let mut first = self.adj[s] & above;
            while first != 0 {
                let v = first.trailing_zeros() as usize;
                first &= first - 1;
                // Path s-v so far; interior vertices (everything but s and the
                // tip) must see no later path vertex.
                if self.cycle_dfs(s, v, 1u64 << v, 0, 2, min_len, above) {
                    return true;
                }
            }
        }
        false
    }

    /// Extends an induced path s-..-tip; `interior_nbrs` holds neighbors of
    /// interior path vertices (excluding s and tip), `path` all non-s path
    /// vertices. `len` counts path vertices so far.
    #[allow(clippy::too_many_arguments)]
    fn cycle_dfs(
        &self,
        s: usize,
        tip: usize,
        path: u64,
        interior_nbrs: u64,
        len: usize,
        min_len: usize,
        above: u64,
    ) -> bool {
        let forbidden = path | interior_nbrs | (1 << s);
        let candidates = self.adj[tip] & above & !forbidden;
        // Closing candidates are adjacent to s.
        if len + 1 >= min_len && candidates & self.adj[s] != 0 {
            return true;
        }
        // Extension candidates must avoid s's neighborhood, otherwise any
        // later closure would carry a chord.
        let mut ext = candidates & !self.adj[s];
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            if self.cycle_dfs(
                s,
                w,
                path | (1 << w),
                interior_nbrs | self.adj[tip],
                len + 1,
                min_len,
                above,
            ) {
                return true;
            }
        }
        false
    }

    /// Chordal: no induced cycle of length greater than 3. Decided by
    /// simplicial-vertex peeling (a perfect elimination ordering exists iff
    /// the graph is chordal).
    pub fn is_chordal(&self) -> bool {
        let mut remaining = self.full_mask();
        while remaining != 0 {
            let mut found = None;
            let mut scan = remaining;
            'outer: while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let nb = self.adj[v] & remaining;
                // v is simplicial iff its remaining neighborhood is a clique.
                let mut check = nb;
                while check != 0 {
                    let u = check.trailing_zeros() as usize;
                    check &= check - 1;
                    if nb & !self.adj[u] & !(1 << u) != 0 {
                        continue 'outer;
                    }
                }
                found = Some(v);
                break;
            }
            match found {
                Some(v) => remaining &= !(1 << v),
                None => return false,
            }
        }
        true
    }

    /// Weakly chordal: neither the graph nor its complement has an induced
    /// cycle with 5 or more vertices.
    pub fn is_weakly_chordal(&self) -> bool {
        !self.has_induced_cycle_at_least(5) && !self.complement().has_induced_cycle_at_least(5)
    }

    /// Co-chordal: the complement is chordal.
    pub fn is_co_chordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// Two-colorability by breadth-first search per component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n]; // 2 = unassigned
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let mut nb = self.adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if color[u] == 2 {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn trees_are_chordal() {
        assert!(Graph::path(7).is_chordal());
        let mut star = Graph::new(5);
        for v in 1..5 {
            star.add_edge(0, v).unwrap();
        }
        assert!(star.is_chordal());
    }

    #[test]
    fn squares_are_not_chordal() {
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(6).is_chordal());
    }

    #[test]
    fn disjoint_chordal_pieces_are_chordal() {
        let g = Graph::disjoint_edges(2).disjoint_union(&Graph::complete(3));
        assert!(g.is_chordal());
    }

    #[test]
    fn pentagon_is_not_weakly_chordal() {
        assert!(!Graph::cycle(5).is_weakly_chordal());
        // Self-complementary, so the complement side trips as well.
        assert!(!Graph::cycle(5).complement().is_weakly_chordal());
    }

    #[test]
    fn chordal_implies_weakly_chordal_exhaustively() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                if g.is_chordal() {
                    assert!(g.is_weakly_chordal());
                }
            }
        }
    }

    #[test]
    fn square_is_weakly_chordal() {
        assert!(Graph::cycle(4).is_weakly_chordal());
    }

    #[test]
    fn long_cycles_and_anticycles_are_not_weakly_chordal() {
        for n in 5..=8 {
            assert!(!Graph::cycle(n).is_weakly_chordal(), "C{n}");
            assert!(!Graph::anticycle(n).is_weakly_chordal(), "anticycle {n}");
        }
    }

    #[test]
    fn bipartiteness() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(Graph::path(7).is_bipartite());
        assert!(!Graph::complete(3).is_bipartite());
        assert!(Graph::disjoint_edges(3).is_bipartite());
    }

    #[test]
    fn chordality_agrees_with_induced_cycle_search() {
        // Peeling is the production path; the brute-force induced-cycle
        // search is the independent oracle.
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                assert_eq!(
                    g.is_chordal(),
                    !g.has_induced_cycle_at_least(4),
                    "disagreement on {:?}",
                    g.edges()
                );
            }
        }
    }
}
