//! Induced matchings, two-pairs and co-two-pairs.

use super::Graph;

impl Graph {
    /// Exact induced matching number by branch and bound over edges; 0 for
    /// edgeless graphs.
    pub fn induced_matching_number(&self) -> usize {
        let edges = self.edges();
        let mut best = 0;
        self.inmat_branch(&edges, 0, 0u64, 0, &mut best);
        best
    }

    fn inmat_branch(
        &self,
        edges: &[(usize, usize)],
        from: usize,
        excluded: u64,
        size: usize,
        best: &mut usize,
    ) {
        if size > *best {
            *best = size;
        }
        // Cheap bound: remaining candidate edges can add at most one each.
        let mut remaining = 0;
        for &(u, v) in &edges[from..] {
            if (excluded >> u) & 1 == 0 && (excluded >> v) & 1 == 0 {
                remaining += 1;
            }
        }
        if size + remaining <= *best {
            return;
        }
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if (excluded >> u) & 1 == 1 || (excluded >> v) & 1 == 1 {
                continue;
            }
            // Picking uv forbids its closed neighborhood for later edges.
            let newly = self.adj[u] | self.adj[v] | (1 << u) | (1 << v);
            self.inmat_branch(edges, i + 1, excluded | newly, size + 1, best);
        }
    }

    /// All induced matchings (as edge lists, nonempty), in deterministic
    /// order. Exponential in principle; intended for small graphs.
    pub fn induced_matchings(&self) -> Vec<Vec<(usize, usize)>> {
        let edges = self.edges();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.matchings_dfs(&edges, 0, 0u64, &mut current, &mut out);
        out
    }

    fn matchings_dfs(
        &self,
        edges: &[(usize, usize)],
        from: usize,
        excluded: u64,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if (excluded >> u) & 1 == 1 || (excluded >> v) & 1 == 1 {
                continue;
            }
            let newly = self.adj[u] | self.adj[v] | (1 << u) | (1 << v);
            current.push((u, v));
            out.push(current.clone());
            self.matchings_dfs(edges, i + 1, excluded | newly, current, out);
            current.pop();
        }
    }

    /// Witnesses an edge set as an induced matching: pairwise vertex-disjoint
    /// and no edge of the graph between different matched edges.
    pub fn is_induced_matching(&self, matching: &[(usize, usize)]) -> bool {
        let mut used = 0u64;
        for &(u, v) in matching {
            if !self.has_edge(u, v) {
                return false;
            }
            let pair = (1u64 << u) | (1 << v);
            if used & pair != 0 {
                return false;
            }
            used |= pair;
        }
        for (a, &(u, v)) in matching.iter().enumerate() {
            for &(x, y) in &matching[a + 1..] {
                if self.has_edge(u, x)
                    || self.has_edge(u, y)
                    || self.has_edge(v, x)
                    || self.has_edge(v, y)
                {
                    return false;
                }
            }
        }
        true
    }

    /// All two-pairs: nonadjacent pairs (x, y) such that every induced path
    /// between them has length exactly 2 (vacuously true when no path
    /// exists). Decided by the neighborhood-cut criterion — x and y must be
    /// separated once their common neighbors are removed — which agrees with
    /// the brute-force induced-path oracle (`find_two_pairs_by_paths`) on all
    /// graphs with at most 7 vertices.
    pub fn find_two_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if !self.has_edge(x, y) && self.is_two_pair_by_cut(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn is_two_pair_by_cut(&self, x: usize, y: usize) -> bool {
        let removed = self.adj[x] & self.adj[y];
        // BFS from x avoiding the common neighborhood; a surviving x-y
        // connection is exactly an induced path of length >= 3.
        let blocked = removed | (1 << x);
        let mut seen = 1u64 << x;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            if (next >> y) & 1 == 1 {
                return false;
            }
            frontier = next & !seen & !blocked;
            seen |= next;
        }
        true
    }

    /// Brute-force two-pair decision: enumerates induced x-y paths and
    /// reports pairs with no induced path of length 3 or more.
    pub fn find_two_pairs_by_paths(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if !self.has_edge(x, y) && !self.has_long_induced_path(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// True iff some induced x-y path has length at least 3.
    fn has_long_induced_path(&self, x: usize, y: usize) -> bool {
        let mut first = self.adj[x] & !(1 << y);
        while first != 0 {
            let v = first.trailing_zeros() as usize;
            first &= first - 1;
            if self.long_path_dfs(x, y, v, (1 << x) | (1 << v), 0) {
                return true;
            }
        }
        false
    }

    fn long_path_dfs(&self, x: usize, y: usize, tip: usize, path: u64, earlier_nbrs: u64) -> bool {
        // Extending with w: w adjacent to the tip and to no earlier path
        // vertex (x included).
        let forbidden = path | earlier_nbrs | self.adj[x];
        let candidates = self.adj[tip] & !forbidden;
        if (candidates >> y) & 1 == 1 && path.count_ones() >= 3 {
            // Path x .. tip y with at least 4 vertices: length >= 3.
            return true;
        }
        let mut ext = candidates & !(1 << y);
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            if self.long_path_dfs(x, y, w, path | (1 << w), earlier_nbrs | self.adj[tip]) {
                return true;
            }
        }
        false
    }

    /// Co-two-pairs: two-pairs of the complement; every returned pair is an
    /// edge of the graph.
    pub fn co_two_pairs(&self) -> Vec<(usize, usize)> {
        let pairs = self.complement().find_two_pairs();
        debug_assert!(pairs.iter().all(|&(u, v)| self.has_edge(u, v)));
        pairs
    }
}
