//! The complete bipartite subgraph spanned by the neighborhoods of a
//! co-two-pair, built by the monotone fixpoint construction.

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    /// Given a co-two-pair e = {x1, x2}, returns a bipartition (V1, V2) of
    /// N(x1) ∪ N(x2) whose sides span a complete bipartite subgraph of the
    /// graph. Completeness is verified before returning; a failure would
    /// contradict the supporting theorem, so it surfaces as an internal
    /// error.
    pub fn bipartite_span_of_co_two_pair(&self, e: (usize, usize)) -> Result<(u64, u64)> {
        let (x1, x2) = e;
        if !self.has_edge(x1, x2)
            || !self
                .complement()
                .find_two_pairs()
                .contains(&(x1.min(x2), x1.max(x2)))
        {
            return Err(Error::Precondition(format!(
                "({x1},{x2}) is not a co-two-pair"
            )));
        }
        let v_all = self.neighbors(x1) | self.neighbors(x2);
        let mut v1 = 1u64 << x1;
        let mut v2 = 1u64 << x2;
        // Grow each side with the vertices of V that miss some current member
        // of that side; both sequences are monotone, so this reaches a
        // fixpoint.
        loop {
            let mut n1 = v1;
            let mut n2 = v2;
            let mut scan = v_all;
            while scan != 0 {
                let z = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if v1 & !self.neighbors(z) != 0 {
                    n1 |= 1 << z;
                }
                if v2 & !self.neighbors(z) != 0 {
                    n2 |= 1 << z;
                }
            }
            if n1 == v1 && n2 == v2 {
                break;
            }
            v1 = n1;
            v2 = n2;
        }
        // Leftovers see all of both sides; absorb them into V2.
        v2 |= v_all & !v1 & !v2;
        if v1 & v2 != 0 || (v1 | v2) != v_all {
            return Err(Error::Internal(
                "fixpoint did not produce a bipartition of N(x1) ∪ N(x2)".into(),
            ));
        }
        let mut sa = v1;
        while sa != 0 {
            let u = sa.trailing_zeros() as usize;
            sa &= sa - 1;
            if v2 & !self.neighbors(u) != 0 {
                return Err(Error::Internal(
                    "bipartition of a co-two-pair span is not complete".into(),
                ));
            }
        }
        Ok((v1, v2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn square_splits_into_opposite_pairs() {
        let c4 = Graph::cycle(4);
        let (v1, v2) = c4.bipartite_span_of_co_two_pair((0, 1)).unwrap();
        assert_eq!((v1, v2), (0b0101, 0b1010)); // {0,2} and {1,3}
    }

    #[test]
    fn isolated_edge_spans_itself() {
        let g = Graph::disjoint_edges(2);
        let (v1, v2) = g.bipartite_span_of_co_two_pair((0, 1)).unwrap();
        assert_eq!((v1, v2), (0b01, 0b10));
    }

    #[test]
    fn path_end_edge_spans_a_claw_part() {
        // P4 = 0-1-2-3 with e = {0,1}: the span is N(0) ∪ N(1) = {0,1,2}
        // with bipartition {0,2} | {1}.
        let p4 = Graph::path(4);
        let (v1, v2) = p4.bipartite_span_of_co_two_pair((0, 1)).unwrap();
        let sides = if v1.count_ones() == 1 {
            (v1, v2)
        } else {
            (v2, v1)
        };
        assert_eq!(sides, (0b0010, 0b0101));
    }

    #[test]
    fn non_co_two_pair_is_a_precondition_error() {
        let p4 = Graph::path(4);
        assert!(p4.bipartite_span_of_co_two_pair((1, 2)).is_err());
        assert!(p4.bipartite_span_of_co_two_pair((0, 2)).is_err()); // not even an edge
    }

    #[test]
    fn span_is_complete_for_all_co_two_pairs_up_to_6() {
        for n in 2..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                for e in g.co_two_pairs() {
                    let (v1, v2) = g.bipartite_span_of_co_two_pair(e).unwrap();
                    assert_eq!(v1 | v2, g.neighbors(e.0) | g.neighbors(e.1));
                    assert_eq!(v1 & v2, 0);
                }
            }
        }
    }
}
