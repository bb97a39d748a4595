//! Long-running timing checks on the heavy inputs; run explicitly with
//! `cargo test --test stress -- --ignored --nocapture`.

use edgeideal::graph::Graph;
use edgeideal::linalg::FieldSpec;
use edgeideal::lind::linearity_defect;
use edgeideal::monomial::MonomialIdeal;
use edgeideal::resolution::{betti_via_taylor, hochster_betti};
use std::time::Instant;

#[test]
#[ignore]
fn complete_graph_six_timing() {
    for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
        let start = Instant::now();
        let i = MonomialIdeal::edge_ideal(&Graph::complete(6));
        let defect = linearity_defect(&i, &f, 20).unwrap();
        println!("K6 over {f}: lind = {defect} in {:?}", start.elapsed());
        assert_eq!(defect, 0);
    }
}

#[test]
#[ignore]
fn complete_graph_seven_timing() {
    for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
        let start = Instant::now();
        let i = MonomialIdeal::edge_ideal(&Graph::complete(7));
        let defect = linearity_defect(&i, &f, 21).unwrap();
        println!("K7 over {f}: lind = {defect} in {:?}", start.elapsed());
        assert_eq!(defect, 0);
    }
}

#[test]
#[ignore]
fn near_complete_seven_timing() {
    let g = Graph::complete(7).delete_edge(0, 1);
    for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
        let start = Instant::now();
        let i = MonomialIdeal::edge_ideal(&g);
        let defect = linearity_defect(&i, &f, 21).unwrap();
        println!("K7-e over {f}: lind = {defect} in {:?}", start.elapsed());
        // The complement of K7 minus an edge is a single edge plus isolated
        // vertices — chordal — so the ideal is Koszul.
        assert_eq!(defect, 0);
    }
}

#[test]
#[ignore]
fn anticycle_seven_timing() {
    let start = Instant::now();
    let i = MonomialIdeal::edge_ideal(&Graph::anticycle(7));
    let defect = linearity_defect(&i, &FieldSpec::Char0, 20).unwrap();
    println!("anticycle 7: lind = {defect} in {:?}", start.elapsed());
    assert_eq!(defect, 4);
}

#[test]
#[ignore]
fn cycle_ten_timing() {
    let start = Instant::now();
    let i = MonomialIdeal::edge_ideal(&Graph::cycle(10));
    let defect = linearity_defect(&i, &FieldSpec::Char0, 20).unwrap();
    println!("C10: lind = {defect} in {:?}", start.elapsed());
    assert_eq!(defect, 4);
}

#[test]
#[ignore]
fn katzman_hochster_timing() {
    let edges: Vec<(usize, usize)> = vec![
        (1, 2),
        (1, 6),
        (1, 7),
        (1, 9),
        (2, 6),
        (2, 8),
        (2, 10),
        (3, 4),
        (3, 5),
        (3, 7),
        (3, 10),
        (4, 5),
        (4, 6),
        (4, 11),
        (5, 8),
        (5, 9),
        (6, 11),
        (7, 9),
        (7, 10),
        (8, 9),
        (8, 10),
        (8, 11),
        (10, 11),
    ]
    .into_iter()
    .map(|(u, v)| (u - 1, v - 1))
    .collect();
    let g = Graph::from_edges(11, &edges).unwrap();
    for (f, expect) in [(FieldSpec::Char0, 3), (FieldSpec::Prime(2), 4)] {
        let start = Instant::now();
        let t = hochster_betti(&g, &f);
        println!(
            "katzman over {f}: reg = {:?} in {:?}",
            t.regularity(),
            start.elapsed()
        );
        assert_eq!(t.regularity(), Some(expect));
    }
}

#[test]
#[ignore]
fn dalili_kummini_hochster_timing() {
    // Bipartite on x1..x10 (0..9) and y1..y6 (10..15).
    let y = |j: usize| 9 + j;
    let pairs: Vec<(usize, usize)> = vec![
        (1, 1),
        (2, 1),
        (3, 1),
        (7, 1),
        (9, 1),
        (1, 2),
        (2, 2),
        (4, 2),
        (6, 2),
        (10, 2),
        (1, 3),
        (3, 3),
        (5, 3),
        (6, 3),
        (8, 3),
        (2, 4),
        (4, 4),
        (5, 4),
        (7, 4),
        (8, 4),
        (3, 5),
        (4, 5),
        (5, 5),
        (9, 5),
        (10, 5),
        (6, 6),
        (7, 6),
        (8, 6),
        (9, 6),
        (10, 6),
    ];
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (i - 1, y(j))).collect();
    let g = Graph::from_edges(16, &edges).unwrap();
    for (f, expect) in [(FieldSpec::Char0, 4), (FieldSpec::Prime(2), 5)] {
        let start = Instant::now();
        let t = hochster_betti(&g, &f);
        println!(
            "dalili-kummini over {f}: reg = {:?} in {:?}",
            t.regularity(),
            start.elapsed()
        );
        assert_eq!(t.regularity(), Some(expect));
    }
}

#[test]
#[ignore]
fn betti_of_complete_bipartite_via_taylor() {
    // K_{3,3}: 9 generators, pd = 4 by the known formula pd I(K_{a,b}) = a+b-2.
    let mut g = Graph::new(6);
    for u in 0..3 {
        for v in 3..6 {
            g.add_edge(u, v).unwrap();
        }
    }
    let start = Instant::now();
    let i = MonomialIdeal::edge_ideal(&g);
    let t = betti_via_taylor(&i, &FieldSpec::Char0, 20).unwrap();
    println!("K33 betti in {:?}", start.elapsed());
    assert_eq!(t.projective_dimension(), Some(4));
}

#[test]
#[ignore]
fn eight_vertex_enumeration_timing() {
    use edgeideal::graph::enumerate_graphs;
    let start = Instant::now();
    let all = enumerate_graphs(8, false).unwrap();
    println!("8-vertex classes: {} in {:?}", all.len(), start.elapsed());
    let forests = all
        .iter()
        .filter(|g| g.is_forest() && g.edge_count() > 0)
        .count();
    println!("forests with >=1 edge: {forests}");
    assert_eq!(all.len(), 12346);
}

#[test]
#[ignore]
fn pivot_rule_comparison() {
    use edgeideal::linalg::Rationals;
    use edgeideal::resolution::{minimal_resolution_with, PivotRule};
    for n in [6usize, 7] {
        let i = MonomialIdeal::edge_ideal(&Graph::complete(n));
        for rule in [PivotRule::MinFill, PivotRule::LexSmallest] {
            let start = Instant::now();
            let m = minimal_resolution_with(&i, Rationals, 21, rule).unwrap();
            println!(
                "K{n} with {rule:?}: ranks {:?} in {:?}",
                m.ranks(),
                start.elapsed()
            );
        }
    }
}
