//! Resolution engine tests: Taylor complexes, cancellation, the homology
//! (independence complex) route, and their agreement.

use edgeideal::graph::{enumerate_graphs, Graph};
use edgeideal::linalg::{FieldSpec, PrimeField, Rationals};
use edgeideal::monomial::{parse_ideal, MonomialIdeal, Multidegree};
use edgeideal::resolution::{
    betti_via_taylor, graded_piece_dims, hochster_betti, minimal_resolution, minimalize_complex,
    minimalize_complex_with, taylor_complex, BettiTable, PivotRule, DEFAULT_TAYLOR_CAP,
};

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

#[test]
fn taylor_ranks_are_binomials() {
    let i = parse_ideal("x0*x1, x1*x2, x0*x2", &names(3)).unwrap();
    let t = taylor_complex(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(t.ranks(), vec![3, 3, 1]);
    t.validate().unwrap();
}

#[test]
fn taylor_of_single_generator() {
    let i = parse_ideal("x0^2*x1", &names(2)).unwrap();
    let t = taylor_complex(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(t.ranks(), vec![1]);
}

#[test]
fn taylor_respects_the_cap() {
    let i = MonomialIdeal::edge_ideal(&Graph::complete(5)); // 10 generators
    assert!(taylor_complex(&i, Rationals, 9).is_err());
    assert!(taylor_complex(&i, Rationals, 10).is_ok());
}

#[test]
fn two_variable_example_resolves_exactly() {
    // I = (x^2, x*y^2, y^4) in k[x,y]: minimal resolution
    //   0 -> R(-4) ⊕ R(-5) -> R(-2) ⊕ R(-3) ⊕ R(-4) -> I -> 0
    // with differential [[-y^2, 0], [x, -y^2], [0, x]].
    let vars: Vec<String> = vec!["x".into(), "y".into()];
    let i = parse_ideal("x^2, x*y^2, y^4", &vars).unwrap();
    let t = taylor_complex(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(t.ranks(), vec![3, 3, 1]);
    let m = minimalize_complex(&t);
    m.validate().unwrap();
    assert_eq!(m.ranks(), vec![3, 2]);
    assert_eq!(m.level_degrees(0), vec![2, 3, 4]);
    assert_eq!(m.level_degrees(1), vec![4, 5]);

    let one = Rationals.one();
    let neg = Rationals.neg(&one);
    let y2 = Multidegree::new(vec![0, 2]);
    let x = Multidegree::new(vec![1, 0]);
    assert_eq!(m.entry(1, 0, 0), Some((neg.clone(), y2.clone())));
    assert_eq!(m.entry(1, 1, 0), Some((one.clone(), x.clone())));
    assert_eq!(m.entry(1, 2, 0), None);
    assert_eq!(m.entry(1, 0, 1), None);
    assert_eq!(m.entry(1, 1, 1), Some((neg, y2)));
    assert_eq!(m.entry(1, 2, 1), Some((one, x)));
}

use edgeideal::linalg::field::Field;

#[test]
fn koszul_complex_of_two_disjoint_edges() {
    let i = MonomialIdeal::edge_ideal(&Graph::disjoint_edges(2));
    let m = minimal_resolution(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(m.ranks(), vec![2, 1]);
    assert_eq!(m.level_degrees(1), vec![4]);
}

#[test]
fn minimalization_is_idempotent() {
    let i = parse_ideal("x0^2, x0*x1^2, x1^4", &names(2)).unwrap();
    let m = minimalize_complex(&taylor_complex(&i, Rationals, 20).unwrap());
    let again = minimalize_complex(&m);
    assert_eq!(m.ranks(), again.ranks());
    for level in 0..m.num_levels() {
        assert_eq!(m.level_degrees(level), again.level_degrees(level));
        if level > 0 {
            for col in 0..m.rank(level) {
                for row in 0..m.rank(level - 1) {
                    assert_eq!(m.entry(level, row, col), again.entry(level, row, col));
                }
            }
        }
    }
}

#[test]
fn pentagon_betti_table_via_both_routes() {
    let g = Graph::cycle(5);
    let i = MonomialIdeal::edge_ideal(&g);
    for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
        let taylor = betti_via_taylor(&i, &f, DEFAULT_TAYLOR_CAP).unwrap();
        let hochster = hochster_betti(&g, &f);
        assert_eq!(taylor, hochster);
        assert_eq!(taylor.beta_total(0), 5);
        assert_eq!(taylor.beta_total(1), 5);
        assert_eq!(taylor.beta_total(2), 1);
        assert_eq!(taylor.regularity(), Some(3));
        assert_eq!(taylor.projective_dimension(), Some(2));
    }
}

#[test]
fn routes_agree_on_all_graphs_up_to_5_vertices() {
    for n in 2..=5 {
        for g in enumerate_graphs(n, false).unwrap() {
            if g.edge_count() == 0 {
                continue;
            }
            let i = MonomialIdeal::edge_ideal(&g);
            for f in [FieldSpec::Char0, FieldSpec::Prime(2)] {
                let a = betti_via_taylor(&i, &f, DEFAULT_TAYLOR_CAP).unwrap();
                let b = hochster_betti(&g, &f);
                assert_eq!(a, b, "disagreement on {:?} over {f}", g.edges());
            }
        }
    }
}

#[test]
fn pivot_orders_agree_on_betti_tables() {
    let mut ideals = vec![
        parse_ideal("x0^2, x0*x1^2, x1^4", &names(2)).unwrap(),
        parse_ideal(
            "x0^4, x0^3*x1, x0^2*x1^2, x0*x1^3, x1^4, x0^3*x2, x0^2*x1*x2^2, x0^2*x2^3, x0*x1^2*x2^2",
            &names(3),
        )
        .unwrap(),
    ];
    for g in enumerate_graphs(4, false).unwrap() {
        if g.edge_count() > 0 {
            ideals.push(MonomialIdeal::edge_ideal(&g));
        }
    }
    for i in &ideals {
        let t = taylor_complex(i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
        let a = BettiTable::from_minimal_complex(&minimalize_complex_with(&t, PivotRule::MinFill))
            .unwrap();
        let b =
            BettiTable::from_minimal_complex(&minimalize_complex_with(&t, PivotRule::LexSmallest))
                .unwrap();
        assert_eq!(a, b, "pivot order changed Betti numbers of {i:?}");
    }
}

#[test]
fn betti_table_requires_minimality() {
    let i = parse_ideal("x0*x1, x1*x2", &names(3)).unwrap();
    let t = taylor_complex(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    assert!(BettiTable::from_minimal_complex(&t).is_err());
}

#[test]
fn heptagon_degree_three_strands() {
    let i = MonomialIdeal::edge_ideal(&Graph::cycle(7));
    let m = minimal_resolution(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    let (f0, syz, ideal_dim) = graded_piece_dims(&i, &m, 3).unwrap();
    assert_eq!((f0, syz, ideal_dim), (49, 7, 42));
}

#[test]
fn square_degree_two_strands() {
    let i = MonomialIdeal::edge_ideal(&Graph::cycle(4));
    let m = minimal_resolution(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
    // Frozen from the direct monomial count: 4 generators in degree 2, no
    // syzygies in that degree.
    assert_eq!(graded_piece_dims(&i, &m, 2).unwrap(), (4, 0, 4));
    assert_eq!(graded_piece_dims(&i, &m, 1).unwrap(), (0, 0, 0));
}

#[test]
fn euler_characteristic_counts_ideal_membership() {
    let cases = vec![
        parse_ideal("x0^2, x0*x1^2, x1^4", &names(2)).unwrap(),
        MonomialIdeal::edge_ideal(&Graph::cycle(5)),
        parse_ideal("x0*x1, x1^2*x2, x0*x2^2", &names(3)).unwrap(),
    ];
    for i in cases {
        let m = minimal_resolution(&i, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
        let lcm = i.lcm_of_gens();
        let window: Vec<u32> = lcm.exponents().iter().map(|e| e + 1).collect();
        let mut a = vec![0u32; i.nvars()];
        loop {
            let deg = Multidegree::new(a.clone());
            let mut chi = 0i64;
            for level in 0..m.num_levels() {
                let count = (0..m.rank(level))
                    .filter(|&b| m.shift(level, b).divides(&deg))
                    .count() as i64;
                chi += if level % 2 == 0 { count } else { -count };
            }
            assert_eq!(
                chi,
                i64::from(i.contains_monomial(&deg)),
                "Euler characteristic at {a:?} of {i:?}"
            );
            let mut pos = 0;
            loop {
                if pos == a.len() {
                    return;
                }
                if a[pos] < window[pos] {
                    a[pos] += 1;
                    break;
                }
                a[pos] = 0;
                pos += 1;
            }
        }
    }
}

#[test]
fn equal_betti_tables_for_the_two_nine_generator_ideals() {
    let vars: Vec<String> = vec!["x1".into(), "x2".into(), "x3".into()];
    let i1 = parse_ideal(
        "x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4, x1^3*x3, x1^2*x2*x3^2, x1^2*x3^3, x1*x2^2*x3^2",
        &vars,
    )
    .unwrap();
    let i2 = parse_ideal(
        "x1^4, x1^3*x2, x1^2*x2^2, x1^3*x3, x1*x2^2*x3, x1*x2*x3^2, x1*x2^4, x1^2*x3^3, x2^4*x3",
        &vars,
    )
    .unwrap();
    let t1 = betti_via_taylor(&i1, &FieldSpec::Char0, DEFAULT_TAYLOR_CAP).unwrap();
    let t2 = betti_via_taylor(&i2, &FieldSpec::Char0, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(t1.graded_entries(), t2.graded_entries());
}

#[test]
fn complete_graph_betti_numbers() {
    // beta_i(I(K_n)) = (i+1) * C(n, i+2), a classical 2-linear resolution.
    let i = MonomialIdeal::edge_ideal(&Graph::complete(5));
    let t = betti_via_taylor(&i, &FieldSpec::Char0, DEFAULT_TAYLOR_CAP).unwrap();
    let binom = |n: u64, k: u64| -> u64 {
        let mut r = 1u64;
        for x in 0..k {
            r = r * (n - x) / (x + 1);
        }
        r
    };
    for i_h in 0..=3u32 {
        assert_eq!(
            t.beta_total(i_h),
            (i_h as u64 + 1) * binom(5, i_h as u64 + 2)
        );
    }
    assert_eq!(t.regularity(), Some(2));
}

#[test]
fn prime_field_taylor_route_matches_char0_on_chordal_graph() {
    let g = Graph::path(5);
    let i = MonomialIdeal::edge_ideal(&g);
    let f2 = PrimeField::new(2).unwrap();
    let a =
        BettiTable::from_minimal_complex(&minimal_resolution(&i, f2, DEFAULT_TAYLOR_CAP).unwrap())
            .unwrap();
    let b = betti_via_taylor(&i, &FieldSpec::Char0, DEFAULT_TAYLOR_CAP).unwrap();
    assert_eq!(a.graded_entries(), b.graded_entries());
}
