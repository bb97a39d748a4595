//! Randomized invariants: exact linear algebra, monomial ideal arithmetic,
//! Taylor complexes, and the reduction pipeline.

use edgeideal::graph::Graph;
use edgeideal::linalg::{FieldSpec, PrimeField, Rationals, SparseMatrix};
use edgeideal::monomial::{MonomialIdeal, Multidegree};
use edgeideal::resolution::{
    betti_via_taylor, hochster_betti, minimalize_complex_with, taylor_complex, BettiTable,
    PivotRule, DEFAULT_TAYLOR_CAP,
};
use proptest::prelude::*;

fn small_int_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-4i64..5, r * c)))
}

fn qmat(r: usize, c: usize, entries: &[i64]) -> SparseMatrix<Rationals> {
    SparseMatrix::from_triples(
        Rationals,
        r,
        c,
        entries
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, &v)| (k / c, k % c, edgeideal::linalg::Rat::from_i64(v))),
    )
    .unwrap()
}

fn pmat(p: u32, r: usize, c: usize, entries: &[i64]) -> SparseMatrix<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    SparseMatrix::from_triples(
        f,
        r,
        c,
        entries
            .iter()
            .enumerate()
            .map(|(k, &v)| (k / c, k % c, v.rem_euclid(p as i64) as u64))
            .filter(|(_, _, v)| *v != 0),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_rank_dominates_prime_rank((r, c, entries) in small_int_matrix(), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        // Reduction mod p can only lose rank.
        let rq = qmat(r, c, &entries).rank(Rationals);
        let rp = pmat(p, r, c, &entries).rank(PrimeField::new(p).unwrap());
        prop_assert!(rq >= rp, "rank {rq} over QQ < rank {rp} mod {p}");
    }

    #[test]
    fn kernel_vectors_multiply_to_zero((r, c, entries) in small_int_matrix()) {
        let m = qmat(r, c, &entries);
        let kernel = m.kernel_basis(Rationals);
        prop_assert_eq!(m.rank(Rationals) + kernel.len(), c);
        for v in &kernel {
            let image = m.mul_vec(Rationals, v);
            prop_assert!(image.iter().all(|x| x.is_zero()));
        }
    }
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..4)
        .prop_flat_map(|nvars| {
            let gen = proptest::collection::vec(0u32..3, nvars);
            (Just(nvars), proptest::collection::vec(gen, 1..5))
        })
        .prop_map(|(nvars, gens)| {
            MonomialIdeal::new(
                nvars,
                gens.into_iter()
                    .map(Multidegree::new)
                    .filter(|m| m.total_degree() > 0)
                    .collect(),
            )
        })
        .prop_filter("nonzero", |i| !i.is_zero())
}

fn small_monomial() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..3, 2..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ideal_sum_and_intersection_are_commutative(a in small_ideal(), b in small_ideal()) {
        prop_assume!(a.nvars() == b.nvars());
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
    }

    #[test]
    fn intersection_is_associative(a in small_ideal(), b in small_ideal(), c in small_ideal()) {
        prop_assume!(a.nvars() == b.nvars() && b.nvars() == c.nvars());
        let left = a.intersect(&b).unwrap().intersect(&c).unwrap();
        let right = a.intersect(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn variable_partition_round_trips(a in small_ideal(), v_seed in 0usize..4) {
        let v = v_seed % a.nvars();
        let (j, l) = a.variable_partition(v);
        let xv = Multidegree::var_pow(a.nvars(), v, 1);
        prop_assert_eq!(j.sum(&l.product_by_monomial(&xv)).unwrap(), a);
    }

    #[test]
    fn colon_undoes_monomial_multiplication(a in small_ideal(), m in small_monomial()) {
        prop_assume!(m.len() == a.nvars());
        let m = Multidegree::new(m);
        prop_assert_eq!(a.product_by_monomial(&m).colon_monomial(&m), a.clone());
    }

    #[test]
    fn restriction_is_monotone(a in small_ideal(), m in small_monomial()) {
        prop_assume!(m.len() == a.nvars());
        let m = Multidegree::new(m);
        let restricted = a.restrict_to(&m);
        for g in restricted.gens() {
            prop_assert!(g.divides(&m));
        }
        let bigger = a.restrict_to(&m.mul(&m));
        for g in restricted.gens() {
            prop_assert!(bigger.contains_monomial(g));
        }
    }

    #[test]
    fn minimalize_is_idempotent(a in small_ideal()) {
        let again = MonomialIdeal::new(a.nvars(), a.gens().to_vec());
        prop_assert_eq!(a, again);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn taylor_complexes_compose_to_zero(a in small_ideal()) {
        let t = taylor_complex(&a, Rationals, DEFAULT_TAYLOR_CAP).unwrap();
        t.validate().unwrap();
        let m = minimalize_complex_with(&t, PivotRule::MinFill);
        m.validate().unwrap();
        let m2 = minimalize_complex_with(&t, PivotRule::LexSmallest);
        let ta = BettiTable::from_minimal_complex(&m).unwrap();
        let tb = BettiTable::from_minimal_complex(&m2).unwrap();
        prop_assert_eq!(ta, tb);
    }
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (3usize..6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn betti_routes_agree_on_random_graphs(g in random_graph()) {
        prop_assume!(g.edge_count() > 0);
        let ideal = MonomialIdeal::edge_ideal(&g);
        for f in [FieldSpec::Char0, FieldSpec::Prime(3)] {
            let a = betti_via_taylor(&ideal, &f, DEFAULT_TAYLOR_CAP).unwrap();
            let b = hochster_betti(&g, &f);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn complement_is_involutive_and_canonical_keys_stable(g in random_graph()) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let key = g.canonical_key();
        // Reversing the vertex order is a nontrivial permutation.
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).rev().collect();
        prop_assert_eq!(g.permuted(&perm).canonical_key(), key);
    }

    #[test]
    fn regularity_is_achieved_within_lind_steps(g in random_graph()) {
        // With defect l, the regularity is already visible among the first l
        // homological degrees of the Betti table.
        prop_assume!(g.edge_count() > 0);
        let ideal = MonomialIdeal::edge_ideal(&g);
        let f = FieldSpec::Char0;
        let lind = edgeideal::lind::linearity_defect(&ideal, &f, DEFAULT_TAYLOR_CAP).unwrap();
        let table = hochster_betti(&g, &f);
        prop_assert_eq!(table.regularity(), table.regularity_up_to(lind));
    }
}
