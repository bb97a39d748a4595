//! Shared machinery for the acceptance and property suites: data-file
//! loading, a memoizing linearity-defect cache, the weakly chordal 7-vertex
//! sweep, and the four standalone property suites.

#![allow(dead_code)]

use edgeideal::graph::{enumerate_graphs, Graph};
use edgeideal::linalg::FieldSpec;
use edgeideal::lind::linearity_defect;
use edgeideal::monomial::{MonomialIdeal, Multidegree};
use edgeideal::resolution::{hochster_betti_ideal, DEFAULT_TAYLOR_CAP};
use edgeideal::splitting::check_splitting_inequalities_with;
use edgeideal_verifier::formats::{parse_graph, parse_ideal_file};
use rayon::prelude::*;
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{LazyLock, Mutex};

pub const QQ: FieldSpec = FieldSpec::Char0;
pub const F2: FieldSpec = FieldSpec::Prime(2);
pub const BOTH_FIELDS: [FieldSpec; 2] = [QQ, F2];

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn load_graph(name: &str) -> Graph {
    let text =
        std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"));
    parse_graph(&text).unwrap_or_else(|e| panic!("parsing {name}: {e}"))
}

pub fn load_ideal(name: &str) -> (Vec<String>, MonomialIdeal) {
    let text =
        std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"));
    parse_ideal_file(&text).unwrap_or_else(|e| panic!("parsing {name}: {e}"))
}

/// Defects of graph edge ideals, memoized by isomorphism class and field.
static GRAPH_LIND_CACHE: LazyLock<Mutex<HashMap<(usize, u128, u32), u32>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Defects of arbitrary ideals, memoized literally.
static IDEAL_LIND_CACHE: LazyLock<Mutex<HashMap<(MonomialIdeal, u32), u32>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn cap_for(edges: usize) -> usize {
    DEFAULT_TAYLOR_CAP.max(edges)
}

pub fn lind_graph(g: &Graph, f: &FieldSpec) -> u32 {
    let key = (g.vertex_count(), g.canonical_key(), f.characteristic());
    if let Some(&v) = GRAPH_LIND_CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let ideal = MonomialIdeal::edge_ideal(g);
    let v = linearity_defect(&ideal, f, cap_for(g.edge_count())).expect("within cap");
    GRAPH_LIND_CACHE.lock().unwrap().insert(key, v);
    v
}

pub fn lind_ideal_cached(ideal: &MonomialIdeal, f: &FieldSpec) -> u32 {
    let key = (ideal.clone(), f.characteristic());
    if let Some(&v) = IDEAL_LIND_CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let v = linearity_defect(ideal, f, cap_for(ideal.num_gens())).expect("within cap");
    IDEAL_LIND_CACHE.lock().unwrap().insert(key, v);
    v
}

pub struct Wc7Class {
    pub graph: Graph,
    pub inmat: usize,
    pub co_two_pairs: Vec<(usize, usize)>,
}

/// The weakly chordal classes on 7 vertices with at least one edge.
pub static WC7: LazyLock<Vec<Wc7Class>> = LazyLock::new(|| {
    enumerate_graphs(7, false)
        .expect("7 is in range")
        .into_iter()
        .filter(|g| g.edge_count() > 0 && g.is_weakly_chordal())
        .map(|graph| Wc7Class {
            inmat: graph.induced_matching_number(),
            co_two_pairs: graph.co_two_pairs(),
            graph,
        })
        .collect()
});

/// The edge ideal of a single edge inside an n-vertex ambient ring.
pub fn edge_ideal_of(g: &Graph, e: (usize, usize)) -> MonomialIdeal {
    let mut exps = vec![0u32; g.vertex_count()];
    exps[e.0] = 1;
    exps[e.1] = 1;
    MonomialIdeal::new(g.vertex_count(), vec![Multidegree::new(exps)])
}

// ---------------------------------------------------------------------------
// Property suites (runnable standalone through tests/properties.rs, also
// executed by the acceptance gate).
// ---------------------------------------------------------------------------

/// Multigraded Betti numbers of a squarefree ideal at a squarefree degree m
/// agree with those of the restriction to m, exhaustively over graphs with
/// at most `max_n` vertices.
pub fn restriction_identity_suite(max_n: usize) {
    for n in 2..=max_n {
        let graphs = enumerate_graphs(n, false).unwrap();
        graphs.par_iter().for_each(|g| {
            if g.edge_count() == 0 {
                return;
            }
            let ideal = MonomialIdeal::edge_ideal(g);
            for f in BOTH_FIELDS {
                let full = hochster_betti_ideal(&ideal, &f).unwrap();
                for mask in 1u64..(1 << n) {
                    let m = Multidegree::from_support(n, mask);
                    let restricted = ideal.restrict_to(&m);
                    if restricted.is_zero() {
                        for ((_, md), v) in full.multigraded_entries() {
                            assert!(
                                !(md == &m && *v > 0),
                                "betti at {mask:#b} with empty restriction"
                            );
                        }
                        continue;
                    }
                    let sub = hochster_betti_ideal(&restricted, &f).unwrap();
                    for i in 0..=8u32 {
                        assert_eq!(
                            full.beta_multi(i, &m),
                            sub.beta_multi(i, &m),
                            "restriction identity fails at {:?}, sigma {mask:#b}, i={i}",
                            g.edges()
                        );
                    }
                }
            }
        });
    }
}

/// Tiny deterministic generator for the randomized suites.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// lind(J + y L) = lind(J) for J a monomial ideal without linear forms,
/// L a variable ideal containing J, and y a fresh variable.
pub fn cone_lemma_suite() {
    let mut rng = XorShift::new(0x5eed_c0de);
    let mut cases = 0;
    while cases < 12 {
        let nvars = 2 + (rng.below(3) as usize); // 2..4 variables
        let ngens = 2 + (rng.below(3) as usize);
        let mut gens = Vec::new();
        for _ in 0..ngens {
            let mut exps = vec![0u32; nvars];
            // Degree 2..3 monomials keep the resolutions small.
            let degree = 2 + rng.below(2);
            for _ in 0..degree {
                exps[rng.below(nvars as u64) as usize] += 1;
            }
            gens.push(Multidegree::new(exps));
        }
        let j = MonomialIdeal::new(nvars, gens);
        if j.is_zero() || j.min_gen_degree() == Some(1) {
            continue;
        }
        cases += 1;
        // L = all variables in the support of J (so J ⊆ L), y fresh.
        let j_ext = j.extend_ambient(nvars + 1);
        let support = j.support();
        let mut cone_gens = j_ext.gens().to_vec();
        for v in 0..nvars {
            if (support >> v) & 1 == 1 {
                let mut exps = vec![0u32; nvars + 1];
                exps[v] = 1;
                exps[nvars] = 1;
                cone_gens.push(Multidegree::new(exps));
            }
        }
        let cone = MonomialIdeal::new(nvars + 1, cone_gens);
        for f in BOTH_FIELDS {
            assert_eq!(
                lind_ideal_cached(&cone, &f),
                lind_ideal_cached(&j, &f),
                "cone lemma fails for {j:?} over {f}"
            );
        }
    }
}

/// lind(I(G ⊔ gK2)) = lind(I(G)) + g for small graphs and g <= 2.
pub fn disjoint_union_shift_suite() {
    let bases: Vec<Graph> = vec![
        Graph::path(3),
        Graph::path(4),
        Graph::path(5),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::disjoint_edges(2),
        Graph::complete(4),
    ];
    for base in &bases {
        let base_lind: Vec<u32> = BOTH_FIELDS.iter().map(|f| lind_graph(base, f)).collect();
        for g in 1..=2usize {
            let extended = base.disjoint_union(&Graph::disjoint_edges(g));
            for (f, &b) in BOTH_FIELDS.iter().zip(&base_lind) {
                assert_eq!(
                    lind_graph(&extended, f),
                    b + g as u32,
                    "disjoint union shift fails for {:?} + {g}K2 over {f}",
                    base.edges()
                );
            }
        }
    }
}

/// The three linearity-defect inequalities and the pd/reg formulas on every
/// passing co-two-pair splitting of the weakly chordal 7-vertex sweep.
pub fn splitting_inequalities_suite() {
    WC7.par_iter().for_each(|class| {
        let g = &class.graph;
        let whole = MonomialIdeal::edge_ideal(g);
        for &e in &class.co_two_pairs {
            let left = edge_ideal_of(g, e);
            let deletion = g.delete_edge(e.0, e.1);
            let right = MonomialIdeal::edge_ideal(&deletion);
            for f in BOTH_FIELDS {
                // Route the two edge ideals through the isomorphism-class
                // cache; only the intersection needs the literal cache.
                let lind_of = |ideal: &MonomialIdeal| {
                    Ok(if ideal == &whole {
                        lind_graph(g, &f)
                    } else if ideal == &right {
                        lind_graph(&deletion, &f)
                    } else {
                        lind_ideal_cached(ideal, &f)
                    })
                };
                let report = check_splitting_inequalities_with(
                    &whole,
                    &left,
                    &right,
                    &f,
                    cap_for(g.edge_count()),
                    lind_of,
                )
                .unwrap_or_else(|err| {
                    panic!("splitting check failed on {:?} at {e:?}: {err}", g.edges())
                });
                assert!(
                    report.all_hold(),
                    "inequalities fail on {:?} at {e:?} over {f}: {report:?}",
                    g.edges()
                );
            }
        }
    });
}
