//! Buchberger's algorithm for submodules of free modules with a
//! position-over-term order: components ordered by basis index (lower index
//! wins), ties broken by lexicographic comparison of exponent vectors.

use crate::linalg::field::Field;
use crate::monomial::Multidegree;
use std::cmp::Ordering;
use std::collections::VecDeque;

#[derive(Clone, Debug)]
pub struct GbTerm<F: Field> {
    pub comp: u32,
    pub mono: Multidegree,
    pub coeff: F::Elem,
}

pub type GbVector<F> = Vec<GbTerm<F>>;

/// Position-over-term comparison; `Greater` means `a` is the more leading
/// term.
fn term_cmp<F: Field>(a: &GbTerm<F>, b: &GbTerm<F>) -> Ordering {
    b.comp
        .cmp(&a.comp)
        .then_with(|| a.mono.exponents().cmp(b.mono.exponents()))
}

/// A certified Gröbner basis of a submodule of a shifted free module: all
/// S-pair reductions finished at zero during construction.
#[derive(Clone, Debug)]
pub struct ModuleGb<F: Field> {
    pub ambient_rank: usize,
    /// Total-degree shifts of the ambient free basis.
    pub shifts: Vec<u32>,
    /// Monic basis vectors, each sorted leading-term first.
    pub basis: Vec<GbVector<F>>,
    /// Leading terms (component, monomial) of the basis vectors.
    pub leading_terms: Vec<(u32, Multidegree)>,
}

fn normalize<F: Field>(field: F, mut v: GbVector<F>) -> GbVector<F> {
    v.sort_by(|a, b| term_cmp(a, b).reverse());
    if let Some(lead_coeff) = v.first().map(|t| t.coeff.clone()) {
        let inv = field.inv(&lead_coeff);
        for t in v.iter_mut() {
            t.coeff = field.mul(&t.coeff, &inv);
        }
    }
    v
}

/// `v - coeff * x^mono * g`, merged in order.
fn sub_scaled<F: Field>(
    field: F,
    v: &GbVector<F>,
    coeff: &F::Elem,
    mono: &Multidegree,
    g: &GbVector<F>,
) -> GbVector<F> {
    let mut out = Vec::with_capacity(v.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < v.len() || j < g.len() {
        let scaled = |t: &GbTerm<F>| GbTerm {
            comp: t.comp,
            mono: t.mono.mul(mono),
            coeff: field.neg(&field.mul(coeff, &t.coeff)),
        };
        if i == v.len() {
            let t = scaled(&g[j]);
            if !field.is_zero(&t.coeff) {
                out.push(t);
            }
            j += 1;
            continue;
        }
        if j == g.len() {
            out.push(v[i].clone());
            i += 1;
            continue;
        }
        let gt = GbTerm {
            comp: g[j].comp,
            mono: g[j].mono.mul(mono),
            coeff: g[j].coeff.clone(),
        };
        match term_cmp(&v[i], &gt) {
            Ordering::Greater => {
                out.push(v[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let t = scaled(&g[j]);
                if !field.is_zero(&t.coeff) {
                    out.push(t);
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = field.sub(&v[i].coeff, &field.mul(coeff, &g[j].coeff));
                if !field.is_zero(&c) {
                    out.push(GbTerm {
                        comp: v[i].comp,
                        mono: v[i].mono.clone(),
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Top-reduction of v against the (monic) basis.
fn reduce<F: Field>(field: F, mut v: GbVector<F>, basis: &[GbVector<F>]) -> GbVector<F> {
    'outer: while let Some(lead) = v.first().cloned() {
        for g in basis {
            let glead = &g[0];
            if glead.comp == lead.comp && glead.mono.divides(&lead.mono) {
                let shift = lead.mono.checked_div(&glead.mono).expect("divides");
                v = sub_scaled(field, &v, &lead.coeff, &shift, g);
                continue 'outer;
            }
        }
        break;
    }
    v
}

/// Gröbner basis of the submodule generated by the given vectors.
pub fn module_groebner<F: Field>(
    field: F,
    ambient_rank: usize,
    shifts: Vec<u32>,
    columns: Vec<GbVector<F>>,
) -> ModuleGb<F> {
    let mut basis: Vec<GbVector<F>> = Vec::new();
    for col in columns {
        let v = reduce(field, normalize(field, col), &basis);
        if !v.is_empty() {
            basis.push(normalize(field, v));
        }
    }
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i][0].comp == basis[j][0].comp {
                pairs.push_back((i, j));
            }
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let (li, lj) = (&basis[i][0], &basis[j][0]);
        let lcm = li.mono.lcm(&lj.mono);
        let mi = lcm.checked_div(&li.mono).expect("lcm");
        let mj = lcm.checked_div(&lj.mono).expect("lcm");
        // Leads are monic: spoly = x^mi * f_i - x^mj * f_j.
        let scaled_i: GbVector<F> = basis[i]
            .iter()
            .map(|t| GbTerm {
                comp: t.comp,
                mono: t.mono.mul(&mi),
                coeff: t.coeff.clone(),
            })
            .collect();
        let spoly = sub_scaled(field, &scaled_i, &field.one(), &mj, &basis[j]);
        let v = reduce(field, spoly, &basis);
        if !v.is_empty() {
            let v = normalize(field, v);
            let k = basis.len();
            for (idx, b) in basis.iter().enumerate() {
                if b[0].comp == v[0].comp {
                    pairs.push_back((idx, k));
                }
            }
            basis.push(v);
        }
    }
    let leading_terms = basis
        .iter()
        .map(|g| (g[0].comp, g[0].mono.clone()))
        .collect();
    ModuleGb {
        ambient_rank,
        shifts,
        basis,
        leading_terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;
    use crate::linalg::rat::Rat;

    fn term(comp: u32, exps: &[u32], c: i64) -> GbTerm<Rationals> {
        GbTerm {
            comp,
            mono: Multidegree::new(exps.to_vec()),
            coeff: Rat::from_i64(c),
        }
    }

    #[test]
    fn single_column_is_its_own_basis() {
        let col = vec![term(0, &[1, 0], 1), term(1, &[0, 1], -1)];
        let gb = module_groebner(Rationals, 2, vec![0, 0], vec![col.clone()]);
        assert_eq!(gb.basis.len(), 1);
        assert_eq!(gb.leading_terms[0], (0, Multidegree::new(vec![1, 0])));
    }

    #[test]
    fn two_variables_in_one_component() {
        // (x e1, y e1): the S-pair reduces to zero, the basis stays at two
        // elements, and the leading module is (x, y) in component 0.
        let gb = module_groebner(
            Rationals,
            1,
            vec![0],
            vec![vec![term(0, &[1, 0], 1)], vec![term(0, &[0, 1], 1)]],
        );
        assert_eq!(gb.basis.len(), 2);
        let lt: Vec<_> = gb
            .leading_terms
            .iter()
            .map(|(c, m)| (*c, m.exponents().to_vec()))
            .collect();
        assert!(lt.contains(&(0, vec![1, 0])));
        assert!(lt.contains(&(0, vec![0, 1])));
    }

    #[test]
    fn koszul_syzygy_appears() {
        // Columns (y e0, x e1 + y e2) do not interact; but (x e0, y e0 + x e1)
        // forces an S-pair with a new leading term in component 1.
        let gb = module_groebner(
            Rationals,
            2,
            vec![0, 0],
            vec![
                vec![term(0, &[1, 0], 1)],
                vec![term(0, &[0, 1], 1), term(1, &[1, 0], 1)],
            ],
        );
        // spoly = y*(x e0) - x*(y e0 + x e1) = -x^2 e1, irreducible.
        assert_eq!(gb.basis.len(), 3);
        assert!(gb
            .leading_terms
            .iter()
            .any(|(c, m)| *c == 1 && m.exponents() == [2, 0]));
    }
}
