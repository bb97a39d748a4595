//! Exact graded Hilbert numerators of monomial submodules of shifted free
//! modules: HS = N(t) / (1-t)^nvars with N computed by the recursive
//! pivot-variable algorithm on monomial ideals.

use super::groebner::ModuleGb;
use crate::linalg::field::Field;
use crate::monomial::{MonomialIdeal, Multidegree};

/// Integer polynomial in t, coefficient of t^k at index k.
pub type Poly = Vec<i64>;

pub fn poly_trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

pub fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(&mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// t^k * p.
pub fn poly_shift(p: &Poly, k: usize) -> Poly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; k + p.len()];
    out[k..].copy_from_slice(p);
    out
}

/// First `len` coefficients of N(t) / (1-t)^nvars.
pub fn series_coeffs(n: &Poly, nvars: usize, len: usize) -> Vec<i64> {
    // 1/(1-t)^n has coefficient C(k+n-1, n-1) at t^k.
    let mut base = vec![0i64; len];
    for (k, c) in base.iter_mut().enumerate() {
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for i in 1..nvars as i128 {
            num *= k as i128 + i;
            den *= i;
        }
        *c = if nvars == 0 {
            i64::from(k == 0)
        } else {
            (num / den) as i64
        };
    }
    let mut out = vec![0i64; len];
    for (j, &nj) in n.iter().enumerate() {
        if nj == 0 {
            continue;
        }
        for k in j..len {
            out[k] += nj * base[k - j];
        }
    }
    out
}

/// Numerator of the Hilbert series of R/I for a monomial ideal I, by the
/// pivot-variable recursion K(I) = K(I + (x_v)) + t * K(I : x_v).
pub fn quotient_numerator(ideal: &MonomialIdeal) -> Poly {
    if ideal.is_zero() {
        return vec![1];
    }
    if ideal.is_unit() {
        return Vec::new();
    }
    let gens = ideal.gens();
    // Base case: pairwise coprime generators (complete intersection).
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(a, g)| gens[a + 1..].iter().all(|h| g.gcd(h).is_one()));
    if coprime {
        let mut acc = vec![1i64];
        for g in gens {
            let mut factor = vec![0i64; g.total_degree() as usize + 1];
            factor[0] = 1;
            factor[g.total_degree() as usize] -= 1;
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    // Pivot: the variable hitting the most generators.
    let nvars = ideal.nvars();
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (v, cnt) in counts.iter_mut().enumerate() {
            if g.exponent(v) > 0 {
                *cnt += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v)))
        .map(|(v, _)| v)
        .expect("nonzero ideal has variables");
    let xv = Multidegree::var_pow(nvars, pivot, 1);
    let mut plus_gens = gens.to_vec();
    plus_gens.push(xv.clone());
    let plus = MonomialIdeal::new(nvars, plus_gens);
    let colon = ideal.colon_monomial(&xv);
    poly_add(
        &quotient_numerator(&plus),
        &poly_shift(&quotient_numerator(&colon), 1),
    )
}

/// Numerator of the Hilbert series of a monomial ideal viewed as a module:
/// HS(I) = HS(R) - HS(R/I).
pub fn ideal_numerator(ideal: &MonomialIdeal) -> Poly {
    poly_sub(&vec![1], &quotient_numerator(ideal))
}

/// Graded Hilbert numerator of the monomial submodule spanned by the given
/// leading terms inside a free module with total-degree shifts: per
/// component, the leading monomials generate an ideal whose numerator is
/// shifted by t^shift.
pub fn hilbert_numerator(
    leading_terms: &[(u32, Multidegree)],
    shifts: &[u32],
    nvars: usize,
) -> Poly {
    let mut acc: Poly = Vec::new();
    for (comp, shift) in shifts.iter().enumerate() {
        let gens: Vec<Multidegree> = leading_terms
            .iter()
            .filter(|(c, _)| *c as usize == comp)
            .map(|(_, m)| m.clone())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(nvars, gens);
        acc = poly_add(&acc, &poly_shift(&ideal_numerator(&ideal), *shift as usize));
    }
    acc
}

/// Hilbert numerator of the image module of a Gröbner basis (equals that of
/// its leading-term module).
pub fn gb_numerator<F: Field>(gb: &ModuleGb<F>) -> Poly {
    hilbert_numerator(&gb.leading_terms, &gb.shifts, nvars_of(gb))
}

fn nvars_of<F: Field>(gb: &ModuleGb<F>) -> usize {
    gb.leading_terms
        .first()
        .map(|(_, m)| m.nvars())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nvars: usize, lits: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            nvars,
            lits.iter().map(|e| Multidegree::new(e.to_vec())).collect(),
        )
    }

    #[test]
    fn free_rank_one_submodule() {
        // Unit ideal in one component, shift d: numerator t^d.
        let lt = vec![(0u32, Multidegree::one(2))];
        assert_eq!(hilbert_numerator(&lt, &[3], 2), poly_shift(&vec![1], 3));
    }

    #[test]
    fn single_variable_submodule() {
        // (x) e over 2 variables, shift 0: numerator t.
        let lt = vec![(0u32, Multidegree::new(vec![1, 0]))];
        assert_eq!(hilbert_numerator(&lt, &[0], 2), vec![0, 1]);
    }

    #[test]
    fn two_variable_submodule() {
        // (x, y) e over 2 variables: 2t - t^2 by inclusion-exclusion.
        let lt = vec![
            (0u32, Multidegree::new(vec![1, 0])),
            (0u32, Multidegree::new(vec![0, 1])),
        ];
        assert_eq!(hilbert_numerator(&lt, &[0], 2), vec![0, 2, -1]);
    }

    #[test]
    fn quotient_numerator_matches_direct_count() {
        // Verify K(R/I)/(1-t)^n against brute-force monomial counting.
        let cases = vec![
            ideal(2, &[&[2, 0], &[1, 2], &[0, 4]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(3, &[&[2, 1, 0], &[0, 3, 0], &[1, 1, 1]]),
        ];
        for i in cases {
            let k = quotient_numerator(&i);
            let got = series_coeffs(&k, i.nvars(), 8);
            for d in 0..8u32 {
                let count = crate::monomial::monomials_of_degree(i.nvars(), d)
                    .iter()
                    .filter(|m| !i.contains_monomial(m))
                    .count() as i64;
                assert_eq!(got[d as usize], count, "degree {d} of {i:?}");
            }
        }
    }

    #[test]
    fn ideal_plus_quotient_is_ring() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 2, 1]]);
        let total = poly_add(&ideal_numerator(&i), &quotient_numerator(&i));
        assert_eq!(total, vec![1]);
    }
}
