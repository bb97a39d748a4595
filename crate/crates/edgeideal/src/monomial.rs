//! Multidegrees, monomials and monomial ideals, with the ideal operations the
//! resolution and splitting machinery manipulates: sums, intersections,
//! colons, variable partitions, degree selection and restriction.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exponent vector of a monomial; the length is the ambient variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Multidegree(exponents)
    }

    /// The monomial 1.
    pub fn one(nvars: usize) -> Self {
        Multidegree(vec![0; nvars])
    }

    /// A single variable power x_v^e.
    pub fn var_pow(nvars: usize, v: usize, e: u32) -> Self {
        let mut m = vec![0; nvars];
        m[v] = e;
        Multidegree(m)
    }

    /// Squarefree monomial from a vertex-subset bitmask.
    pub fn from_support(nvars: usize, mask: u64) -> Self {
        Multidegree((0..nvars).map(|i| ((mask >> i) & 1) as u32).collect())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables with positive exponent (supports up to 64 vars).
    pub fn support(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn divides(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exact quotient self / other; None unless other divides self.
    pub fn checked_div(&self, other: &Multidegree) -> Option<Multidegree> {
        if other.divides(self) {
            Some(Multidegree(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    /// Renders with the given variable names, e.g. `x1*x2^3`; `1` for the
    /// trivial monomial.
    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Canonical generator order: descending lexicographic on exponent vectors,
/// so ideal equality is list equality.
fn canonical_cmp(a: &Multidegree, b: &Multidegree) -> std::cmp::Ordering {
    b.0.cmp(&a.0)
}

/// A monomial ideal given by its unique minimal set of monomial generators,
/// deduplicated, divisibility-reduced and canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Multidegree>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set: drops duplicates and any
    /// generator divisible by another, then sorts canonically.
    pub fn new(nvars: usize, gens: Vec<Multidegree>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator in wrong ambient ring");
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(a.0.cmp(&b.0)));
        gens.dedup();
        let mut minimal: Vec<Multidegree> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort_by(canonical_cmp);
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// The unit ideal (1), so that colon ideals are always representable.
    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal::new(nvars, vec![Multidegree::one(nvars)])
    }

    /// The edge ideal of a graph: one squarefree degree-2 generator per edge.
    pub fn edge_ideal(g: &Graph) -> Self {
        let gens = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let mut m = vec![0; g.vertex_count()];
                m[u] = 1;
                m[v] = 1;
                Multidegree(m)
            })
            .collect();
        MonomialIdeal::new(g.vertex_count(), gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Multidegree::is_squarefree)
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Multidegree::total_degree).max()
    }

    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Multidegree::total_degree).min()
    }

    /// Membership test for a monomial.
    pub fn contains_monomial(&self, m: &Multidegree) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Input(format!(
                "ambient mismatch: {} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    /// Ideal sum: union of generators, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal::new(self.nvars, gens))
    }

    /// Ideal intersection: generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::new(self.nvars, gens))
    }

    /// Colon ideal (I : m) via generator-wise division g / gcd(g, m).
    pub fn colon_monomial(&self, m: &Multidegree) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Generator-wise multiplication m * I.
    pub fn product_by_monomial(&self, m: &Multidegree) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.mul(m)).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The y-partition I = J + x_v * L: J holds the generators not divisible
    /// by x_v, and L is the rest divided by x_v.
    pub fn variable_partition(&self, v: usize) -> (MonomialIdeal, MonomialIdeal) {
        let xv = Multidegree::var_pow(self.nvars, v, 1);
        let mut j = Vec::new();
        let mut l = Vec::new();
        for g in &self.gens {
            if g.exponent(v) > 0 {
                l.push(g.checked_div(&xv).expect("divisible by x_v"));
            } else {
                j.push(g.clone());
            }
        }
        (
            MonomialIdeal::new(self.nvars, j),
            MonomialIdeal::new(self.nvars, l),
        )
    }

    /// The ideal generated by all degree-d monomials of I.
    pub fn degree_part(&self, d: u32) -> MonomialIdeal {
        let mut gens = Vec::new();
        for g in &self.gens {
            let gd = g.total_degree();
            if gd > d {
                continue;
            }
            for extra in monomials_of_degree(self.nvars, d - gd) {
                gens.push(g.mul(&extra));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The subideal generated by the generators dividing m.
    pub fn restrict_to(&self, m: &Multidegree) -> MonomialIdeal {
        let gens = self.gens.iter().filter(|g| g.divides(m)).cloned().collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// lcm of all generators (1 for the zero ideal).
    pub fn lcm_of_gens(&self) -> Multidegree {
        self.gens
            .iter()
            .fold(Multidegree::one(self.nvars), |acc, g| acc.lcm(g))
    }

    /// Union of the supports of all generators.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0u64, |m, g| m | g.support())
    }

    /// Re-embeds the ideal into a larger polynomial ring (appending fresh
    /// variables that no generator uses).
    pub fn extend_ambient(&self, nvars: usize) -> MonomialIdeal {
        assert!(nvars >= self.nvars);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                e.resize(nvars, 0);
                Multidegree(e)
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|g| g.format_with(names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// All monomials of the given total degree in `nvars` variables, in
/// deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Multidegree> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Multidegree(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; nvars];
    fn rec(current: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Multidegree>) {
        if pos == current.len() - 1 {
            current[pos] = left;
            out.push(Multidegree(current.clone()));
            return;
        }
        for e in 0..=left {
            current[pos] = e;
            rec(current, pos + 1, left - e, out);
        }
        current[pos] = 0;
    }
    rec(&mut current, 0, d, &mut out);
    out
}

/// Counts monomials of total degree d in n variables: C(d+n-1, n-1).
pub fn monomial_count(nvars: usize, d: u32) -> u64 {
    if nvars == 0 {
        return u64::from(d == 0);
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..nvars as u64 {
        num *= d as u64 + i;
        den *= i;
    }
    num / den
}

/// Parses a comma-separated ideal literal like `x1*x2, x1^3*x3` over declared
/// variable names. Coefficients are rejected; `0` denotes the zero ideal.
pub fn parse_ideal(literal: &str, names: &[String]) -> Result<MonomialIdeal> {
    let nvars = names.len();
    let trimmed = literal.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(MonomialIdeal::zero(nvars));
    }
    let mut gens = Vec::new();
    for part in trimmed.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(parse_monomial(part, names)?);
    }
    Ok(MonomialIdeal::new(nvars, gens))
}

/// Parses a single monomial like `x1^2*x3`; `1` is the trivial monomial.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Multidegree> {
    let mut exps = vec![0u32; names.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(Multidegree(exps));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Input(format!("empty factor in monomial `{text}`")));
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let exp: u32 = e.trim().parse().map_err(|_| {
                    Error::Input(format!("bad exponent `{e}` in monomial `{text}`"))
                })?;
                (n.trim(), exp)
            }
            None => (factor, 1),
        };
        if name.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Input(format!(
                "numeric coefficient `{name}` not allowed in monomial `{text}`"
            )));
        }
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Input(format!("unknown variable `{name}` in `{text}`")))?;
        exps[idx] += exp;
    }
    Ok(Multidegree(exps))
}
