//! Monomial ideals, valuation filtrations and Newton polyhedra.

mod newton;
mod valuation;

pub use newton::{integral_closure, newton_facets, rational_power, rees_denominator, Facet};
pub use valuation::{monomial_filtration_fpure_check, valuation_ideal, FpureCheck, ValuationFiltration};

use std::collections::BTreeSet;

use crate::poly::{Exp, Monomial, Polynomial, Ring};

/// Ideal generated by monomials, stored as its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Keep only the divisibility-minimal monomials, sorted for a canonical form.
pub fn minimalize(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        let mask = m.mask();
        if !out.iter().any(|g| g.mask() & !mask == 0 && g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|m| m.nvars() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn from_exps(nvars: usize, gens: &[&[Exp]]) -> Self {
        Self::new(nvars, gens.iter().map(|e| Monomial::from_exps(e)).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The homogeneous maximal ideal.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Monomial::var(nvars, i, 1)).collect())
    }

    /// Prime generated by the listed variables.
    pub fn variables(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&i| Monomial::var(nvars, i, 1)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.mask();
        self.gens.iter().any(|g| g.mask() & !mask == 0 && g.divides(m))
    }

    pub fn contains_ideal(&self, o: &MonomialIdeal) -> bool {
        o.gens.iter().all(|m| self.contains(m))
    }

    pub fn sum(&self, o: &MonomialIdeal) -> Self {
        Self::new(self.nvars, self.gens.iter().chain(&o.gens).cloned().collect())
    }

    pub fn product(&self, o: &MonomialIdeal) -> Self {
        let mut v = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                v.push(a.mul(b));
            }
        }
        Self::new(self.nvars, v)
    }

    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    pub fn intersect(&self, o: &MonomialIdeal) -> Self {
        let mut v = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                v.push(a.lcm(b));
            }
        }
        Self::new(self.nvars, v)
    }

    /// `self : m`.
    pub fn quotient_monomial(&self, m: &Monomial) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| m.gcd(g).quotient_of(g)).collect())
    }

    /// `self : o`, the intersection of the quotients by each generator.
    pub fn quotient(&self, o: &MonomialIdeal) -> Self {
        let mut acc = Self::unit(self.nvars);
        for m in &o.gens {
            acc = acc.intersect(&self.quotient_monomial(m));
        }
        acc
    }

    /// `I^[q]`.
    pub fn frobenius(&self, q: u32) -> Self {
        Self::new(self.nvars, self.gens.iter().map(|g| g.checked_pow(q).expect("exponent overflow")).collect())
    }

    /// Contained in `m^[q]`: every generator has an exponent at least `q`.
    pub fn inside_frobenius_max(&self, q: u32) -> bool {
        self.gens.iter().all(|g| !g.below_frobenius(q))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn radical(&self) -> Self {
        Self::new(
            self.nvars,
            self.gens
                .iter()
                .map(|g| Monomial::from_exps(&g.exps().iter().map(|&e| e.min(1)).collect::<Vec<_>>()))
                .collect(),
        )
    }

    fn supports(&self) -> Vec<Vec<usize>> {
        self.radical().gens.iter().map(|g| g.support()).collect()
    }

    /// Minimal vertex covers of the generator supports, i.e. the minimal
    /// primes (as variable sets) of the radical.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let edges = self.supports();
        let mut covers: BTreeSet<Vec<usize>> = BTreeSet::new();
        fn rec(edges: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            match edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) {
                None => {
                    let mut c = chosen.clone();
                    c.sort();
                    out.insert(c);
                }
                Some(e) => {
                    for &v in e {
                        chosen.push(v);
                        rec(edges, chosen, out);
                        chosen.pop();
                    }
                }
            }
        }
        rec(&edges, &mut Vec::new(), &mut covers);
        let all: Vec<Vec<usize>> = covers.into_iter().collect();
        let is_sub = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
        let mut minimal: Vec<Vec<usize>> = all.iter().filter(|c| !all.iter().any(|d| is_sub(d, c))).cloned().collect();
        minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        minimal
    }

    /// Height: the smallest vertex cover of the supports.
    pub fn height(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        if self.is_unit() {
            return self.nvars + 1;
        }
        let edges = self.supports();
        let mut best = self.nvars;
        fn rec(edges: &[Vec<usize>], chosen: &mut Vec<usize>, best: &mut usize) {
            if chosen.len() >= *best {
                return;
            }
            match edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) {
                None => *best = chosen.len(),
                Some(e) => {
                    for &v in e {
                        chosen.push(v);
                        rec(edges, chosen, best);
                        chosen.pop();
                    }
                }
            }
        }
        rec(&edges, &mut Vec::new(), &mut best);
        best
    }

    /// Krull dimension of the quotient ring.
    pub fn dimension(&self) -> usize {
        if self.is_unit() {
            return 0;
        }
        self.nvars - self.height()
    }

    /// `I^(n) = ∩ P^n` over the minimal primes of a square-free ideal.
    pub fn symbolic_power_squarefree(&self, n: u32) -> Option<Self> {
        if !self.is_squarefree() {
            return None;
        }
        if self.is_zero() || n == 0 {
            return Some(if self.is_zero() && n > 0 { self.clone() } else { Self::unit(self.nvars) });
        }
        let mut acc = Self::unit(self.nvars);
        for prime in self.minimal_primes() {
            acc = acc.intersect(&Self::variables(self.nvars, &prime).power(n));
        }
        Some(acc)
    }

    pub fn to_polynomials(&self, ring: &Ring) -> Vec<Polynomial> {
        self.gens.iter().map(|m| Polynomial::monomial(ring, m.clone(), 1)).collect()
    }

    /// Smallest generator degree (`None` for the zero ideal).
    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.total_degree()).min()
    }

    pub fn format(&self, ring: &Ring) -> String {
        let g: Vec<String> = self.gens.iter().map(|m| ring.format_monomial(m)).collect();
        format!("({})", g.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, g: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(n, g)
    }

    #[test]
    fn triangle_primes_and_symbolic_square() {
        let tri = mi(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.minimal_primes(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(tri.height(), 2);
        let s2 = tri.symbolic_power_squarefree(2).unwrap();
        assert!(s2.contains(&Monomial::from_exps(&[1, 1, 1])));
        assert!(!tri.power(2).contains(&Monomial::from_exps(&[1, 1, 1])));
    }

    #[test]
    fn lattice_ops() {
        let a = mi(2, &[&[2, 0], &[0, 2]]);
        let b = mi(2, &[&[1, 1]]);
        assert_eq!(a.intersect(&b), mi(2, &[&[2, 1], &[1, 2]]));
        assert_eq!(a.quotient(&b), mi(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(a.frobenius(3), mi(2, &[&[6, 0], &[0, 6]]));
        assert!(a.inside_frobenius_max(2));
        assert!(!a.inside_frobenius_max(3));
        assert_eq!(mi(2, &[&[1, 0], &[2, 0], &[1, 1]]).gens().len(), 1);
    }
}
