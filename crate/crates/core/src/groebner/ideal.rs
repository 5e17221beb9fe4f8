//! Ideals with cached Gröbner data and the operations derived from it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use super::basis::GroebnerBasis;
use super::engine::Engine;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::polynomial::sub_mul;
use crate::poly::{field, Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Default)]
struct Cache {
    engines: Mutex<HashMap<MonomialOrder, Arc<Mutex<Engine>>>>,
    full: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
    partial: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Arc<Cache>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("ring", &self.ring.to_string()).field("gens", &self.gens.len()).finish()
    }
}

/// Monic, deduplicated, nonzero generators.
fn clean(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen: FxHashSet<Vec<(Monomial, u32)>> = FxHashSet::default();
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.monic();
        if seen.insert(g.terms().to_vec()) {
            out.push(g);
        }
    }
    out
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut conv = Vec::with_capacity(gens.len());
        for g in gens {
            conv.push(g.in_ring(ring)?);
        }
        Ok(Ideal { ring: ring.clone(), gens: clean(conv), cache: Arc::default() })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: Arc::default() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn from_monomial(ring: &Ring, m: &MonomialIdeal) -> Ideal {
        Ideal::new(ring, m.to_polynomials(ring)).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    fn engine(&self, order: &MonomialOrder) -> Result<Arc<Mutex<Engine>>> {
        let mut map = self.cache.engines.lock().unwrap();
        if let Some(e) = map.get(order) {
            return Ok(e.clone());
        }
        let ring = self.ring.with_order(order.clone())?;
        let e = Arc::new(Mutex::new(Engine::new(&ring, &self.gens)?));
        map.insert(order.clone(), e.clone());
        Ok(e)
    }

    /// Reduced Gröbner basis in the ambient order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_in(&self.ring.order().clone())
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner_in(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.full.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let eng = self.engine(order)?;
        let mut e = eng.lock().unwrap();
        e.run(None)?;
        let gb = Arc::new(GroebnerBasis::new(e.ring().clone(), e.reduced_basis(), None));
        self.cache.full.lock().unwrap().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    fn membership_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.ring.nvars())
    }

    /// A basis good enough to decide membership of elements of degree at
    /// most `deg`: truncated for homogeneous ideals, complete otherwise.
    pub fn basis_for_degree(&self, deg: u32) -> Result<Arc<GroebnerBasis>> {
        let order = self.membership_order();
        if let Some(gb) = self.cache.full.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        if !self.is_homogeneous() {
            return self.groebner_in(&order);
        }
        if let Some(gb) = self.cache.partial.lock().unwrap().get(&order) {
            if gb.degree_limit().is_some_and(|d| d >= deg) {
                return Ok(gb.clone());
            }
        }
        let eng = self.engine(&order)?;
        let mut e = eng.lock().unwrap();
        e.run(Some(deg))?;
        if e.is_complete() {
            drop(e);
            return self.groebner_in(&order);
        }
        let gb = Arc::new(GroebnerBasis::new(e.ring().clone(), e.active_elems(), e.done_degree()));
        self.cache.partial.lock().unwrap().insert(order, gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let f = f.in_ring(&self.ring)?;
        if self.is_homogeneous() && !f.is_homogeneous() {
            // split into homogeneous pieces
            let mut pieces: HashMap<u32, Vec<(Monomial, u32)>> = HashMap::new();
            for (m, c) in f.terms() {
                pieces.entry(self.ring.degree(m)).or_default().push((m.clone(), *c));
            }
            for (_, t) in pieces {
                if !self.contains(&Polynomial::from_terms(&self.ring, t))? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let gb = self.basis_for_degree(f.degree())?;
        Ok(gb.reduces_to_zero(&f))
    }

    /// Membership of many polynomials at once, in parallel.
    pub fn contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        let maxd = fs.iter().map(|f| f.degree()).max().unwrap_or(0);
        if self.is_homogeneous() && fs.iter().all(|f| f.is_homogeneous()) && !self.gens.is_empty() {
            let gb = self.basis_for_degree(maxd)?;
            let ring = gb.ring().clone();
            let conv: Vec<Polynomial> = fs.iter().map(|f| f.in_ring(&ring)).collect::<Result<_>>()?;
            return Ok(conv.par_iter().all(|f| gb.reduces_to_zero(f)));
        }
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First polynomial of `fs` outside the ideal.
    pub fn first_non_member<'a>(&self, fs: &'a [Polynomial]) -> Result<Option<&'a Polynomial>> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    pub fn contains_ideal(&self, o: &Ideal) -> Result<bool> {
        self.check_ring(o)?;
        self.contains_all(&o.gens)
    }

    pub fn equals(&self, o: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(o)? && o.contains_ideal(self)?)
    }

    fn check_ring(&self, o: &Ideal) -> Result<()> {
        if self.ring.same_space(&o.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.groebner()?.normal_form(f))
    }

    pub fn sum(&self, o: &Ideal) -> Result<Ideal> {
        self.check_ring(o)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&o.gens).cloned().collect())
    }

    pub fn product(&self, o: &Ideal) -> Result<Ideal> {
        self.check_ring(o)?;
        let mut v = Vec::with_capacity(self.gens.len() * o.gens.len());
        for a in &self.gens {
            for b in &o.gens {
                v.push(a * &b.in_ring(&self.ring)?);
            }
        }
        Ideal::new(&self.ring, v)
    }

    /// `I^n` generated by all products of `n` generators.
    pub fn power(&self, n: u32) -> Ideal {
        product_of_powers(&self.ring, &[(self.gens.clone(), n)])
    }

    /// `I^[p^e]`.
    pub fn frobenius_power(&self, e: u32) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.frobenius(e)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Membership in `I^[q]` via the `q`-th root components of `f`.
    pub fn frobenius_contains(&self, f: &Polynomial, q: u32) -> Result<bool> {
        let parts = f.in_ring(&self.ring)?.frobenius_components(q);
        self.contains_all(&parts)
    }

    /// `(I ∩ m^k)` for a standard-graded homogeneous ideal.
    pub fn truncate(&self, k: u32) -> Result<Ideal> {
        if !self.is_homogeneous() || self.ring.weights().iter().any(|&w| w != 1) {
            return Err(Error::NotHomogeneous("truncation needs a standard-graded homogeneous ideal".into()));
        }
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            if d >= k {
                out.push(g.clone());
            } else {
                for m in monomials_of_degree(n, k - d) {
                    out.push(g.mul_monomial(&m, 1));
                }
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// Elements of a Gröbner basis free of the `block` variables, for an
    /// elimination order on `big`. Returned in `big`.
    fn eliminate_in(big: &Ring, gens: Vec<Polynomial>, block: &[usize]) -> Result<Vec<Polynomial>> {
        let order = MonomialOrder::eliminate(big.nvars(), block);
        let id = Ideal::new(big, gens)?;
        let gb = id.groebner_in(&order)?;
        Ok(gb.elements().into_iter().filter(|g| g.terms().iter().all(|(m, _)| block.iter().all(|&b| m.exps()[b] == 0))).collect())
    }

    /// `I ∩ J`, eliminating `t` from `tI + (1 - t)J`.
    pub fn intersect(&self, o: &Ideal) -> Result<Ideal> {
        self.check_ring(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let t = self.ring.fresh_name("t");
        let big = self.ring.extend(&[t], &[1], MonomialOrder::grevlex(n + 1))?;
        let map: Vec<usize> = (0..n).collect();
        let tv = Polynomial::var(&big, n);
        let one_minus_t = &Polynomial::one(&big) - &tv;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&tv * &g.embed(&big, &map));
        }
        for g in &o.gens {
            gens.push(&one_minus_t * &g.embed(&big, &map));
        }
        let kept = Self::eliminate_in(&big, gens, &[n])?;
        let back: Vec<usize> = (0..n).collect();
        let res = kept.iter().map(|g| g.restrict(&self.ring, &back).unwrap()).collect();
        Ideal::new(&self.ring, res)
    }

    /// `I : f` as `(I ∩ (f)) / f`.
    pub fn quotient_poly(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.in_ring(&self.ring)?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.contains(&f)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .gens
            .iter()
            .map(|g| g.div_exact(&f).ok_or_else(|| Error::Unsupported("inexact division in colon".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, the intersection of `I : g` over generators `g` of `J`.
    pub fn quotient(&self, o: &Ideal) -> Result<Ideal> {
        self.check_ring(o)?;
        let mut acc: Option<Ideal> = None;
        for g in &o.gens {
            let q = self.quotient_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    if a.contains_ideal(&q)? {
                        q
                    } else if q.contains_ideal(&a)? {
                        a
                    } else {
                        a.intersect(&q)?
                    }
                }
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : x_i^∞` for a homogeneous ideal, by dividing a reverse-lex basis
    /// with `x_i` last by the largest power of `x_i`.
    pub fn saturate_var(&self, i: usize) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return self.saturate(&Polynomial::var(&self.ring, i));
        }
        let order = MonomialOrder::grevlex_last(self.ring.nvars(), i);
        let gb = self.groebner_in(&order)?;
        let gens = gb
            .elements()
            .into_iter()
            .map(|g| {
                let k = g.terms().iter().map(|(m, _)| m.exps()[i]).min().unwrap_or(0);
                g.div_monomial(&Monomial::var(self.ring.nvars(), i, k)).unwrap()
            })
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I : f^∞`. Monomial `f` goes variable by variable; otherwise the
    /// Rabinowitsch ideal `I + (wf - 1)` is intersected back with the ring.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.in_ring(&self.ring)?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        if f.len() == 1 && self.is_homogeneous() {
            let m = f.terms()[0].0.clone();
            let mut acc = self.clone();
            for i in m.support() {
                acc = acc.saturate_var(i)?;
            }
            return Ok(acc);
        }
        self.saturate_by_elimination(&f)
    }

    /// `I : f^∞` through the Rabinowitsch ideal, whatever `f` is.
    pub fn saturate_by_elimination(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.in_ring(&self.ring)?;
        let n = self.ring.nvars();
        let w = self.ring.fresh_name("w");
        let big = self.ring.extend(&[w], &[1], MonomialOrder::grevlex(n + 1))?;
        let map: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.embed(&big, &map)).collect();
        let wf = &Polynomial::var(&big, n) * &f.embed(&big, &map);
        gens.push(&wf - &Polynomial::one(&big));
        let kept = Self::eliminate_in(&big, gens, &[n])?;
        let res = kept.iter().map(|g| g.restrict(&self.ring, &map).unwrap()).collect();
        Ideal::new(&self.ring, res)
    }

    /// Minimal generators of a homogeneous ideal, chosen degree by degree
    /// among the given generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("minimal generators".into()));
        }
        let order = self.membership_order();
        let eng = self.engine(&order)?;
        let mut e = eng.lock().unwrap();
        e.run(Some(self.max_degree()))?;
        Ok(e.kept_inputs().into_iter().map(|k| self.gens[k].clone()).collect())
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.len())
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<MonomialIdeal> {
        let gb = self.groebner_in(order)?;
        Ok(MonomialIdeal::new(self.ring.nvars(), gb.leading_monomials()))
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(self.ring.nvars());
        }
        let order = self.membership_order();
        Ok(self.initial_ideal(&order)?.dimension())
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dimension()?)
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.groebner_in(&self.membership_order())?.is_unit())
    }

    /// Some generator lies outside `m^[q]`; then so does the ideal.
    pub fn generator_outside_frobenius_max(&self, q: u32) -> Option<&Polynomial> {
        self.gens.iter().find(|g| g.outside_frobenius_max(q))
    }

    /// `I ⊆ m^[q]`, decided on a generating set.
    pub fn inside_frobenius_max(&self, q: u32) -> bool {
        self.generator_outside_frobenius_max(q).is_none()
    }

    /// Same ideal in a ring with a different order on the same variables.
    pub fn in_ring(&self, ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring, self.gens.clone())
    }

    /// Replace the generators by a linearly independent spanning set when the
    /// ideal is generated in a single degree (cheap redundancy removal).
    pub fn with_independent_gens(&self) -> Ideal {
        let gens = linear_basis(&self.ring, &self.gens);
        Ideal { ring: self.ring.clone(), gens, cache: Arc::default() }
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Subset of `polys` whose span is the span of all of them.
pub fn linear_basis(ring: &Ring, polys: &[Polynomial]) -> Vec<Polynomial> {
    let p = ring.p();
    let mut pivots: HashMap<Monomial, Vec<(Monomial, u32)>> = HashMap::new();
    let mut out = Vec::new();
    for f in polys {
        let mut t = f.in_ring(ring).expect("ring mismatch").into_terms();
        while let Some(row) = t.first().and_then(|(m, _)| pivots.get(m)) {
            t = sub_mul(&t[1..], &row[1..], t[0].1, None, ring);
        }
        if let Some((m, c)) = t.first().cloned() {
            let inv = field::inv(c, p);
            let row = t.into_iter().map(|(mm, cc)| (mm, field::mul(cc, inv, p))).collect();
            pivots.insert(m, row);
            out.push(f.clone());
        }
    }
    out
}

/// Generators of `∏ (ideal_k)^(a_k)` as products over multisets.
pub fn product_of_powers(ring: &Ring, parts: &[(Vec<Polynomial>, u32)]) -> Ideal {
    let mut acc: Vec<Polynomial> = vec![Polynomial::one(ring)];
    for (gens, a) in parts {
        let pw = multiset_products(ring, gens, *a);
        let mut next = Vec::with_capacity(acc.len() * pw.len());
        for x in &acc {
            for y in &pw {
                next.push(x * y);
            }
        }
        acc = clean(next);
    }
    Ideal::new(ring, acc).unwrap()
}

fn multiset_products(ring: &Ring, gens: &[Polynomial], a: u32) -> Vec<Polynomial> {
    // level-by-level products with non-decreasing index to avoid repeats
    let mut level: Vec<(usize, Polynomial)> = vec![(0, Polynomial::one(ring))];
    for _ in 0..a {
        let mut next = Vec::new();
        for (start, f) in &level {
            for (k, g) in gens.iter().enumerate().skip(*start) {
                next.push((k, f * g));
            }
        }
        level = next;
    }
    clean(level.into_iter().map(|(_, f)| f).collect())
}
