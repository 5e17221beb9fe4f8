//! Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
//! selection. For homogeneous input the run can stop at any degree and be
//! resumed later, which gives degree-truncated bases for membership tests.

use std::cmp::Reverse;


use crate::budget;
use crate::error::{Error, Result};
use crate::poly::field;
use crate::poly::polynomial::{scale_mono, sub_mul};
use crate::poly::{Monomial, Polynomial, Ring, RingContext, Term};

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub terms: Vec<Term>,
    pub lm: Monomial,
    pub mask: u64,
    pub sugar: u32,
}

impl Elem {
    /// Monic element from nonzero sorted terms.
    pub fn new(mut terms: Vec<Term>, sugar: u32, p: u32) -> Elem {
        let lc = terms[0].1;
        if lc != 1 {
            let inv = field::inv(lc, p);
            for t in terms.iter_mut() {
                t.1 = field::mul(t.1, inv, p);
            }
        }
        let lm = terms[0].0.clone();
        let mask = lm.mask();
        Elem { terms, lm, mask, sugar }
    }
}

pub(crate) trait Reducers {
    fn find(&self, m: &Monomial) -> Option<&Elem>;
}

/// Plain list of reducers, scanned in order.
pub(crate) struct ElemList<'a>(pub Vec<&'a Elem>);

impl Reducers for ElemList<'_> {
    #[inline]
    fn find(&self, m: &Monomial) -> Option<&Elem> {
        let mask = m.mask();
        self.0.iter().copied().find(|e| e.mask & !mask == 0 && e.lm.divides(m))
    }
}

/// Full reduction; returns the normal form and the sugar it picked up.
pub(crate) fn reduce_full<R: Reducers>(mut f: Vec<Term>, set: &R, ring: &RingContext) -> (Vec<Term>, u32) {
    let mut out = Vec::new();
    let mut sugar = 0;
    let mut start = 0;
    while start < f.len() {
        let found = set.find(&f[start].0);
        match found {
            Some(g) => {
                let q = g.lm.quotient_of(&f[start].0);
                sugar = sugar.max(ring.degree(&q) + g.sugar);
                f = sub_mul(&f[start + 1..], &g.terms[1..], f[start].1, Some(&q), ring);
                start = 0;
            }
            None => {
                out.push(std::mem::replace(&mut f[start], (Monomial::one(0), 0)));
                start += 1;
            }
        }
    }
    (out, sugar)
}

/// Top reduction only; true when `f` reduces to zero.
pub(crate) fn reduces_to_zero<R: Reducers>(mut f: Vec<Term>, set: &R, ring: &RingContext) -> bool {
    loop {
        let Some(lead) = f.first() else { return true };
        match set.find(&lead.0) {
            Some(g) => {
                let q = g.lm.quotient_of(&lead.0);
                f = sub_mul(&f[1..], &g.terms[1..], lead.1, Some(&q), ring);
            }
            None => return false,
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

pub(crate) struct Engine {
    ring: Ring,
    homogeneous: bool,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    /// Input generators not yet inserted, best last.
    inputs: Vec<(usize, Vec<Term>, u32)>,
    /// Per input: `Some(true)` when it survived reduction (a minimal generator
    /// in the homogeneous case).
    input_kept: Vec<Option<bool>>,
    done_degree: Option<u32>,
    spairs: usize,
}

impl Engine {
    /// `ring` carries the target order; generators must live in the same space.
    pub fn new(ring: &Ring, gens: &[Polynomial]) -> Result<Engine> {
        let mut inputs = Vec::new();
        let mut homogeneous = true;
        for (k, g) in gens.iter().enumerate() {
            let g = g.in_ring(ring)?;
            homogeneous &= g.is_homogeneous();
            let d = g.degree();
            if !g.is_zero() {
                inputs.push((k, g.into_terms(), d));
            }
        }
        let mut input_kept = vec![None; gens.len()];
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() {
                input_kept[k] = Some(false);
            }
        }
        // best (lowest degree, earliest) last
        inputs.sort_by_key(|(k, _, d)| Reverse((*d, *k)));
        Ok(Engine {
            ring: ring.clone(),
            homogeneous,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            inputs,
            input_kept,
            done_degree: None,
            spairs: 0,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.inputs.is_empty()
    }

    /// Every element of degree at most this is known to reduce to zero.
    pub fn done_degree(&self) -> Option<u32> {
        if self.is_complete() {
            Some(u32::MAX)
        } else {
            self.done_degree
        }
    }

    fn pair_key(&self, p: &Pair) -> (u32, u32) {
        (p.sugar, self.ring.degree(&p.lcm))
    }

    fn sort_pairs(&mut self) {
        let ring = self.ring.clone();
        // best pair last: lowest sugar, then lowest lcm
        self.pairs.sort_by(|a, b| {
            let ka = (a.sugar, ring.degree(&a.lcm));
            let kb = (b.sugar, ring.degree(&b.lcm));
            kb.cmp(&ka).then_with(|| ring.cmp(&b.lcm, &a.lcm)).then_with(|| (b.i, b.j).cmp(&(a.i, a.j)))
        });
    }

    /// Process pairs and inputs up to degree `limit` (all, when `None`).
    pub fn run(&mut self, limit: Option<u32>) -> Result<()> {
        if limit.is_some() && !self.homogeneous {
            return Err(Error::NotHomogeneous("degree-truncated Gröbner basis".into()));
        }
        loop {
            let pair_sugar = self.pairs.last().map(|p| self.pair_key(p).0);
            let input_sugar = self.inputs.last().map(|t| t.2);
            // at equal degree, S-pairs go first so inputs are tested against
            // everything generated in lower degrees
            let take_pair = match (pair_sugar, input_sugar) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a <= b,
            };
            let next = if take_pair { pair_sugar.unwrap() } else { input_sugar.unwrap() };
            if let Some(l) = limit {
                if next > l {
                    self.done_degree = Some(self.done_degree.map_or(l, |d| d.max(l)));
                    return Ok(());
                }
            }
            if self.homogeneous && next > 0 {
                self.done_degree = Some(next - 1).max(self.done_degree);
            }
            if take_pair {
                let pair = self.pairs.pop().unwrap();
                self.spairs += 1;
                if self.spairs > budget::max_spairs() {
                    return Err(Error::BudgetExceeded { pairs: self.spairs - 1, what: "S-pair limit".into() });
                }
                if self.spairs.is_multiple_of(32) {
                    budget::check_deadline(self.spairs)?;
                }
                let s = self.spoly(&pair);
                if s.is_empty() {
                    continue;
                }
                let (h, sug) = {
                    let list = ElemList(self.active.iter().map(|&k| &self.elems[k]).collect());
                    reduce_full(s, &list, &self.ring)
                };
                if !h.is_empty() {
                    let sugar = if self.homogeneous { pair.sugar } else { pair.sugar.max(sug) };
                    self.insert(h, sugar);
                }
            } else {
                let (k, f, d) = self.inputs.pop().unwrap();
                let (h, sug) = {
                    let list = ElemList(self.active.iter().map(|&k| &self.elems[k]).collect());
                    reduce_full(f, &list, &self.ring)
                };
                self.input_kept[k] = Some(!h.is_empty());
                if !h.is_empty() {
                    let sugar = if self.homogeneous { d } else { d.max(sug) };
                    self.insert(h, sugar);
                }
            }
        }
        self.done_degree = Some(u32::MAX);
        Ok(())
    }

    fn spoly(&self, pr: &Pair) -> Vec<Term> {
        let (a, b) = (&self.elems[pr.i], &self.elems[pr.j]);
        let ma = a.lm.quotient_of(&pr.lcm);
        let mb = b.lm.quotient_of(&pr.lcm);
        let left = scale_mono(&a.terms[1..], 1, &ma, &self.ring);
        sub_mul(&left, &b.terms[1..], 1, Some(&mb), &self.ring)
    }

    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        let h = Elem::new(terms, sugar, self.ring.p());
        let k = self.elems.len();
        // Gebauer-Moeller: choose new pairs
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&j| {
                let g = &self.elems[j];
                (j, h.lm.lcm(&g.lm), h.lm.coprime(&g.lm))
            })
            .collect();
        let mut chosen: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((j, l, coprime)) = cands.pop() {
            let dominated = cands.iter().any(|c| c.1.divides(&l)) || chosen.iter().any(|c| c.1.divides(&l));
            if coprime || !dominated {
                chosen.push((j, l, coprime));
            }
        }
        // drop old pairs made redundant by h
        let hl = &h.lm;
        let elems = &self.elems;
        self.pairs.retain(|pr| {
            if !hl.divides(&pr.lcm) {
                return true;
            }
            let li = hl.lcm(&elems[pr.i].lm);
            let lj = hl.lcm(&elems[pr.j].lm);
            li == pr.lcm || lj == pr.lcm
        });
        let ring = self.ring.clone();
        for (j, l, coprime) in chosen {
            if coprime {
                continue;
            }
            let g = &self.elems[j];
            let sj = g.sugar + ring.degree(&g.lm.quotient_of(&l));
            let sh = h.sugar + ring.degree(&h.lm.quotient_of(&l));
            let (i, jj) = if j < k { (j, k) } else { (k, j) };
            self.pairs.push(Pair { i, j: jj, lcm: l, sugar: sj.max(sh) });
        }
        self.active.retain(|&j| !hl.divides(&elems[j].lm));
        self.active.push(k);
        self.elems.push(h);
        self.sort_pairs();
    }

    /// Active elements (a truncated basis when the run stopped early).
    pub fn active_elems(&self) -> Vec<Elem> {
        self.active.iter().map(|&k| self.elems[k].clone()).collect()
    }

    /// Inputs that were not redundant when inserted.
    pub fn kept_inputs(&self) -> Vec<usize> {
        (0..self.input_kept.len()).filter(|&k| self.input_kept[k] == Some(true)).collect()
    }

    /// Reduced basis, sorted by increasing leading monomial. Only meaningful
    /// once `run(None)` has finished.
    pub fn reduced_basis(&self) -> Vec<Elem> {
        let mut els = self.active_elems();
        let ring = self.ring.clone();
        els.sort_by(|a, b| ring.cmp(&a.lm, &b.lm));
        let mut out = Vec::with_capacity(els.len());
        for i in 0..els.len() {
            let others = ElemList(els.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e).collect());
            let tail = els[i].terms[1..].to_vec();
            let (t, _) = reduce_full(tail, &others, &ring);
            let mut terms = vec![els[i].terms[0].clone()];
            terms.extend(t);
            out.push(Elem { terms, lm: els[i].lm.clone(), mask: els[i].mask, sugar: els[i].sugar });
        }
        out
    }
}
