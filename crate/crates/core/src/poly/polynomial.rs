//! Sparse polynomials over F_p with terms sorted strictly decreasing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::field;
use super::monomial::{Exp, Monomial};
use super::ring::{Ring, RingContext};
use crate::error::{Error, Result};

pub type Term = (Monomial, u32);

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        self.ring.same_space(&o.ring) && self.terms == o.terms
    }
}
impl Eq for Polynomial {}

// ---- raw term-vector kernels -------------------------------------------

/// Sort, merge equal monomials and drop zero coefficients.
pub(crate) fn normalize(mut terms: Vec<Term>, r: &RingContext) -> Vec<Term> {
    terms.sort_by(|a, b| r.cmp(&b.0, &a.0));
    let p = r.p();
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        let c = c % p;
        if let Some(last) = out.last_mut() {
            if last.0 == m {
                last.1 = field::add(last.1, c, p);
                continue;
            }
        }
        out.push((m, c));
    }
    out.retain(|t| t.1 != 0);
    out
}

pub(crate) fn add_terms(a: &[Term], b: &[Term], r: &RingContext) -> Vec<Term> {
    sub_mul(a, b, r.p() - 1, None, r)
}

/// `a - c * m * b` by a single merge; `m = None` means 1.
pub(crate) fn sub_mul(a: &[Term], b: &[Term], c: u32, m: Option<&Monomial>, r: &RingContext) -> Vec<Term> {
    let p = r.p();
    let negc = field::neg(c, p);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |t: &Term| -> Term {
        let mono = match m {
            Some(m) => t.0.mul(m),
            None => t.0.clone(),
        };
        (mono, field::mul(t.1, negc, p))
    };
    let mut pending: Option<Term> = if j < b.len() { Some(shifted(&b[j])) } else { None };
    while i < a.len() || pending.is_some() {
        match pending {
            None => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            Some(ref bt) => {
                let ord = if i < a.len() { r.cmp(&a[i].0, &bt.0) } else { Ordering::Less };
                match ord {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = if j < b.len() { Some(shifted(&b[j])) } else { None };
                    }
                    Ordering::Equal => {
                        let s = field::add(a[i].1, bt.1, p);
                        if s != 0 {
                            out.push((a[i].0.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        pending = if j < b.len() { Some(shifted(&b[j])) } else { None };
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn mul_terms(a: &[Term], b: &[Term], r: &RingContext) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() < b.len() { (a, b) } else { (b, a) };
    if a.len() == 1 {
        return scale_mono(b, a[0].1, &a[0].0, r);
    }
    let p = r.p();
    let mut acc: FxHashMap<Monomial, u32> = FxHashMap::default();
    acc.reserve(a.len() * b.len() / 2);
    for (ma, ca) in a {
        for (mb, cb) in b {
            let e = acc.entry(ma.mul(mb)).or_insert(0);
            *e = field::add(*e, field::mul(*ca, *cb, p), p);
        }
    }
    let mut out: Vec<Term> = acc.into_iter().filter(|t| t.1 != 0).collect();
    out.sort_unstable_by(|x, y| r.cmp(&y.0, &x.0));
    out
}

pub(crate) fn scale_mono(a: &[Term], c: u32, m: &Monomial, r: &RingContext) -> Vec<Term> {
    let p = r.p();
    if c.is_multiple_of(p) {
        return Vec::new();
    }
    a.iter().map(|(mm, cc)| (mm.mul(m), field::mul(*cc, c, p))).collect()
}

// ---- public polynomial API ---------------------------------------------

impl Polynomial {
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let terms = normalize(terms, ring);
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = field::from_i64(c, ring.p());
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), 1)
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: u32) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }
    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map(|t| t.1).unwrap_or(0)
    }

    /// Largest weighted degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| self.ring.degree(&t.0)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|t| self.ring.degree(&t.0));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn check(&self, o: &Polynomial) -> Result<()> {
        if Ring::ptr_eq(&self.ring, &o.ring) || *self.ring == *o.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: add_terms(&self.terms, &o.terms, &self.ring) })
    }

    pub fn checked_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: sub_mul(&self.terms, &o.terms, 1, None, &self.ring) })
    }

    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(Polynomial { ring: self.ring.clone(), terms: mul_terms(&self.terms, &o.terms, &self.ring) })
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let m = Monomial::one(self.ring.nvars());
        Polynomial { ring: self.ring.clone(), terms: scale_mono(&self.terms, c, &m, &self.ring) }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: scale_mono(&self.terms, c, m, &self.ring) }
    }

    /// Scaled to leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(field::inv(t.1, self.ring.p())),
        }
    }

    /// `f^(p^e)`, computed termwise since Frobenius is additive in characteristic p.
    pub fn frobenius(&self, e: u32) -> Result<Polynomial> {
        let q = self.ring.p().checked_pow(e).ok_or(Error::ExponentOverflow)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow(q).ok_or(Error::ExponentOverflow)?, *c));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Some term has every exponent at most `q - 1`, i.e. `f` is not in `m^[q]`.
    pub fn outside_frobenius_max(&self, q: u32) -> bool {
        self.terms.iter().any(|t| t.0.below_frobenius(q))
    }

    /// Decompose `f = sum_a x^a * f_a^q` with `0 <= a < q`; returns the nonzero `f_a`.
    /// `f` lies in `J^[q]` exactly when every `f_a` lies in `J`.
    pub fn frobenius_components(&self, q: u32) -> Vec<Polynomial> {
        let mut parts: FxHashMap<Monomial, Vec<Term>> = FxHashMap::default();
        for (m, c) in &self.terms {
            let (rem, root) = m.frobenius_split(q);
            parts.entry(rem).or_default().push((root, *c));
        }
        let mut keys: Vec<Monomial> = parts.keys().cloned().collect();
        keys.sort();
        keys.into_iter()
            .map(|k| {
                let terms = parts.remove(&k).unwrap();
                // terms inherit the decreasing order of f
                Polynomial { ring: self.ring.clone(), terms }
            })
            .collect()
    }

    /// Same polynomial viewed in a ring with the same variables but another order.
    pub fn in_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if !self.ring.same_space(ring) {
            return Err(Error::RingMismatch);
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Send variable `i` to variable `map[i]` of `target`.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (i, &e) in m.exps().iter().enumerate() {
                    out.set(map[i], e);
                }
                (out, *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Restrict to the variables `keep` of `target`, `None` if another variable occurs.
    pub fn restrict(&self, target: &Ring, keep: &[usize]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let kept: u32 = keep.iter().map(|&i| m.exps()[i] as u32).sum();
            if kept != m.total_degree() {
                return None;
            }
            terms.push((m.select(keep), *c));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.checked_div(m)?, *c));
        }
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Largest monomial dividing every term.
    pub fn content_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.ring.nvars()),
            Some(first) => it.fold(first.0.clone(), |g, t| g.gcd(&t.0)),
        }
    }

    /// Evaluate variable `i` at a constant.
    pub fn substitute_const(&self, i: usize, v: u32) -> Polynomial {
        let p = self.ring.p();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exps()[i];
                let mut mm = m.clone();
                mm.set(i, 0);
                (mm, field::mul(*c, field::pow(v, e as u64, p), p))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact quotient `self / g`, `None` if `g` does not divide.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let r = &self.ring;
        let (gm, gc) = g.terms.first()?.clone();
        let ginv = field::inv(gc, r.p());
        let mut rest = self.terms.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rest.first().cloned() {
            let q = m.checked_div(&gm)?;
            let c = field::mul(c, ginv, r.p());
            rest = sub_mul(&rest[1..], &g.terms[1..], c, Some(&q), r);
            quot.push((q, c));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    pub fn max_exponent(&self) -> Exp {
        self.terms.iter().flat_map(|t| t.0.exps().iter().copied()).max().unwrap_or(0)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $f(self, o: &Polynomial) -> Polynomial {
                self.$checked(o).expect("polynomials from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, o: Polynomial) -> Polynomial {
                (&self).$f(&o)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.p() - 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.p();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field::signed(*c, p);
            let (neg, a) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", a, self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::MonomialOrder;

    fn ring() -> Ring {
        RingContext::standard(5, &["x", "y", "z"], MonomialOrder::grevlex(3)).unwrap()
    }

    #[test]
    fn arithmetic() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!((&sq - &sq).len(), 0);
        // (x+y)^5 = x^5 + y^5 over F_5
        assert_eq!(s.pow(5), &x.pow(5) + &y.pow(5));
        assert_eq!(s.frobenius(1).unwrap(), s.pow(5));
        assert_eq!(format!("{}", &x - &y), "x - y");
    }

    #[test]
    fn mixed_rings_rejected() {
        let r1 = ring();
        let r2 = RingContext::standard(7, &["x", "y", "z"], MonomialOrder::grevlex(3)).unwrap();
        assert_eq!(Polynomial::var(&r1, 0).checked_add(&Polynomial::var(&r2, 0)), Err(Error::RingMismatch));
    }

    #[test]
    fn components_rebuild() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x.pow(7) * &y) + &y.pow(10);
        let parts = f.frobenius_components(5);
        assert_eq!(parts.len(), 2);
        assert!(!Polynomial::var(&r, 2).pow(5).outside_frobenius_max(5));
        assert!(f.outside_frobenius_max(11));
    }
}
