//! Dense exponent vectors.

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exp = u16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[Exp; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[Exp]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// Build from wide exponents, rejecting anything above `u16::MAX`.
    pub fn try_from_u32(exps: &[u32]) -> Result<Self> {
        let mut v = SmallVec::with_capacity(exps.len());
        for &e in exps {
            v.push(Exp::try_from(e).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial(v))
    }

    pub fn var(nvars: usize, i: usize, e: Exp) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[Exp] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    /// One bit per variable (mod 64) that occurs; a cheap divisibility filter.
    #[inline]
    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i & 63);
            }
        }
        m
    }

    pub fn checked_mul(&self, o: &Monomial) -> Option<Monomial> {
        let mut v = self.0.clone();
        for (a, &b) in v.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(b)?;
        }
        Some(Monomial(v))
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        self.checked_mul(o).expect("monomial exponent overflow")
    }

    pub fn checked_pow(&self, k: u32) -> Option<Monomial> {
        let mut v = self.0.clone();
        for a in v.iter_mut() {
            let e = (*a as u32).checked_mul(k)?;
            *a = Exp::try_from(e).ok()?;
        }
        Some(Monomial(v))
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    #[inline]
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut v = o.0.clone();
        for (a, &b) in v.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Monomial(v)
    }

    /// `self / o` when `o` divides `self`.
    pub fn checked_div(&self, o: &Monomial) -> Option<Monomial> {
        if o.divides(self) {
            Some(o.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Every exponent at most `q - 1`, i.e. the monomial is outside `m^[q]`.
    pub fn below_frobenius(&self, q: u32) -> bool {
        self.0.iter().all(|&e| (e as u32) < q)
    }

    /// `x^(a/q)` when every exponent is divisible by `q`.
    pub fn root(&self, q: u32) -> Option<Monomial> {
        if self.0.iter().all(|&e| (e as u32).is_multiple_of(q)) {
            Some(Monomial(self.0.iter().map(|&e| (e as u32 / q) as Exp).collect()))
        } else {
            None
        }
    }

    /// Componentwise `ceil(a / q)`.
    pub fn ceil_root(&self, q: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| (e as u32).div_ceil(q) as Exp).collect())
    }

    /// Split `x^a = x^r * (x^b)^q` with `0 <= r < q`; returns `(r, b)`.
    pub fn frobenius_split(&self, q: u32) -> (Monomial, Monomial) {
        let r = self.0.iter().map(|&e| (e as u32 % q) as Exp).collect();
        let b = self.0.iter().map(|&e| (e as u32 / q) as Exp).collect();
        (Monomial(r), Monomial(b))
    }

    pub(crate) fn set(&mut self, i: usize, e: Exp) {
        self.0[i] = e;
    }

    /// Drop or reorder coordinates: `out[k] = self[idx[k]]`.
    pub fn select(&self, idx: &[usize]) -> Monomial {
        Monomial(idx.iter().map(|&i| self.0[i]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Monomial::from_exps(&[2, 0, 1]);
        let b = Monomial::from_exps(&[1, 3, 0]);
        assert_eq!(a.lcm(&b).exps(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exps(), &[1, 0, 0]);
        assert!(!a.divides(&b));
        assert!(Monomial::from_exps(&[1, 0, 1]).divides(&a));
        assert_eq!(a.degree(&[1, 2, 3]), 5);
        assert_eq!(a.root(2), None);
        assert_eq!(Monomial::from_exps(&[4, 2, 0]).root(2).unwrap().exps(), &[2, 1, 0]);
        assert_eq!(a.ceil_root(2).exps(), &[1, 0, 1]);
    }

    #[test]
    fn overflow_detected() {
        let a = Monomial::from_exps(&[u16::MAX]);
        assert!(a.checked_mul(&Monomial::from_exps(&[1])).is_none());
        assert!(Monomial::try_from_u32(&[70000]).is_err());
    }
}
