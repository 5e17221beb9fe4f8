use crate::poly::{Monomial, Polynomial, Ring};

use super::engine::{reduce_full, reduces_to_zero, Elem, ElemList};

/// Gröbner basis with respect to the order carried by `ring`. When
/// `degree_limit` is set the basis is only complete up to that degree.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elems: Vec<Elem>,
    degree_limit: Option<u32>,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: Ring, elems: Vec<Elem>, degree_limit: Option<u32>) -> Self {
        GroebnerBasis { ring, elems, degree_limit }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn degree_limit(&self) -> Option<u32> {
        self.degree_limit
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|e| Polynomial::from_sorted(&self.ring, e.terms.clone())).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm.clone()).collect()
    }

    /// The unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|e| e.lm.is_one())
    }

    fn list(&self) -> ElemList<'_> {
        ElemList(self.elems.iter().collect())
    }

    /// Remainder of `f` after full reduction.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.in_ring(&self.ring).expect("normal form across rings");
        let (t, _) = reduce_full(f.into_terms(), &self.list(), &self.ring);
        Polynomial::from_sorted(&self.ring, t)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        let f = f.in_ring(&self.ring).expect("membership across rings");
        reduces_to_zero(f.into_terms(), &self.list(), &self.ring)
    }
}
