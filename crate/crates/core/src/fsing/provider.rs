//! Sources of symbolic powers `n -> I^(n)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::determinantal::DetFamily;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymbolicSource {
    DeterminantalFormula,
    SquarefreeMonomial,
    UserSaturation,
    OrdinaryPowers,
}

enum Backing {
    Family(Arc<DetFamily>),
    Monomial(MonomialIdeal),
    /// `I^n : delta^∞`; the caller vouches that `delta` lies in every
    /// embedded prime of every power and not in `I`.
    Saturation(Polynomial),
    Ordinary,
}

/// `I` together with a rule for its symbolic powers.
pub struct SymbolicProvider {
    ideal: Ideal,
    backing: Backing,
    big_height: Option<u32>,
    witness: Option<Polynomial>,
    cache: Mutex<HashMap<u32, Ideal>>,
}

impl SymbolicProvider {
    /// Symbolic powers of a determinantal family from its generation formula.
    /// The witness is the family polynomial `f_t`.
    pub fn determinantal(family: Arc<DetFamily>) -> Result<Self> {
        let ideal = family.ideal();
        let h = family.spec().height();
        let w = family.witness_t()?;
        Ok(SymbolicProvider {
            ideal,
            backing: Backing::Family(family),
            big_height: Some(h),
            witness: Some(w),
            cache: Mutex::default(),
        })
    }

    /// Square-free monomial ideal; its big height is computed.
    pub fn squarefree_monomial(ring: &Ring, m: MonomialIdeal) -> Result<Self> {
        if !m.is_squarefree() {
            return Err(Error::InvalidSpec("monomial ideal is not square-free".into()));
        }
        let h = m.minimal_primes().iter().map(|p| p.len() as u32).max();
        Ok(SymbolicProvider {
            ideal: Ideal::from_monomial(ring, &m),
            backing: Backing::Monomial(m),
            big_height: h,
            witness: None,
            cache: Mutex::default(),
        })
    }

    pub fn saturation(ideal: Ideal, delta: Polynomial, big_height: Option<u32>) -> Self {
        SymbolicProvider { ideal, backing: Backing::Saturation(delta), big_height, witness: None, cache: Mutex::default() }
    }

    /// For ideals whose symbolic and ordinary powers agree.
    pub fn ordinary(ideal: Ideal, big_height: Option<u32>) -> Self {
        SymbolicProvider { ideal, backing: Backing::Ordinary, big_height, witness: None, cache: Mutex::default() }
    }

    /// Polynomial claimed to lie in `I^(H)`; criteria verify the claim.
    pub fn with_witness(mut self, f: Polynomial) -> Self {
        self.witness = Some(f);
        self
    }

    pub fn with_big_height(mut self, h: u32) -> Self {
        self.big_height = Some(h);
        self
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn big_height(&self) -> Option<u32> {
        self.big_height
    }

    pub fn witness(&self) -> Option<&Polynomial> {
        self.witness.as_ref()
    }

    pub fn source(&self) -> SymbolicSource {
        match self.backing {
            Backing::Family(_) => SymbolicSource::DeterminantalFormula,
            Backing::Monomial(_) => SymbolicSource::SquarefreeMonomial,
            Backing::Saturation(_) => SymbolicSource::UserSaturation,
            Backing::Ordinary => SymbolicSource::OrdinaryPowers,
        }
    }

    pub fn family(&self) -> Option<&Arc<DetFamily>> {
        match &self.backing {
            Backing::Family(f) => Some(f),
            _ => None,
        }
    }

    pub fn monomial(&self) -> Option<&MonomialIdeal> {
        match &self.backing {
            Backing::Monomial(m) => Some(m),
            _ => None,
        }
    }

    /// Monomial symbolic power, for the square-free monomial source.
    pub fn monomial_power(&self, n: u32) -> Option<MonomialIdeal> {
        self.monomial().and_then(|m| m.symbolic_power_squarefree(n))
    }

    /// `I^(n)`; `n = 0` gives the unit ideal.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(self.ring()));
        }
        if n == 1 {
            return Ok(self.ideal.clone());
        }
        if let Some(i) = self.cache.lock().unwrap().get(&n) {
            return Ok(i.clone());
        }
        let out = match &self.backing {
            Backing::Family(f) => f.symbolic_power(n),
            Backing::Monomial(m) => Ideal::from_monomial(self.ring(), &m.symbolic_power_squarefree(n).unwrap()),
            Backing::Saturation(d) => self.ideal.power(n).saturate(d)?,
            Backing::Ordinary => self.ideal.power(n),
        };
        self.cache.lock().unwrap().insert(n, out.clone());
        Ok(out)
    }

    /// Candidate certificates for colon-intersection tests: `f^{p-1}` for the
    /// witness, `g^{p-1}` for a principal ideal, `(x_1..x_d)^{p-1}` for
    /// square-free monomial ideals.
    pub fn candidates(&self, p: u32) -> Vec<Polynomial> {
        let mut out = Vec::new();
        if let Some(f) = &self.witness {
            out.push(f.pow(p - 1));
        }
        if self.ideal.gens().len() == 1 {
            out.push(self.ideal.gens()[0].pow(p - 1));
        }
        if self.monomial().is_some() {
            let n = self.ring().nvars();
            let all = Monomial::from_exps(&vec![(p - 1) as u16; n]);
            out.push(Polynomial::monomial(self.ring(), all, 1));
        }
        out
    }
}
