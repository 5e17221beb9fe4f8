//! Rings `F_p[x_1..x_d]` with positive variable weights and a monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Variables are listed from largest to smallest in each permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    GRevLex(Vec<usize>),
    /// `block` compared lexicographically first, then graded reverse lex on `rest`.
    Elimination { block: Vec<usize>, rest: Vec<usize> },
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder::Lex((0..n).collect())
    }

    pub fn grevlex(n: usize) -> Self {
        MonomialOrder::GRevLex((0..n).collect())
    }

    /// Grevlex with variable `last` made the smallest.
    pub fn grevlex_last(n: usize, last: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).filter(|&i| i != last).collect();
        perm.push(last);
        MonomialOrder::GRevLex(perm)
    }

    pub fn eliminate(n: usize, block: &[usize]) -> Self {
        let rest = (0..n).filter(|i| !block.contains(i)).collect();
        MonomialOrder::Elimination { block: block.to_vec(), rest }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        let all: Vec<usize> = match self {
            MonomialOrder::Lex(p) | MonomialOrder::GRevLex(p) => p.clone(),
            MonomialOrder::Elimination { block, rest } => block.iter().chain(rest).copied().collect(),
        };
        if all.len() != n {
            return Err(Error::InvalidRing("order does not list every variable once".into()));
        }
        for i in all {
            if i >= n || seen[i] {
                return Err(Error::InvalidRing("order is not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(())
    }

    /// Degree compatible for positive weights.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GRevLex(_))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex(perm) => {
                for &i in perm {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GRevLex(perm) => grevlex(a, b, perm, weights),
            MonomialOrder::Elimination { block, rest } => {
                for &i in block {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                grevlex(a, b, rest, weights)
            }
        }
    }
}

#[inline]
fn grevlex(a: &[u16], b: &[u16], perm: &[usize], weights: &[u32]) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for &i in perm {
        da += a[i] as u32 * weights[i];
        db += b[i] as u32 * weights[i];
    }
    if da != db {
        return da.cmp(&db);
    }
    for &i in perm.iter().rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    p: u32,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

fn valid_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic())
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

impl RingContext {
    pub fn new(p: u64, vars: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Ring> {
        let p = field::check_prime(p)?;
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        if weights.len() != vars.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidRing("weights must be at least 1".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(RingContext { p, vars, weights, order }))
    }

    /// Standard-graded ring with the given order.
    pub fn standard(p: u64, vars: &[&str], order: MonomialOrder) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let w = vec![1; vars.len()];
        Self::new(p, vars, w, order)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    #[inline]
    pub fn degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.weights)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        order.validate(self.nvars())?;
        Ok(Arc::new(RingContext { order, ..self.clone() }))
    }

    /// Same field, variables and weights; the order may differ.
    pub fn same_space(&self, o: &RingContext) -> bool {
        self.p == o.p && self.vars == o.vars && self.weights == o.weights
    }

    /// Append fresh variables (placed at the end of the index range).
    pub fn extend(&self, names: &[String], weights: &[u32], order: MonomialOrder) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(names.iter().cloned());
        let mut w = self.weights.clone();
        w.extend_from_slice(weights);
        RingContext::new(self.p as u64, vars, w, order)
    }

    /// A variable name not already used, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        (0..).map(|k| format!("{stem}_{k}")).find(|n| self.var_index(n).is_none()).unwrap()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&self.weights)
            .map(|(v, &w)| if w == 1 { v.clone() } else { format!("{v}:{w}") })
            .collect();
        let names = |p: &[usize]| p.iter().map(|&i| self.vars[i].as_str()).collect::<Vec<_>>().join(",");
        let order = match &self.order {
            MonomialOrder::Lex(p) => format!("lex({})", names(p)),
            MonomialOrder::GRevLex(p) if p.iter().enumerate().all(|(k, &i)| k == i) => "grevlex".into(),
            MonomialOrder::GRevLex(p) => format!("grevlex({})", names(p)),
            MonomialOrder::Elimination { block, rest } => format!("elim({};{})", names(block), names(rest)),
        };
        write!(f, "ring p={} vars {}; order {};", self.p, vars.join(","), order)
    }
}
