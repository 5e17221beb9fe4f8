//! F-purity verdicts: Fedder's criterion, symbolic F-purity through colon
//! intersections, sufficient witness criteria, and checks specific to the
//! determinantal families.

mod criteria;
mod family;
mod provider;

use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub use criteria::{
    colon_contains, compare_powers, corh_sufficient, fedder_fpure, symbolic_fpure, symbolic_fpure_range,
    symbolic_rees_fpure_sufficient,
};
pub use family::{
    characteristic_ok, initial_filtration_fpure, initial_symbolic_equality, rees_fpure_witness,
    sfr_localization_witness,
};
pub use provider::{SymbolicProvider, SymbolicSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    VerifiedUpTo(u32),
    BudgetExceeded,
}

impl Outcome {
    /// Holds or verified over the checked range.
    pub fn is_positive(self) -> bool {
        matches!(self, Outcome::Holds | Outcome::VerifiedUpTo(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Holds => f.write_str("holds"),
            Outcome::Fails => f.write_str("fails"),
            Outcome::VerifiedUpTo(n) => write!(f, "verified-up-to({n})"),
            Outcome::BudgetExceeded => f.write_str("budget-exceeded"),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

/// Outcome of one criterion on one instance, with its certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub criterion: String,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub params: Params,
    pub verdict: Outcome,
    /// Certificate polynomial, in the input grammar.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colon_data: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl Verdict {
    pub fn new(criterion: &str, instance: impl Into<String>, p: u32) -> Self {
        Verdict {
            criterion: criterion.to_string(),
            instance: instance.into(),
            family: None,
            params: Params { p, ..Params::default() },
            verdict: Outcome::Fails,
            witness: None,
            colon_data: None,
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Outcome::Holds
    }

    pub fn set(&mut self, outcome: Outcome) -> &mut Self {
        self.verdict = outcome;
        self
    }

    pub fn witness(&mut self, f: &Polynomial) -> &mut Self {
        self.witness = Some(f.to_string());
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut s = format!("{} [{}]: {}", self.criterion, self.instance, self.verdict);
        if let Some(w) = &self.witness {
            let w = if w.len() > 80 { format!("{}...", &w[..77]) } else { w.clone() };
            s.push_str(&format!(" (witness {w})"));
        }
        s
    }
}

/// Runs `body` on a fresh verdict, timing it and turning budget errors into
/// a `budget-exceeded` outcome. Other errors propagate.
pub(crate) fn timed(mut v: Verdict, body: impl FnOnce(&mut Verdict) -> Result<()>) -> Result<Verdict> {
    let start = Instant::now();
    match body(&mut v) {
        Ok(()) => {}
        Err(e) if e.is_budget() => {
            v.verdict = Outcome::BudgetExceeded;
            v.notes.push(e.to_string());
        }
        Err(e) => return Err(e),
    }
    v.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(v)
}

pub(crate) fn need_height(h: Option<u32>) -> Result<u32> {
    h.ok_or_else(|| Error::InvalidSpec("big height must be supplied for this ideal".into()))
}

#[cfg(test)]
mod tests;
