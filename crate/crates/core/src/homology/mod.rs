//! Graded free resolutions, Betti tables, depth and regularity.
//!
//! Resolutions come from a Schreyer frame. The frame is usually not
//! minimal; graded Betti numbers are read off from the ranks of its
//! degree-preserving (constant) blocks, which is the homology of the frame
//! tensored with the residue field.

mod resolution;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::determinantal::{DetFamily, DetIdealSpec};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{field, MonomialOrder};

/// Graded Betti numbers `beta_{i,j}` of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let entries = entries.into_iter().filter(|&(_, b)| b > 0).collect();
        BettiTable { nvars, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), beta)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &b)| b).sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Auslander–Buchsbaum.
    pub fn depth(&self) -> usize {
        self.nvars - self.projective_dimension()
    }

    /// `max(j - i)` over nonzero entries.
    pub fn regularity(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i as u32).max().unwrap_or(0)
    }

    /// Minimal generators of `I` by degree.
    pub fn generator_degrees(&self) -> BTreeMap<u32, usize> {
        self.entries.iter().filter(|(&(i, _), _)| i == 1).map(|(&(_, j), &b)| (j, b)).collect()
    }
}

/// Rows `j - i`, columns `i`, zeros shown as dots.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |s: &str, w: usize| format!("{s:>w$}");
        let mut cols: Vec<Vec<String>> = Vec::new();
        for i in 0..=pd {
            let mut col = vec![i.to_string(), self.total(i).to_string()];
            for r in 0..=reg {
                let b = self.get(i, r + i as u32);
                col.push(if b == 0 { ".".into() } else { b.to_string() });
            }
            cols.push(col);
        }
        let widths: Vec<usize> = cols.iter().map(|c| c.iter().map(String::len).max().unwrap_or(1)).collect();
        let label_w = format!("{reg}:").len().max("total:".len());
        for row in 0..reg as usize + 3 {
            let label = match row {
                0 => String::new(),
                1 => "total:".into(),
                r => format!("{}:", r - 2),
            };
            let mut line = cell(&label, label_w);
            for (c, w) in cols.iter().zip(&widths) {
                line.push(' ');
                line.push_str(&cell(&c[row], *w));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let betti: Vec<[u64; 3]> = self.entries().map(|((i, j), b)| [i as u64, j as u64, b as u64]).collect();
        let mut st = s.serialize_struct("BettiTable", 5)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("pd", &self.projective_dimension())?;
        st.serialize_field("depth", &self.depth())?;
        st.serialize_field("regularity", &self.regularity())?;
        st.serialize_field("betti", &betti)?;
        st.end()
    }
}

/// Minimal graded Betti numbers of `R/I` for a standard graded homogeneous `I`.
pub fn free_resolution(ideal: &Ideal) -> Result<BettiTable> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if ring.weights().iter().any(|&w| w != 1) {
        return Err(Error::Unsupported("resolutions need a standard graded ring".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("free resolution".into()));
    }
    let gb = ideal.groebner_in(&MonomialOrder::grevlex(n))?;
    if gb.is_unit() {
        return Err(Error::InvalidSpec("R/I is zero".into()));
    }
    let levels = resolution::frame(gb.ring(), &gb.elements())?;
    let p = ring.p();
    // ranks[k][j]: rank of the constant block of F_k -> F_{k-1} in degree j
    let mut ranks: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); levels.len() + 1];
    for k in 1..levels.len() {
        let mut by_deg: BTreeMap<u32, BTreeMap<usize, Vec<(usize, u32)>>> = BTreeMap::new();
        for (row, col, c) in levels[k].constant_entries() {
            let d = levels[k].gens[col].deg;
            by_deg.entry(d).or_default().entry(col).or_default().push((row, c));
        }
        for (d, cols) in by_deg {
            ranks[k].insert(d, rank_mod_p(cols.into_values().collect(), p));
        }
    }
    let mut entries = BTreeMap::new();
    for (k, level) in levels.iter().enumerate() {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for g in &level.gens {
            *counts.entry(g.deg).or_default() += 1;
        }
        for (d, c) in counts {
            let r = ranks[k].get(&d).copied().unwrap_or(0) + ranks[k + 1].get(&d).copied().unwrap_or(0);
            entries.insert((k, d), c - r);
        }
    }
    Ok(BettiTable::from_entries(n, entries))
}

/// Rank over `F_p` of the matrix with the given sparse columns.
fn rank_mod_p(cols: Vec<Vec<(usize, u32)>>, p: u32) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, u32)>> = BTreeMap::new();
    for col in cols {
        let mut v: BTreeMap<usize, u32> = BTreeMap::new();
        for (r, c) in col {
            let e = v.entry(r).or_insert(0);
            *e = field::add(*e, c, p);
        }
        v.retain(|_, c| *c != 0);
        while let Some((&r, &c)) = v.iter().next() {
            match pivots.get(&r) {
                Some(piv) => {
                    for &(pr, pc) in piv {
                        let e = v.entry(pr).or_insert(0);
                        *e = field::sub(*e, field::mul(c, pc, p), p);
                        if *e == 0 {
                            v.remove(&pr);
                        }
                    }
                }
                None => {
                    let inv = field::inv(c, p);
                    pivots.insert(r, v.iter().map(|(&r, &x)| (r, field::mul(x, inv, p))).collect());
                    break;
                }
            }
        }
    }
    pivots.len()
}

pub fn depth(ideal: &Ideal) -> Result<usize> {
    Ok(free_resolution(ideal)?.depth())
}

pub fn regularity(ideal: &Ideal) -> Result<u32> {
    Ok(free_resolution(ideal)?.regularity())
}

/// One row of [`depth_reg_sequences`].
#[derive(Clone, Debug, Serialize)]
pub struct DepthRegRow {
    pub n: u32,
    pub depth: Option<usize>,
    pub regularity: Option<u32>,
    /// `reg / n`.
    pub ratio: Option<f64>,
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthRegTable {
    pub instance: String,
    pub p: u32,
    pub nvars: usize,
    pub rows: Vec<DepthRegRow>,
}

impl DepthRegTable {
    pub fn depth_at(&self, n: u32) -> Option<usize> {
        self.rows.iter().find(|r| r.n == n).and_then(|r| r.depth)
    }
}

impl fmt::Display for DepthRegTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over F_{}", self.instance, self.p)?;
        writeln!(f, "{:>3} {:>6} {:>4} {:>8}  status", "n", "depth", "reg", "reg/n")?;
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        for r in &self.rows {
            writeln!(
                f,
                "{:>3} {:>6} {:>4} {:>8}  {}",
                r.n,
                show(r.depth.map(|d| d.to_string())),
                show(r.regularity.map(|d| d.to_string())),
                show(r.ratio.map(|x| format!("{x:.3}"))),
                r.status
            )?;
        }
        Ok(())
    }
}

/// Depth and regularity of `R/I^(n)` for `n = 1..=big_n`. Rows are computed
/// in parallel; a row that runs out of budget is kept and marked.
pub fn depth_reg_sequences(spec: &DetIdealSpec, p: u64, big_n: u32) -> Result<DepthRegTable> {
    let fam = DetFamily::new(*spec, p)?;
    let rows = (1..=big_n)
        .into_par_iter()
        .map(|n| match free_resolution(&fam.symbolic_power(n)) {
            Ok(b) => DepthRegRow {
                n,
                depth: Some(b.depth()),
                regularity: Some(b.regularity()),
                ratio: Some(b.regularity() as f64 / n as f64),
                status: "ok".into(),
            },
            Err(e) => DepthRegRow {
                n,
                depth: None,
                regularity: None,
                ratio: None,
                status: if e.is_budget() { "budget-exceeded".into() } else { e.to_string() },
            },
        })
        .collect();
    Ok(DepthRegTable { instance: spec.to_string(), p: fam.p(), nvars: fam.ring().nvars(), rows })
}

/// Index pairs `(n + 1, n p + s)` with `1 <= s <= p` and both at most
/// `big_n`, for which an F-pure symbolic filtration forces
/// `depth R/I^(n+1) >= depth R/I^(np+s)`.
pub fn depth_comparison_pairs(p: u32, big_n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 0..big_n {
        for s in 1..=p {
            let b = n * p + s;
            if b <= big_n && b != n + 1 {
                out.push((n + 1, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
