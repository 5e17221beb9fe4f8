//! Determinantal and Pfaffian ideals of generic, symmetric, skew-symmetric
//! and Hankel matrices of variables, with their symbolic powers and the
//! witness polynomials used by the splitting criteria.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{product_of_powers, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingContext};

mod graph;
#[cfg(test)]
mod tests;

pub use graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum MatrixShape {
    Generic { r: u32, s: u32 },
    Symmetric { r: u32 },
    /// Skew-symmetric; ideals are generated by Pfaffians.
    #[serde(rename = "pfaffian")]
    Skew { r: u32 },
    /// `j x (c + 1 - j)` Hankel matrix in `w_1..w_c`.
    Hankel { j: u32, c: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealKind {
    Minors,
    Pfaffians,
}

/// `I_t` of a matrix shape; for skew matrices `t` is half the Pfaffian size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DetIdealSpec {
    pub shape: MatrixShape,
    pub t: u32,
}

impl DetIdealSpec {
    pub fn generic(r: u32, s: u32, t: u32) -> Self {
        DetIdealSpec { shape: MatrixShape::Generic { r, s }, t }
    }
    pub fn symmetric(r: u32, t: u32) -> Self {
        DetIdealSpec { shape: MatrixShape::Symmetric { r }, t }
    }
    pub fn pfaffian(r: u32, t: u32) -> Self {
        DetIdealSpec { shape: MatrixShape::Skew { r }, t }
    }
    /// Hankel ideal `I_t(W^c_m)` on the most square matrix.
    pub fn hankel(c: u32, t: u32) -> Self {
        DetIdealSpec { shape: MatrixShape::Hankel { j: c.div_ceil(2), c }, t }
    }

    pub fn kind(&self) -> IdealKind {
        match self.shape {
            MatrixShape::Skew { .. } => IdealKind::Pfaffians,
            _ => IdealKind::Minors,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self.shape {
            MatrixShape::Generic { .. } => "generic",
            MatrixShape::Symmetric { .. } => "symmetric",
            MatrixShape::Skew { .. } => "pfaffian",
            MatrixShape::Hankel { .. } => "hankel",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let t = self.t;
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if t == 0 {
            return bad("t must be at least 1".into());
        }
        match self.shape {
            MatrixShape::Generic { r, s } => {
                if r == 0 || r > s {
                    return bad(format!("generic matrix needs 1 <= r <= s, got {r}x{s}"));
                }
                if t > r {
                    return bad(format!("t = {t} exceeds r = {r}"));
                }
            }
            MatrixShape::Symmetric { r } => {
                if t > r {
                    return bad(format!("t = {t} exceeds r = {r}"));
                }
            }
            MatrixShape::Skew { r } => {
                if r < 2 || 2 * t > r {
                    return bad(format!("Pfaffians of size {} need r >= {}", 2 * t, 2 * t));
                }
            }
            MatrixShape::Hankel { j, c } => {
                if j == 0 || j > c {
                    return bad(format!("Hankel matrix needs 1 <= j <= c, got j={j}, c={c}"));
                }
                if t > j.min(c + 1 - j) {
                    return bad(format!("t = {t} exceeds min(j, c+1-j) = {}", j.min(c + 1 - j)));
                }
            }
        }
        Ok(())
    }

    /// Largest index `j` with `I_j` nonzero in the family.
    pub fn top(&self) -> u32 {
        match self.shape {
            MatrixShape::Generic { r, .. } => r,
            MatrixShape::Symmetric { r } => r,
            MatrixShape::Skew { r } => r / 2,
            MatrixShape::Hankel { c, .. } => c.div_ceil(2),
        }
    }

    /// Height of `I_t`, by the classical formulas.
    pub fn height(&self) -> u32 {
        let t = self.t;
        match self.shape {
            MatrixShape::Generic { r, s } => (r - t + 1) * (s - t + 1),
            MatrixShape::Symmetric { r } => (r - t + 1) * (r - t + 2) / 2,
            MatrixShape::Skew { r } => (r - 2 * t + 1) * (r - 2 * t + 2) / 2,
            MatrixShape::Hankel { c, .. } => c + 2 - 2 * t,
        }
    }

    /// Dimension of the polynomial ring.
    pub fn nvars(&self) -> u32 {
        match self.shape {
            MatrixShape::Generic { r, s } => r * s,
            MatrixShape::Symmetric { r } => r * (r + 1) / 2,
            MatrixShape::Skew { r } => r * (r - 1) / 2,
            MatrixShape::Hankel { c, .. } => c,
        }
    }

    /// `(r, s)` as reported in verdict records.
    pub fn dims(&self) -> (u32, u32) {
        match self.shape {
            MatrixShape::Generic { r, s } => (r, s),
            MatrixShape::Symmetric { r } | MatrixShape::Skew { r } => (r, r),
            MatrixShape::Hankel { j, c } => (j, c + 1 - j),
        }
    }
}

impl fmt::Display for DetIdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            MatrixShape::Generic { r, s } => write!(f, "I_{}(generic {r}x{s})", self.t),
            MatrixShape::Symmetric { r } => write!(f, "I_{}(symmetric {r}x{r})", self.t),
            MatrixShape::Skew { r } => write!(f, "P_{}(skew {r}x{r})", 2 * self.t),
            MatrixShape::Hankel { j, c } => write!(f, "I_{}(hankel W^{c}_{j})", self.t),
        }
    }
}

/// Minimal tuples `(a_t, .., a_top)` with `sum (j - base + 1) a_j >= n`.
pub fn symbolic_tuples(base: u32, top: u32, n: u32) -> Vec<Vec<u32>> {
    let weights: Vec<u32> = (base..=top).map(|j| j - base + 1).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; weights.len()];
    fn rec(k: usize, sum: u32, n: u32, w: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == w.len() {
            if sum >= n {
                // minimal: dropping any used index falls below n
                let minw = (0..w.len()).filter(|&i| cur[i] > 0).map(|i| w[i]).min().unwrap_or(0);
                if n == 0 && cur.iter().all(|&a| a == 0) || (minw > 0 && sum - minw < n) {
                    out.push(cur.clone());
                }
            }
            return;
        }
        let maxa = if sum >= n { 0 } else { (n - sum).div_ceil(w[k]) };
        for a in 0..=maxa {
            cur[k] = a;
            rec(k + 1, sum + a * w[k], n, w, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, 0, n, &weights, &mut cur, &mut out);
    out
}

/// A determinantal ideal together with its ring and cached minors.
pub struct DetFamily {
    spec: DetIdealSpec,
    ring: Ring,
    /// Matrix of the spec itself.
    matrix: Vec<Vec<Polynomial>>,
    /// Matrix whose ideals `I_j` form the family (the square-most Hankel).
    family: Vec<Vec<Polynomial>>,
    dets: Mutex<HashMap<(bool, u64, u64), Polynomial>>,
    pfs: Mutex<HashMap<u64, Polynomial>>,
    ideals: Mutex<HashMap<(u32, u32), Ideal>>,
}

impl fmt::Debug for DetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DetFamily({})", self.spec)
    }
}

fn hankel_matrix(ring: &Ring, rows: u32, c: u32) -> Vec<Vec<Polynomial>> {
    let cols = c + 1 - rows;
    (0..rows).map(|a| (0..cols).map(|b| Polynomial::var(ring, (a + b) as usize)).collect()).collect()
}

impl DetFamily {
    pub fn new(spec: DetIdealSpec, p: u64) -> Result<DetFamily> {
        spec.validate()?;
        let (names, order) = Self::variables(&spec);
        let n = names.len();
        let ring = RingContext::new(p, names, vec![1; n], order)?;
        let (matrix, family) = match spec.shape {
            MatrixShape::Generic { r, s } => {
                let m: Vec<Vec<Polynomial>> = (0..r)
                    .map(|i| (0..s).map(|j| Polynomial::var(&ring, (i * s + j) as usize)).collect())
                    .collect();
                (m.clone(), m)
            }
            MatrixShape::Symmetric { r } => {
                let mut pos = HashMap::new();
                let mut k = 0;
                for a in 0..r {
                    for b in a..r {
                        pos.insert((a, b), k);
                        k += 1;
                    }
                }
                let m: Vec<Vec<Polynomial>> = (0..r)
                    .map(|i| (0..r).map(|j| Polynomial::var(&ring, pos[&(i.min(j), i.max(j))])).collect())
                    .collect();
                (m.clone(), m)
            }
            MatrixShape::Skew { r } => {
                let mut pos = HashMap::new();
                let mut k = 0;
                for a in 0..r {
                    for b in a + 1..r {
                        pos.insert((a, b), k);
                        k += 1;
                    }
                }
                let m: Vec<Vec<Polynomial>> = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| match i.cmp(&j) {
                                std::cmp::Ordering::Less => Polynomial::var(&ring, pos[&(i, j)]),
                                std::cmp::Ordering::Greater => -&Polynomial::var(&ring, pos[&(j, i)]),
                                std::cmp::Ordering::Equal => Polynomial::zero(&ring),
                            })
                            .collect()
                    })
                    .collect();
                (m.clone(), m)
            }
            MatrixShape::Hankel { j, c } => (hankel_matrix(&ring, j, c), hankel_matrix(&ring, c.div_ceil(2), c)),
        };
        Ok(DetFamily {
            spec,
            ring,
            matrix,
            family,
            dets: Mutex::default(),
            pfs: Mutex::default(),
            ideals: Mutex::default(),
        })
    }

    /// Variable names and the lex order used for computations. This is the
    /// stated order except for Hankel matrices, where plain lex
    /// `w_1 > .. > w_c` is used (see [`stated_order`]).
    fn variables(spec: &DetIdealSpec) -> (Vec<String>, MonomialOrder) {
        let names = variable_names(&spec.shape);
        let order = match spec.shape {
            MatrixShape::Hankel { .. } => MonomialOrder::lex(names.len()),
            shape => stated_order(&shape),
        };
        (names, order)
    }

    pub fn spec(&self) -> &DetIdealSpec {
        &self.spec
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn p(&self) -> u32 {
        self.ring.p()
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    /// Determinant of the submatrix on 0-based `rows`, `cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        self.minor_of(false, rows, cols)
    }

    fn minor_of(&self, family: bool, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::one(&self.ring);
        }
        let key = (family, mask(rows), mask(cols));
        if let Some(f) = self.dets.lock().unwrap().get(&key) {
            return f.clone();
        }
        let m = if family { &self.family } else { &self.matrix };
        let r0 = rows[0];
        let mut acc = Polynomial::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let a = &m[r0][c];
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.minor_of(family, &rows[1..], &sub_cols);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        self.dets.lock().unwrap().insert(key, acc.clone());
        acc
    }

    /// Minor on 1-based inclusive row and column ranges.
    pub fn minor_range(&self, rows: (u32, u32), cols: (u32, u32)) -> Polynomial {
        let r: Vec<usize> = (rows.0..=rows.1).map(|i| i as usize - 1).collect();
        let c: Vec<usize> = (cols.0..=cols.1).map(|i| i as usize - 1).collect();
        self.minor(&r, &c)
    }

    /// Pfaffian of the principal skew submatrix on 0-based `idx` (sorted),
    /// expanded along the first index.
    pub fn pfaffian(&self, idx: &[usize]) -> Polynomial {
        assert!(matches!(self.spec.shape, MatrixShape::Skew { .. }), "Pfaffians need a skew matrix");
        if idx.is_empty() {
            return Polynomial::one(&self.ring);
        }
        if idx.len() % 2 == 1 {
            return Polynomial::zero(&self.ring);
        }
        let key = mask(idx);
        if let Some(f) = self.pfs.lock().unwrap().get(&key) {
            return f.clone();
        }
        let i0 = idx[0];
        let mut acc = Polynomial::zero(&self.ring);
        for k in 1..idx.len() {
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
            let term = &self.matrix[i0][idx[k]] * &self.pfaffian(&rest);
            // sign (-1)^(k+1) with 0-based k, i.e. (-1)^j for the 1-based column j = k + 1
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        self.pfs.lock().unwrap().insert(key, acc.clone());
        acc
    }

    /// Pfaffian on 1-based index list.
    pub fn pf1(&self, idx: &[u32]) -> Polynomial {
        let v: Vec<usize> = idx.iter().map(|&i| i as usize - 1).collect();
        self.pfaffian(&v)
    }

    /// Family ideal `I_j` (or `P_{2j}`); `j = 0` is the unit ideal.
    pub fn family_ideal(&self, j: u32) -> Ideal {
        if let Some(i) = self.ideals.lock().unwrap().get(&(j, 1)) {
            return i.clone();
        }
        let gens = self.family_generators(j);
        let id = Ideal::new(&self.ring, gens).unwrap();
        self.ideals.lock().unwrap().insert((j, 1), id.clone());
        id
    }

    fn family_generators(&self, j: u32) -> Vec<Polynomial> {
        let j = j as usize;
        if j == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        match self.spec.shape {
            MatrixShape::Skew { r } => subsets(r as usize, 2 * j).iter().map(|s| self.pfaffian(s)).collect(),
            _ => {
                let rows = self.family.len();
                let cols = self.family[0].len();
                let mut out = Vec::new();
                for rs in subsets(rows, j) {
                    for cs in subsets(cols, j) {
                        out.push(self.minor_of(true, &rs, &cs));
                    }
                }
                out
            }
        }
    }

    /// `I_t` of the spec's own matrix.
    pub fn ideal(&self) -> Ideal {
        if let MatrixShape::Hankel { .. } = self.spec.shape {
            let t = self.spec.t as usize;
            let rows = self.matrix.len();
            let cols = self.matrix[0].len();
            let mut gens = Vec::new();
            for rs in subsets(rows, t) {
                for cs in subsets(cols, t) {
                    gens.push(self.minor(&rs, &cs));
                }
            }
            return Ideal::new(&self.ring, gens).unwrap();
        }
        self.family_ideal(self.spec.t)
    }

    /// `I_u^(n)` from the generators of the symbolic Rees algebra of `I_u`.
    pub fn symbolic_power_at(&self, base: u32, n: u32) -> Ideal {
        let key = (base, 1000 + n);
        if let Some(i) = self.ideals.lock().unwrap().get(&key) {
            return i.clone();
        }
        let top = self.spec.top();
        let mut gens = Vec::new();
        for tuple in symbolic_tuples(base, top, n) {
            let parts: Vec<(Vec<Polynomial>, u32)> = tuple
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| (self.family_ideal(base + k as u32).gens().to_vec(), a))
                .collect();
            gens.extend(product_of_powers(&self.ring, &parts).gens().iter().cloned());
        }
        if n == 0 {
            gens.push(Polynomial::one(&self.ring));
        }
        let id = Ideal::new(&self.ring, gens).unwrap();
        self.ideals.lock().unwrap().insert(key, id.clone());
        id
    }

    /// `I^(n)` of the spec's ideal.
    pub fn symbolic_power(&self, n: u32) -> Ideal {
        self.symbolic_power_at(self.spec.t, n)
    }

    /// The top-left `(t-1)`-minor (or `(2t-2)`-Pfaffian): outside `I` and in
    /// every larger prime of the family.
    pub fn delta(&self) -> Polynomial {
        let k = self.spec.t - 1;
        match self.spec.shape {
            MatrixShape::Skew { .. } => self.pf1(&(1..=2 * k).collect::<Vec<_>>()),
            _ if k == 0 => Polynomial::one(&self.ring),
            _ => self.minor_range((1, k), (1, k)),
        }
    }

    /// `I^n : delta^∞`, an independent route to `I^(n)`.
    pub fn symbolic_power_oracle(&self, n: u32) -> Result<Ideal> {
        let pw = self.ideal().power(n);
        if self.spec.t == 1 {
            return Ok(pw);
        }
        pw.saturate(&self.delta())
    }

    /// `I^n` as the intersection of `I_l^((t - l + 1) n)` over `l = 1..t`.
    pub fn ordinary_power_intersection(&self, n: u32) -> Result<Ideal> {
        let t = self.spec.t;
        let mut acc = self.symbolic_power_at(t, n);
        for l in (2..t).rev() {
            acc = acc.intersect(&self.symbolic_power_at(l, (t - l + 1) * n))?;
        }
        if t >= 2 {
            acc = acc.truncate(t * n)?;
        }
        Ok(acc)
    }

    /// Witness polynomial `f_u` (`f_{2u}` for Pfaffians). Hankel matrices have a
    /// single witness, chosen by the parity of `c`.
    pub fn witness(&self, u: u32) -> Result<Polynomial> {
        let one = Polynomial::one(&self.ring);
        match self.spec.shape {
            MatrixShape::Generic { r, s } => {
                if u == 0 || u > r {
                    return Err(Error::InvalidSpec(format!("witness index {u} outside 1..={r}")));
                }
                let mut f = one;
                for l in u..r {
                    f = &f * &self.minor_range((r - l + 1, r), (1, l));
                    f = &f * &self.minor_range((1, l), (s - l + 1, s));
                }
                // maximal minors on consecutive column windows
                for l in 1..=s - r + 1 {
                    f = &f * &self.minor_range((1, r), (l, r + l - 1));
                }
                Ok(f)
            }
            MatrixShape::Symmetric { r } => {
                if u == 0 || u > r {
                    return Err(Error::InvalidSpec(format!("witness index {u} outside 1..={r}")));
                }
                let mut f = one;
                for l in u..=r {
                    f = &f * &self.minor_range((1, l), (r - l + 1, r));
                }
                Ok(f)
            }
            MatrixShape::Skew { r } => {
                let b = r / 2;
                if u == 0 || u > b {
                    return Err(Error::InvalidSpec(format!("witness index {u} outside 1..={b}")));
                }
                let range = |a: u32, z: u32| (a..=z).collect::<Vec<u32>>();
                let mut f = one;
                for l in u..b {
                    f = &f * &self.pf1(&range(1, 2 * l));
                    f = &f * &self.pf1(&[range(1, l), range(l + 2, 2 * l + 1)].concat());
                    f = &f * &self.pf1(&range(r + 1 - 2 * l, r));
                    f = &f * &self.pf1(&[range(r - 2 * l, r - l - 1), range(r - l + 1, r)].concat());
                }
                if r % 2 == 1 {
                    f = &f * &self.pf1(&range(1, r - 1));
                    f = &f * &self.pf1(&range(2, r));
                    f = &f * &self.pf1(&[range(1, b), range(b + 2, r)].concat());
                } else {
                    f = &f * &self.pf1(&range(1, r));
                }
                Ok(f)
            }
            MatrixShape::Hankel { c, .. } => {
                let w = if c % 2 == 1 { c.div_ceil(2) } else { c / 2 };
                let sq = hankel_matrix(&self.ring, w, c);
                let det = |rows: (usize, usize), cols: (usize, usize)| {
                    let m: Vec<Vec<Polynomial>> =
                        (rows.0..rows.1).map(|i| (cols.0..cols.1).map(|j| sq[i][j].clone()).collect()).collect();
                    det_plain(&m, &self.ring)
                };
                let w = w as usize;
                if c % 2 == 1 {
                    Ok(&det((0, w), (0, w)) * &det((1, w), (0, w - 1)))
                } else {
                    Ok(&det((0, w), (0, w)) * &det((0, w), (1, w + 1)))
                }
            }
        }
    }

    /// The witness used for the spec's own `t` by the symbolic criteria.
    pub fn witness_t(&self) -> Result<Polynomial> {
        self.witness(self.spec.t)
    }

    /// The witness of the Rees algebra criterion: `f_1` (`f_2` for Pfaffians).
    pub fn rees_witness(&self) -> Result<Polynomial> {
        self.witness(1)
    }

    /// Leading monomial in the family's diagonal order.
    pub fn initial(&self, f: &Polynomial) -> Monomial {
        f.in_ring(&self.ring).unwrap().leading_monomial().cloned().unwrap_or_else(|| Monomial::one(self.ring.nvars()))
    }
}

/// Variable names: `x{i}_{j}`, `y{i}_{j}` (`i <= j`), `z{i}_{j}` (`i < j`), `w{i}`.
pub fn variable_names(shape: &MatrixShape) -> Vec<String> {
    match *shape {
        MatrixShape::Generic { r, s } => (1..=r).flat_map(|i| (1..=s).map(move |j| format!("x{i}_{j}"))).collect(),
        MatrixShape::Symmetric { r } => (1..=r).flat_map(|i| (i..=r).map(move |j| format!("y{i}_{j}"))).collect(),
        MatrixShape::Skew { r } => (1..=r).flat_map(|i| (i + 1..=r).map(move |j| format!("z{i}_{j}"))).collect(),
        MatrixShape::Hankel { c, .. } => (1..=c).map(|i| format!("w{i}")).collect(),
    }
}

/// The lex orders attached to each family: row-major for generic and
/// symmetric matrices, `z_{1,r} > z_{1,r-1} > .. > z_{1,2} > z_{2,r} > ..` for
/// skew matrices, and `w_1 > w_3 > .. > w_2 > w_4 > ..` for Hankel matrices.
///
/// The Hankel order does not make 2-minors such as `w_2 w_4 - w_3^2` lead with
/// a square-free term once `c >= 4`, so [`DetFamily`] computes with plain lex
/// instead.
pub fn stated_order(shape: &MatrixShape) -> MonomialOrder {
    let names = variable_names(shape);
    match *shape {
        MatrixShape::Generic { .. } | MatrixShape::Symmetric { .. } => MonomialOrder::lex(names.len()),
        MatrixShape::Skew { r } => {
            let mut perm = Vec::new();
            for i in 1..=r {
                for j in (i + 1..=r).rev() {
                    perm.push(names.iter().position(|v| *v == format!("z{i}_{j}")).unwrap());
                }
            }
            MonomialOrder::Lex(perm)
        }
        MatrixShape::Hankel { c, .. } => {
            MonomialOrder::Lex((0..c as usize).step_by(2).chain((1..c as usize).step_by(2)).collect())
        }
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | 1 << i)
}

/// All `k`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by first-row expansion; fine for small matrices.
pub fn det_plain(m: &[Vec<Polynomial>], ring: &Ring) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][c] * &det_plain(&sub, ring);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
