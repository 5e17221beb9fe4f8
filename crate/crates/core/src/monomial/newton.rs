use serde::Serialize;

use super::valuation::threshold_ideal;
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{Exp, Monomial};

/// Supporting inequality `normal . x >= rhs` of a Newton polyhedron, with a
/// primitive nonnegative integer normal and `rhs > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Facet {
    pub normal: Vec<u32>,
    pub rhs: u32,
}

pub const MAX_NEWTON_DIM: usize = 6;

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // Bareiss fraction-free elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Non-coordinate facets of `conv(exponents) + R^d_{>=0}`, found by brute force
/// over hyperplanes spanned by generator points and coordinate rays.
pub fn newton_facets(ideal: &MonomialIdeal) -> Result<Vec<Facet>> {
    let d = ideal.nvars();
    if d > MAX_NEWTON_DIM {
        return Err(Error::Unsupported(format!("Newton polyhedra need at most {MAX_NEWTON_DIM} variables")));
    }
    let pts: Vec<Vec<i128>> = ideal.gens().iter().map(|g| g.exps().iter().map(|&e| e as i128).collect()).collect();
    let mut out: Vec<Facet> = Vec::new();
    for k in 1..=d.min(pts.len()) {
        for ps in subsets(pts.len(), k) {
            for rays in subsets(d, d - k) {
                // rows: a . (p_i - p_0) = 0 and a_j = 0 for chosen rays
                let mut rows: Vec<Vec<i128>> = Vec::new();
                for &i in &ps[1..] {
                    rows.push((0..d).map(|j| pts[i][j] - pts[ps[0]][j]).collect());
                }
                for &j in &rays {
                    let mut r = vec![0; d];
                    r[j] = 1;
                    rows.push(r);
                }
                // generalized cross product gives the normal
                let mut a: Vec<i128> = (0..d)
                    .map(|c| {
                        let minor: Vec<Vec<i128>> =
                            rows.iter().map(|r| (0..d).filter(|&j| j != c).map(|j| r[j]).collect()).collect();
                        let s = if c % 2 == 0 { 1 } else { -1 };
                        s * det(minor)
                    })
                    .collect();
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                if a.iter().all(|&x| x <= 0) {
                    a.iter_mut().for_each(|x| *x = -*x);
                }
                if a.iter().any(|&x| x < 0) {
                    continue;
                }
                let g = a.iter().fold(0, |g, &x| gcd(g, x));
                a.iter_mut().for_each(|x| *x /= g);
                let b: i128 = (0..d).map(|j| a[j] * pts[ps[0]][j]).sum();
                if b <= 0 {
                    continue;
                }
                let valid = pts.iter().all(|q| (0..d).map(|j| a[j] * q[j]).sum::<i128>() >= b);
                if valid {
                    let f = Facet { normal: a.iter().map(|&x| x as u32).collect(), rhs: b as u32 };
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
        }
    }
    // drop inequalities implied by the others (supporting but not facets)
    let mut facets = Vec::new();
    for f in &out {
        if is_facet(f, &pts, d) {
            facets.push(f.clone());
        }
    }
    facets.sort();
    Ok(facets)
}

/// A supporting hyperplane is a facet when the points and rays on it span
/// a (d-1)-dimensional affine space.
fn is_facet(f: &Facet, pts: &[Vec<i128>], d: usize) -> bool {
    let on: Vec<&Vec<i128>> =
        pts.iter().filter(|q| (0..d).map(|j| f.normal[j] as i128 * q[j]).sum::<i128>() == f.rhs as i128).collect();
    let mut rows: Vec<Vec<i128>> = on[1..].iter().map(|q| (0..d).map(|j| q[j] - on[0][j]).collect()).collect();
    for j in 0..d {
        if f.normal[j] == 0 {
            let mut r = vec![0; d];
            r[j] = 1;
            rows.push(r);
        }
    }
    rank(rows, d) == d - 1
}

fn rank(mut m: Vec<Vec<i128>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// Integral closure: lattice points of the Newton polyhedron. Minimal
/// generators never exceed the largest exponent of a generator.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = ideal.nvars();
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let facets = newton_facets(ideal)?;
    let caps: Vec<u32> = (0..d).map(|j| ideal.gens().iter().map(|g| g.exps()[j] as u32).max().unwrap()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    loop {
        let ok = facets.iter().all(|f| (0..d).map(|j| f.normal[j] * cur[j]).sum::<u32>() >= f.rhs);
        if ok {
            out.push(Monomial::from_exps(&cur.iter().map(|&e| e as Exp).collect::<Vec<_>>()));
        }
        // odometer
        let mut j = 0;
        loop {
            if j == d {
                return Ok(MonomialIdeal::new(d, out));
            }
            if cur[j] < caps[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

/// Least common multiple of the facet values; normalising each facet
/// valuation by it makes the closure of `I^n` the level `n * u` ideal.
pub fn rees_denominator(ideal: &MonomialIdeal) -> Result<u32> {
    let facets = newton_facets(ideal)?;
    Ok(facets.iter().fold(1u32, |acc, f| lcm(acc, f.rhs)))
}

fn lcm(a: u32, b: u32) -> u32 {
    let g = gcd(a as i128, b as i128) as u32;
    a / g * b
}

/// Level `n` of the filtration given by the facet valuations scaled by
/// `u / rhs`: monomials with `u * (normal . m) >= n * rhs` on every facet.
pub fn rational_power(ideal: &MonomialIdeal, n: u32, u: u32) -> Result<MonomialIdeal> {
    if u == 0 {
        return Err(Error::InvalidSpec("rational power denominator must be positive".into()));
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let facets = newton_facets(ideal)?;
    let vals: Vec<Vec<u32>> = facets.iter().map(|f| f.normal.clone()).collect();
    let thresholds: Vec<u32> = facets.iter().map(|f| (n as u64 * f.rhs as u64).div_ceil(u as u64) as u32).collect();
    Ok(threshold_ideal(ideal.nvars(), &vals, &thresholds))
}
