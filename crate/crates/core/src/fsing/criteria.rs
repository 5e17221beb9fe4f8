//! Colon-ideal criteria for F-purity of `R/I` and of the symbolic filtration.

use rayon::prelude::*;
use serde_json::json;

use super::family::family_verdict;
use super::{need_height, timed, Outcome, SymbolicProvider, Verdict};
use crate::error::Result;
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial};

fn describe(i: &Ideal) -> String {
    format!("ideal with {} generators in {} variables", i.gens().len(), i.ring().nvars())
}

fn provider_verdict(criterion: &str, s: &SymbolicProvider) -> Verdict {
    match s.family() {
        Some(f) => family_verdict(criterion, f),
        None => Verdict::new(criterion, describe(s.ideal()), s.ring().p()),
    }
}

/// Index of the first `h` in `hs` with `g h` outside `J^[p]`, if any.
pub fn colon_contains(j: &Ideal, p: u32, g: &Polynomial, hs: &[Polynomial]) -> Result<Option<usize>> {
    if hs.is_empty() {
        return Ok(None);
    }
    let homogeneous = j.is_homogeneous() && g.is_homogeneous() && hs.iter().all(|h| h.is_homogeneous());
    if homogeneous && !j.gens().is_empty() {
        let maxd = hs.iter().map(|h| (g.degree() + h.degree()) / p).max().unwrap_or(0);
        let gb = j.basis_for_degree(maxd)?;
        let ring = gb.ring().clone();
        let g = g.in_ring(&ring)?;
        let hs: Vec<Polynomial> = hs.iter().map(|h| h.in_ring(&ring)).collect::<Result<_>>()?;
        return Ok(hs.par_iter().position_first(|h| {
            (&g * h).frobenius_components(p).iter().any(|c| !gb.reduces_to_zero(c))
        }));
    }
    for (k, h) in hs.iter().enumerate() {
        if !j.frobenius_contains(&(g * h), p)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Fedder: `R/I` is F-pure iff `I^[p] : I` is not inside `m^[p]`.
pub fn fedder_fpure(i: &Ideal) -> Result<Verdict> {
    let p = i.ring().p();
    timed(Verdict::new("fedder", describe(i), p), |v| {
        let colon = i.frobenius_power(1)?.quotient(i)?;
        match colon.generator_outside_frobenius_max(p) {
            Some(g) => {
                v.set(Outcome::Holds).witness(g);
            }
            None => {
                v.set(Outcome::Fails);
                v.colon_data = Some(json!({ "colon_generators": colon.gens().len(), "inside_frobenius_maximal": true }));
            }
        }
        Ok(())
    })
}

/// Test `∩_n (I^(a_n))^[p] : I^(b_n)` against `m^[p]` for triples `(n, a_n, b_n)`.
fn colon_test(v: &mut Verdict, s: &SymbolicProvider, triples: &[(u32, u32, u32)]) -> Result<()> {
    let p = s.ring().p();
    let nv = s.ring().nvars();

    if s.monomial().is_some() {
        // monomial colons escape m^[p] exactly when they contain (x_1..x_d)^{p-1}
        for &(n, a, b) in triples {
            let small = s.monomial_power(a).unwrap();
            let big = s.monomial_power(b).unwrap();
            if let Some(g) = big.gens().iter().find(|g| !small.contains(&g.ceil_root(p))) {
                v.set(Outcome::Fails);
                v.colon_data = Some(json!({ "n": n, "generator": s.ring().format_monomial(g) }));
                return Ok(());
            }
        }
        let all = Monomial::from_exps(&vec![(p - 1) as u16; nv]);
        v.set(Outcome::Holds).witness(&Polynomial::monomial(s.ring(), all, 1));
        return Ok(());
    }

    'cand: for g in s.candidates(p) {
        if !g.outside_frobenius_max(p) {
            continue;
        }
        for &(_, a, b) in triples {
            let j = s.power(a)?;
            let k = s.power(b)?;
            if colon_contains(&j, p, &g, k.gens())?.is_some() {
                continue 'cand;
            }
        }
        v.set(Outcome::Holds).witness(&g);
        v.note("certificate multiplies every generator into the Frobenius power");
        return Ok(());
    }

    let mut colons = Vec::new();
    for &(n, a, b) in triples {
        let c = s.power(a)?.frobenius_power(1)?.quotient(&s.power(b)?)?;
        if c.inside_frobenius_max(p) {
            v.set(Outcome::Fails);
            v.colon_data = Some(json!({
                "n": n,
                "colon_generators": c.gens().len(),
                "inside_frobenius_maximal": true,
            }));
            return Ok(());
        }
        colons.push(c);
    }
    for g in colons[0].gens() {
        if !g.outside_frobenius_max(p) {
            continue;
        }
        let mut all = true;
        for c in &colons[1..] {
            if !c.contains(g)? {
                all = false;
                break;
            }
        }
        if all {
            v.set(Outcome::Holds).witness(g);
            return Ok(());
        }
    }
    let mut acc = colons[0].clone();
    for c in &colons[1..] {
        acc = acc.intersect(c)?;
    }
    match acc.generator_outside_frobenius_max(p) {
        Some(g) => {
            v.set(Outcome::Holds).witness(g);
        }
        None => {
            v.set(Outcome::Fails);
            v.colon_data = Some(json!({ "intersection_generators": acc.gens().len(), "inside_frobenius_maximal": true }));
        }
    }
    Ok(())
}

/// Symbolic F-purity: the intersection of `(I^(n+1))^[p] : I^(np+1)` over
/// `n <= max(0, H - 1 - δ)` escapes `m^[p]`, where `δ = 1` if `p <= H`.
pub fn symbolic_fpure(s: &SymbolicProvider, big_height: Option<u32>) -> Result<Verdict> {
    let h = need_height(big_height.or(s.big_height()))?;
    let p = s.ring().p();
    let delta = u32::from(p <= h);
    let nmax = (h as i64 - 1 - delta as i64).max(0) as u32;
    let mut v = symbolic_fpure_range(s, nmax)?;
    v.colon_data.get_or_insert_with(|| json!({})).as_object_mut().unwrap().insert("big_height".into(), h.into());
    Ok(v)
}

/// The colon-intersection test over `n = 0..=nmax`.
pub fn symbolic_fpure_range(s: &SymbolicProvider, nmax: u32) -> Result<Verdict> {
    let p = s.ring().p();
    let triples: Vec<_> = (0..=nmax).map(|n| (n, n + 1, n * p + 1)).collect();
    timed(provider_verdict("symbolic-fpure", s), |v| {
        v.note(format!("colons checked for n = 0..={nmax}"));
        colon_test(v, s, &triples)
    })
}

/// Sufficient test: `I^(H(p-1))` is not inside `m^[p]`. A failure is
/// inconclusive.
pub fn corh_sufficient(s: &SymbolicProvider, big_height: Option<u32>) -> Result<Verdict> {
    let h = need_height(big_height.or(s.big_height()))?;
    let p = s.ring().p();
    timed(provider_verdict("corh", s), |v| {
        if let Some(f) = s.witness() {
            let g = f.pow(p - 1);
            if g.outside_frobenius_max(p) && s.power(h)?.contains(f)? {
                v.set(Outcome::Holds).witness(&g);
                v.note(format!("witness lies in I^({h}), so its (p-1)-th power lies in I^({})", h * (p - 1)));
                return Ok(());
            }
        }
        let big = s.power(h * (p - 1))?;
        match big.generator_outside_frobenius_max(p) {
            Some(g) => {
                v.set(Outcome::Holds).witness(g);
            }
            None => {
                v.set(Outcome::Fails).note("inconclusive: the criterion is only sufficient");
            }
        }
        Ok(())
    })
}

/// Sufficient test for F-purity of the symbolic Rees algebra: the
/// intersection of `(I^(n+1))^[p] : I^((n+1)p)` over `n <= H - 2 - δ'`
/// (`δ' = 1` if `p <= H - 1`) escapes `m^[p]`, or `I^((H-1)(p-1))` does.
pub fn symbolic_rees_fpure_sufficient(s: &SymbolicProvider, big_height: Option<u32>) -> Result<Verdict> {
    let h = need_height(big_height.or(s.big_height()))?;
    let p = s.ring().p();
    timed(provider_verdict("symbolic-rees-fpure", s), |v| {
        let dp = u32::from(h >= 1 && p < h);
        if h < 2 + dp {
            v.set(Outcome::Holds).witness(&Polynomial::one(s.ring()));
            v.note("empty intersection");
            return Ok(());
        }
        let nmax = h - 2 - dp;
        let k = (h - 1) * (p - 1);
        if let Some(f) = s.witness() {
            let g = f.pow(p - 1);
            if g.outside_frobenius_max(p) && s.power(h - 1)?.contains(f)? {
                v.set(Outcome::Holds).witness(&g);
                v.note(format!("shortcut: I^({k}) is not inside m^[p]"));
                return Ok(());
            }
        }
        if let Some(g) = s.power(k)?.generator_outside_frobenius_max(p) {
            v.set(Outcome::Holds).witness(g);
            v.note(format!("shortcut: I^({k}) is not inside m^[p]"));
            return Ok(());
        }
        let triples: Vec<_> = (0..=nmax).map(|n| (n, n + 1, (n + 1) * p)).collect();
        colon_test(v, s, &triples)?;
        if v.verdict == Outcome::Fails {
            v.note("inconclusive: the criterion is only sufficient");
        }
        Ok(())
    })
}

/// Finite test for `I^n = I^(n)` for all `n`: under symbolic F-purity it
/// suffices to check `n <= ceil(μ(p-1)/p)`.
pub fn compare_powers(s: &SymbolicProvider) -> Result<Verdict> {
    let p = s.ring().p();
    timed(provider_verdict("compare-powers", s), |v| {
        let mu = s.ideal().mu()? as u32;
        let bound = (mu * (p - 1)).div_ceil(p);
        v.colon_data = Some(json!({ "mu": mu, "bound": bound }));
        v.note("assumes the ideal is symbolic F-pure");
        for n in 2..=bound {
            let sym = s.power(n)?;
            let ord = s.ideal().power(n);
            if let Some(g) = ord.first_non_member(sym.gens())? {
                v.set(Outcome::Fails).witness(g);
                v.params.n = Some(n);
                return Ok(());
            }
        }
        v.set(Outcome::Holds);
        Ok(())
    })
}
