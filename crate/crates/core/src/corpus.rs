//! Built-in instances and the reproduction corpus.
//!
//! Each corpus item runs a fixed batch of computations and records one
//! check per claim, so a report shows exactly which claim failed.

use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blowup::{degree_bound, symbolic_alpha, waldschmidt_estimate, BlowupAlgebra, Grading, Ratio, ReesPresentation};
use crate::determinantal::{stated_order, subsets, DetFamily, DetIdealSpec};
use crate::error::{Error, Result};
use crate::fsing::{
    characteristic_ok, compare_powers, corh_sufficient, fedder_fpure, initial_symbolic_equality, rees_fpure_witness,
    symbolic_fpure, Outcome, SymbolicProvider,
};
use crate::groebner::Ideal;
use crate::homology::{depth_comparison_pairs, depth_reg_sequences, free_resolution};
use crate::monomial::{integral_closure, monomial_filtration_fpure_check, rational_power, rees_denominator, MonomialIdeal, ValuationFiltration};
use crate::poly::{field, parse_ideal, Monomial, MonomialOrder, Polynomial, Ring, RingContext};

/// A named ideal shipped with the library, with its big height.
pub struct BuiltinIdeal {
    pub ideal: Ideal,
    pub big_height: u32,
}

pub const BUILTIN_NAMES: &[&str] = &["example-5.10", "triangle"];

/// `example-5.10`: 2-minors of `[[a^2, b, d], [c, a^2, b - d]]` with `a` of
/// degree 1 and `b, c, d` of degree 2. `triangle`: the edge ideal of a
/// triangle. `p` defaults to 3 and 2 respectively.
pub fn builtin_ideal(name: &str, p: Option<u64>) -> Result<BuiltinIdeal> {
    let (src, h) = match name {
        "example-5.10" => (
            format!(
                "ring p={} vars a,b:2,c:2,d:2; order grevlex;\n a^4 - b*c, a^2*(b - d) - c*d, b*(b - d) - d*a^2",
                p.unwrap_or(3)
            ),
            2,
        ),
        "triangle" => (format!("ring p={} vars x,y,z; order grevlex; x*y, y*z, x*z", p.unwrap_or(2)), 2),
        _ => return Err(Error::InvalidSpec(format!("unknown built-in ideal `{name}`"))),
    };
    let (ring, gens) = parse_ideal(&src)?;
    Ok(BuiltinIdeal { ideal: Ideal::new(&ring, gens)?, big_height: h })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub passed: bool,
    pub records: Vec<Record>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {:<26} {} ({} ms)\n", r.id, r.title, r.elapsed_ms));
            for c in r.checks.iter().filter(|c| !c.passed) {
                out.push_str(&format!("     failed: {} {}\n", c.name, c.detail));
            }
        }
        let n = self.records.iter().filter(|r| r.passed).count();
        out.push_str(&format!("{n}/{} items passed in {} ms\n", self.records.len(), self.elapsed_ms));
        out
    }
}

type Item = fn(&mut Vec<Check>) -> Result<()>;

/// `(id, title, body)` for every corpus item, in report order.
pub const ITEMS: &[(&str, &str, Item)] = &[
    ("ex5.10", "2-minors of a weighted 2x3 matrix: F-pure, not symbolic F-pure", ex_5_10),
    ("symbolic-fpure-families", "symbolic F-purity of the four families", families),
    ("compare-powers", "symbolic versus ordinary powers, both outcomes", compare),
    ("initial-equality", "initial ideals of symbolic powers", initial_equality),
    ("rees-witnesses", "Rees algebra splitting witnesses up to N = 2", rees_witnesses),
    ("waldschmidt", "initial degrees of symbolic powers", waldschmidt),
    ("degree-bounds", "defining equations of Rees algebras within bounds", degree_bounds),
    ("depth-reg", "depth and regularity of symbolic powers", depth_reg),
    ("properties", "randomized invariants and Pfaffian identities", properties),
    ("monomial", "square-free, valuation and rational-power filtrations", monomial),
];

pub fn item_ids() -> Vec<&'static str> {
    ITEMS.iter().map(|(id, _, _)| *id).collect()
}

/// Run one item; errors become a failed check rather than aborting.
pub fn run_item(id: &str) -> Result<Record> {
    let &(id, title, body) = ITEMS
        .iter()
        .find(|(i, _, _)| *i == id)
        .ok_or_else(|| Error::InvalidSpec(format!("unknown corpus item `{id}`")))?;
    let start = Instant::now();
    let mut checks = Vec::new();
    if let Err(e) = body(&mut checks) {
        let status = if e.is_budget() { "budget-exceeded" } else { "error" };
        checks.push(Check { name: status.into(), passed: false, detail: json!(e.to_string()) });
    }
    let passed = !checks.is_empty() && checks.iter().all(|c| c.passed);
    Ok(Record { id: id.into(), title: title.into(), passed, checks, elapsed_ms: start.elapsed().as_millis() as u64 })
}

/// Run the selected items (all when `only` is empty) in parallel.
pub fn run(only: &[String]) -> Result<Report> {
    for id in only {
        if !ITEMS.iter().any(|(i, _, _)| i == id) {
            return Err(Error::InvalidSpec(format!("unknown corpus item `{id}`; known: {}", item_ids().join(", "))));
        }
    }
    let start = Instant::now();
    let ids: Vec<&str> = item_ids().into_iter().filter(|id| only.is_empty() || only.iter().any(|o| o == id)).collect();
    let records = ids.par_iter().map(|id| run_item(id)).collect::<Result<Vec<_>>>()?;
    let passed = records.iter().all(|r| r.passed);
    Ok(Report { passed, records, elapsed_ms: start.elapsed().as_millis() as u64 })
}

fn check(out: &mut Vec<Check>, name: impl Into<String>, passed: bool, detail: Value) {
    out.push(Check { name: name.into(), passed, detail });
}

fn family(spec: DetIdealSpec, p: u64) -> Result<Arc<DetFamily>> {
    Ok(Arc::new(DetFamily::new(spec, p)?))
}

fn ex_5_10(out: &mut Vec<Check>) -> Result<()> {
    let b = builtin_ideal("example-5.10", Some(3))?;
    let f = fedder_fpure(&b.ideal)?;
    check(out, "fedder holds", f.holds(), json!(f.summary()));
    let s = SymbolicProvider::ordinary(b.ideal, Some(b.big_height));
    let v = symbolic_fpure(&s, None)?;
    let at_one = v.colon_data.as_ref().is_some_and(|d| d["n"] == 1);
    check(out, "(I^2)^[3] : I^4 inside m^[3]", at_one, v.colon_data.clone().unwrap_or(Value::Null));
    check(out, "symbolic F-purity fails", v.verdict == Outcome::Fails, json!(v.summary()));
    Ok(())
}

fn families(out: &mut Vec<Check>) -> Result<()> {
    let cases = [
        (DetIdealSpec::generic(3, 3, 2), 2),
        (DetIdealSpec::generic(3, 3, 2), 3),
        (DetIdealSpec::symmetric(3, 2), 2),
        (DetIdealSpec::pfaffian(5, 2), 2),
        (DetIdealSpec::pfaffian(5, 2), 3),
        (DetIdealSpec::hankel(5, 2), 2),
    ];
    let results: Vec<Result<Vec<Check>>> = cases
        .par_iter()
        .map(|&(spec, p)| {
            let s = SymbolicProvider::determinantal(family(spec, p)?)?;
            let v = symbolic_fpure(&s, None)?;
            let c = corh_sufficient(&s, None)?;
            Ok(vec![
                Check { name: format!("symbolic-fpure {spec} p={p}"), passed: v.holds(), detail: json!(v.summary()) },
                Check {
                    name: format!("corh {spec} p={p}"),
                    passed: c.holds() && c.witness.is_some(),
                    detail: json!(c.summary()),
                },
            ])
        })
        .collect();
    for r in results {
        out.extend(r?);
    }
    Ok(())
}

fn compare(out: &mut Vec<Check>) -> Result<()> {
    let s = SymbolicProvider::determinantal(family(DetIdealSpec::generic(2, 3, 2), 2)?)?;
    let v = compare_powers(&s)?;
    check(out, "maximal minors: I^n = I^(n) for all n", v.holds(), json!(v.summary()));
    let fam = family(DetIdealSpec::generic(3, 3, 2), 2)?;
    let det = fam.minor_range((1, 3), (1, 3)).monic();
    let s = SymbolicProvider::determinantal(fam)?;
    let v = compare_powers(&s)?;
    let ok = v.verdict == Outcome::Fails && v.params.n == Some(2) && v.witness.as_deref() == Some(&det.to_string());
    check(out, "2-minors of 3x3: fails at n = 2 with det(X)", ok, json!(v.summary()));
    Ok(())
}

fn initial_equality(out: &mut Vec<Check>) -> Result<()> {
    let specs = [DetIdealSpec::generic(3, 3, 2), DetIdealSpec::pfaffian(5, 2), DetIdealSpec::hankel(5, 2)];
    let results: Vec<Result<Vec<Check>>> = specs
        .par_iter()
        .map(|&spec| {
            let fam = DetFamily::new(spec, 5)?;
            let mut cs = Vec::new();
            let order = fam.ring().order().clone();
            let in_i = fam.ideal().initial_ideal(&order)?;
            let literal = fam.ideal().initial_ideal(&stated_order(&spec.shape))?.is_squarefree();
            cs.push(Check {
                name: format!("in(I) square-free {spec}"),
                passed: in_i.is_squarefree(),
                detail: json!({ "order": fam.ring().to_string(), "square_free_in_stated_order": literal }),
            });
            for n in 2..=3 {
                let v = initial_symbolic_equality(&fam, n, false)?;
                cs.push(Check { name: format!("in(I^({n})) = in(I)^({n}) {spec}"), passed: v.holds(), detail: json!(v.summary()) });
            }
            Ok(cs)
        })
        .collect();
    for r in results {
        out.extend(r?);
    }
    Ok(())
}

/// Smallest prime meeting the family's characteristic hypothesis.
pub fn smallest_admissible_prime(spec: DetIdealSpec, initial: bool) -> Result<u64> {
    let mut p = 2;
    loop {
        if field::is_prime(p) && characteristic_ok(&DetFamily::new(spec, p)?, initial) {
            return Ok(p);
        }
        p += 1;
    }
}

fn rees_witnesses(out: &mut Vec<Check>) -> Result<()> {
    let specs =
        [DetIdealSpec::generic(3, 3, 2), DetIdealSpec::symmetric(3, 2), DetIdealSpec::pfaffian(5, 2), DetIdealSpec::hankel(5, 2)];
    let results: Vec<Result<Check>> = specs
        .par_iter()
        .map(|&spec| {
            let p = smallest_admissible_prime(spec, false)?;
            let v = rees_fpure_witness(&DetFamily::new(spec, p)?, 2)?;
            Ok(Check { name: format!("{spec} p={p}"), passed: v.verdict == Outcome::VerifiedUpTo(2), detail: json!(v.summary()) })
        })
        .collect();
    for r in results {
        out.push(r?);
    }
    Ok(())
}

fn waldschmidt(out: &mut Vec<Check>) -> Result<()> {
    let spec = DetIdealSpec::generic(3, 3, 2);
    let w = waldschmidt_estimate(&spec, 6)?;
    let expect: Vec<u32> = (1..=6u32).map(|n| (3 * n).div_ceil(2)).collect();
    check(out, "alpha(I^(n)) = ceil(3n/2), n <= 6", w.alpha == expect, json!(w.alpha));
    check(out, "limit 3/2", w.limit == Ratio::new(3, 2), json!(w.limit.to_string()));
    let fam = DetFamily::new(spec, 2)?;
    for n in 1..=3 {
        let gens = fam.symbolic_power(n).minimal_generators()?;
        let alpha = gens.iter().map(Polynomial::degree).min();
        check(out, format!("Gröbner minimal generators agree at n = {n}"), alpha == Some(symbolic_alpha(&spec, n)), json!(alpha));
    }
    Ok(())
}

fn degree_bounds(out: &mut Vec<Check>) -> Result<()> {
    let specs = [DetIdealSpec::generic(1, 2, 1), DetIdealSpec::generic(2, 3, 2), DetIdealSpec::hankel(4, 2)];
    for spec in specs {
        let fam = DetFamily::new(spec, 3)?;
        let pres = ReesPresentation::of_family(&fam, false)?;
        let b0 = degree_bound(&spec, BlowupAlgebra::Rees, Grading::Zero);
        let b1 = degree_bound(&spec, BlowupAlgebra::Rees, Grading::One);
        let report = pres.report(Some((b0, b1)));
        let ok = report.within_bound == Some(true) && pres.is_sound()?;
        check(
            out,
            format!("Rees presentation of {spec}"),
            ok,
            json!({ "max_T_degree": pres.max_t_degree(), "max_total_degree": pres.max_total_degree(), "bound": [b0, b1] }),
        );
    }
    Ok(())
}

fn depth_reg(out: &mut Vec<Check>) -> Result<()> {
    let spec = DetIdealSpec::generic(3, 3, 2);
    let p = 2;
    let table = depth_reg_sequences(&spec, p, 3)?;
    let stable = (spec.t * spec.t - 1) as usize;
    for n in 1..=2 {
        check(out, format!("depth R/I^({n}) computed"), table.depth_at(n).is_some(), Value::Null);
    }
    let depths: Vec<Option<usize>> = table.rows.iter().map(|r| r.depth).collect();
    check(out, "computed depths >= t^2 - 1", depths.iter().flatten().all(|&d| d >= stable), json!(depths));
    for (a, b) in depth_comparison_pairs(p as u32, 3) {
        if let (Some(da), Some(db)) = (table.depth_at(a), table.depth_at(b)) {
            check(out, format!("depth R/I^({a}) >= depth R/I^({b})"), da >= db, json!([da, db]));
        }
    }
    let ratios: Vec<Option<f64>> = table.rows.iter().map(|r| r.ratio).collect();
    check(out, "reg/n finite", ratios.iter().flatten().all(|r| r.is_finite()), serde_json::to_value(&table.rows).unwrap());
    Ok(())
}

/// pf^2 = det over every even principal submatrix of a 6x6 skew matrix.
fn pfaffian_squares(out: &mut Vec<Check>) -> Result<()> {
    let fam = DetFamily::new(DetIdealSpec::pfaffian(6, 1), 3)?;
    let mut bad = Vec::new();
    let mut count = 0;
    for k in (2..=6).step_by(2) {
        for idx in subsets(6, k) {
            let pf = fam.pfaffian(&idx);
            if &pf * &pf != fam.minor(&idx, &idx) {
                bad.push(idx);
            }
            count += 1;
        }
    }
    check(out, "pf^2 = det, sizes 2..6", bad.is_empty(), json!({ "checked": count, "bad": bad }));
    Ok(())
}

fn random_ring(rng: &mut ChaCha8Rng) -> Result<Ring> {
    let n = rng.gen_range(2..=5);
    let p = *[2u64, 3, 5].choose(rng).unwrap();
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    RingContext::standard(p, &refs, MonomialOrder::grevlex(n))
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max: u16) -> Monomial {
    loop {
        let e: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if e.iter().any(|&x| x > 0) {
            return Monomial::from_exps(&e);
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, ring: &Ring, deg: u32) -> Polynomial {
    let n = ring.nvars();
    let p = ring.p();
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = vec![0u16; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        terms.push((Monomial::from_exps(&e), rng.gen_range(1..p)));
    }
    Polynomial::from_terms(ring, terms)
}

/// Invariants that must hold on one random instance; returns the failures.
fn random_instance(seed: u64) -> Result<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = random_ring(&mut rng)?;
    let (n, p) = (ring.nvars(), ring.p());
    let mut bad = Vec::new();

    // monomial ideal
    let k = rng.gen_range(1..=4);
    let mono = MonomialIdeal::new(n, (0..k).map(|_| random_monomial(&mut rng, n, 2)).collect());
    let ideal = Ideal::from_monomial(&ring, &mono);
    if fedder_fpure(&ideal)?.holds() != mono.is_squarefree() {
        bad.push(format!("fedder disagrees with square-freeness on {}", mono.format(&ring)));
    }
    let table = free_resolution(&ideal)?;
    if table.depth() + table.projective_dimension() != n || table.regularity() + 1 < mono.min_degree().unwrap() {
        bad.push(format!("resolution invariants fail on {}", mono.format(&ring)));
    }
    let mut gens = ideal.gens().to_vec();
    gens.reverse();
    if free_resolution(&Ideal::new(&ring, gens)?)? != table {
        bad.push(format!("Betti table depends on generator order for {}", mono.format(&ring)));
    }
    if let Some(sym) = mono.symbolic_power_squarefree(2) {
        let s = |a| mono.symbolic_power_squarefree(a).unwrap();
        if !(1..=3).all(|a| s(a).contains_ideal(&mono.power(a))) || !s(3).contains_ideal(&s(1).product(&sym)) {
            bad.push(format!("square-free symbolic powers misbehave on {}", mono.format(&ring)));
        }
        let top = Monomial::from_exps(&vec![(p - 1) as u16; n]);
        for m in 0..=2 {
            let big = s(m * p + 1);
            let small = s(m + 1).frobenius(p);
            if !big.gens().iter().all(|g| small.contains(&g.mul(&top))) {
                bad.push(format!("(x1..xd)^(p-1) misses the colon at n = {m} on {}", mono.format(&ring)));
            }
        }
    }
    if n <= 4 && integral_closure(&integral_closure(&mono)?)? != integral_closure(&mono)? {
        bad.push(format!("integral closure not idempotent on {}", mono.format(&ring)));
    }

    // valuation filtration
    let vals: Vec<Vec<u32>> = (0..rng.gen_range(1..=2))
        .map(|_| loop {
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if v.iter().any(|&x| x > 0) {
                break v;
            }
        })
        .collect();
    let filt = ValuationFiltration::new(n, vals.clone());
    for (a, b) in [(1, 1), (1, 2), (2, 1)] {
        if !filt.level(a + b).contains_ideal(&filt.level(a).product(&filt.level(b))) {
            bad.push(format!("valuation filtration {vals:?} is not multiplicative"));
        }
    }
    if !monomial_filtration_fpure_check(|m| filt.level(m), p, 2).holds {
        bad.push(format!("valuation filtration {vals:?} fails the splitting check"));
    }

    // homogeneous polynomial ideal
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(1..=2);
        gens.push(random_form(&mut rng, &ring, d));
    }
    let id = Ideal::new(&ring, gens.clone())?;
    let lex = MonomialOrder::lex(n);
    let mut member = Polynomial::zero(&ring);
    for g in &gens {
        let m = random_monomial(&mut rng, n, 1);
        member = &member + &g.mul_monomial(&m, rng.gen_range(1..p));
    }
    let gb_lex = id.groebner_in(&lex)?;
    if !id.contains(&member)? || !gb_lex.reduces_to_zero(&member) {
        bad.push(format!("membership of a combination fails for {}", gens.len()));
    }
    let probe = random_form(&mut rng, &ring, 2);
    if id.contains(&probe)? != gb_lex.reduces_to_zero(&probe) {
        bad.push("grevlex and lex bases disagree on membership".into());
    }
    let frob = id.frobenius_power(1)?;
    let fp = member.pow(p);
    if !id.frobenius_contains(&fp, p)? || !frob.contains(&fp)? {
        bad.push("f^p of a member is not in I^[p]".into());
    }
    let probe = &random_form(&mut rng, &ring, 2) * &random_form(&mut rng, &ring, p);
    if id.frobenius_contains(&probe, p)? != frob.contains(&probe)? {
        bad.push("Frobenius membership tests disagree".into());
    }
    if !id.is_unit_ideal()? {
        let t = free_resolution(&id)?;
        if t.depth() + t.projective_dimension() != n || id.min_degree().is_some_and(|a| t.regularity() + 1 < a) {
            bad.push("resolution invariants fail on a random form ideal".into());
        }
    }
    Ok(bad)
}

fn properties(out: &mut Vec<Check>) -> Result<()> {
    pfaffian_squares(out)?;
    let failures: Vec<(u64, String)> = (0..200u64)
        .into_par_iter()
        .map(|seed| random_instance(seed).map(|v| v.into_iter().map(|s| (seed, s)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    check(out, "200 random instances", failures.is_empty(), json!(failures));
    // family corpus: initial terms of witnesses are square-free
    let mut bad = Vec::new();
    let specs = [
        DetIdealSpec::generic(3, 3, 2),
        DetIdealSpec::generic(2, 4, 2),
        DetIdealSpec::symmetric(3, 2),
        DetIdealSpec::pfaffian(5, 2),
        DetIdealSpec::pfaffian(6, 2),
        DetIdealSpec::hankel(5, 2),
        DetIdealSpec::hankel(6, 3),
    ];
    for spec in specs {
        let fam = DetFamily::new(spec, 3)?;
        let w = fam.witness_t()?;
        let h = spec.height();
        if !fam.initial(&w).is_squarefree() || !fam.symbolic_power(h).contains(&w)? {
            bad.push(spec.to_string());
        }
    }
    check(out, "family witnesses: square-free initial term and f in I^(h)", bad.is_empty(), json!(bad));
    Ok(())
}

fn monomial(out: &mut Vec<Check>) -> Result<()> {
    let tri = MonomialIdeal::from_exps(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let xyz = Monomial::from_exps(&[1, 1, 1]);
    let sym2 = tri.symbolic_power_squarefree(2).unwrap();
    check(out, "triangle: xyz in I^(2) but not I^2", sym2.contains(&xyz) && !tri.power(2).contains(&xyz), Value::Null);
    for p in [2u32, 3, 5] {
        let ring = RingContext::standard(p as u64, &["x", "y", "z"], MonomialOrder::grevlex(3))?;
        let s = SymbolicProvider::squarefree_monomial(&ring, tri.clone())?;
        let v = symbolic_fpure(&s, None)?;
        check(out, format!("triangle symbolic F-pure p={p}"), v.holds(), json!(v.summary()));
        let r = monomial_filtration_fpure_check(|n| tri.symbolic_power_squarefree(n).unwrap(), p, 3);
        check(out, format!("triangle symbolic filtration verified up to 3, p={p}"), r.holds && r.verified_up_to == 3, json!(r));
        for vals in [vec![vec![1, 2]], vec![vec![1, 0], vec![0, 1]], vec![vec![2, 1, 0], vec![0, 1, 3]]] {
            let f = ValuationFiltration::new(vals[0].len(), vals.clone());
            let r = monomial_filtration_fpure_check(|n| f.level(n), p, 3);
            check(out, format!("valuations {vals:?} verified up to 3, p={p}"), r.holds && r.verified_up_to == 3, json!(r));
        }
    }
    let sq = MonomialIdeal::from_exps(2, &[&[2, 0], &[0, 2]]);
    let u = rees_denominator(&sq)?;
    let closure = integral_closure(&sq)?;
    check(out, "closure of (x^2, y^2) is (x, y)^2", closure == MonomialIdeal::maximal(2).power(2), Value::Null);
    for n in 1..=4 {
        let ok = rational_power(&sq, n * u, u)? == integral_closure(&sq.power(n))?;
        check(out, format!("closure of I^{n} = I_(n u), u = {u}"), ok, Value::Null);
    }
    Ok(())
}
