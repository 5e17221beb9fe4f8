//! `fpure compute`.

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use fpure::blowup::{degree_bound, waldschmidt_estimate, BlowupAlgebra, Grading, ReesPresentation};
use fpure::determinantal::{stated_order, IdealKind};
use fpure::homology::{depth_reg_sequences, free_resolution};
use fpure::monomial::{rational_power, rees_denominator};
use fpure::{Ideal, MonomialIdeal, Polynomial, Ring};

use crate::instance::Instance;
use crate::RangeArgs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    SymbolicPower,
    OrdinaryPower,
    InitialIdeal,
    Minors,
    Pfaffians,
    Witness,
    Betti,
    Depth,
    Reg,
    Waldschmidt,
    ReesPresentation,
    DegreeBound,
    RationalPower,
    SquarefreeSymbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Rees,
    SymbolicRees,
    SymbolicGraded,
    Graded,
}

impl From<Algebra> for BlowupAlgebra {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::Rees => BlowupAlgebra::Rees,
            Algebra::SymbolicRees => BlowupAlgebra::SymbolicRees,
            Algebra::SymbolicGraded => BlowupAlgebra::SymbolicGraded,
            Algebra::Graded => BlowupAlgebra::Graded,
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct ComputeArgs {
    /// Minor or Pfaffian index; denominator of a rational power.
    #[arg(short)]
    pub u: Option<u32>,
    /// Use the symbolic filtration (rees-presentation).
    #[arg(long)]
    pub symbolic: bool,
    /// Blowup algebra for degree-bound (default: all).
    #[arg(long, value_enum)]
    pub algebra: Option<Algebra>,
    /// Grading for degree-bound (default: both).
    #[arg(long, value_parser = ["0", "1"])]
    pub grading: Option<String>,
    /// Initial ideal in the family's stated order rather than the computing one.
    #[arg(long)]
    pub stated_order: bool,
}

/// Returns the JSON and text renderings.
pub fn run(q: Quantity, inst: &Instance, r: &RangeArgs, x: &ComputeArgs) -> Result<(Value, String)> {
    let n = r.n.unwrap_or(1);
    let base = |result: Value| json!({ "command": q_name(q), "instance": inst.name(), "result": result });
    let (result, text) = match q {
        Quantity::SymbolicPower => ideal_out(&inst.provider()?.power(n)?)?,
        Quantity::OrdinaryPower => ideal_out(&inst.ideal().power(n))?,
        Quantity::InitialIdeal => {
            let i = if n == 1 { inst.ideal() } else { inst.provider()?.power(n)? };
            let order = match inst {
                Instance::Family(f) if x.stated_order => stated_order(&f.spec().shape),
                _ => inst.ring().order().clone(),
            };
            let ring = inst.ring().with_order(order.clone())?;
            monomial_out(&ring, &i.initial_ideal(&order)?)?
        }
        Quantity::Minors | Quantity::Pfaffians => {
            let f = inst.family()?;
            let skew = f.spec().kind() == IdealKind::Pfaffians;
            if skew != (q == Quantity::Pfaffians) {
                bail!("use `{}` for this family", if skew { "pfaffians" } else { "minors" });
            }
            let u = x.u.unwrap_or(f.spec().t);
            if u == 0 || u > f.spec().top() {
                bail!("-u must lie in 1..={}", f.spec().top());
            }
            ideal_out(&f.family_ideal(u))?
        }
        Quantity::Witness => {
            let f = inst.family()?;
            let w = f.witness(x.u.unwrap_or(f.spec().t))?;
            (json!({ "ring": f.ring().to_string(), "polynomial": w.to_string() }), format!("{}\n{w}\n", f.ring()))
        }
        Quantity::Betti => {
            let b = free_resolution(&power_or_ideal(inst, r)?)?;
            (serde_json::to_value(&b)?, b.to_string())
        }
        Quantity::Depth | Quantity::Reg => match (inst, r.max_n) {
            (Instance::Family(f), Some(big_n)) => {
                let t = depth_reg_sequences(f.spec(), f.p() as u64, big_n)?;
                (serde_json::to_value(&t)?, t.to_string())
            }
            _ => {
                let b = free_resolution(&power_or_ideal(inst, r)?)?;
                let (key, v) = if q == Quantity::Depth { ("depth", b.depth() as u32) } else { ("regularity", b.regularity()) };
                (json!({ key: v }), format!("{v}\n"))
            }
        },
        Quantity::Waldschmidt => {
            let f = inst.family()?;
            let w = waldschmidt_estimate(f.spec(), r.max_n.unwrap_or(6))?;
            let mut text = String::from("  n  alpha  alpha/n\n");
            for (k, (a, q)) in w.alpha.iter().zip(&w.ratios).enumerate() {
                text.push_str(&format!("{:>3} {:>6}  {q}\n", k + 1, a));
            }
            text.push_str(&format!("limit {}\n", w.limit));
            (serde_json::to_value(&w)?, text)
        }
        Quantity::ReesPresentation => rees(inst, x)?,
        Quantity::DegreeBound => {
            let spec = *inst.family()?.spec();
            let algebras = match x.algebra {
                Some(a) => vec![a],
                None => vec![Algebra::Rees, Algebra::SymbolicRees, Algebra::SymbolicGraded, Algebra::Graded],
            };
            let gradings: Vec<(&str, Grading)> = match x.grading.as_deref() {
                Some("0") => vec![("0", Grading::Zero)],
                Some(_) => vec![("1", Grading::One)],
                None => vec![("0", Grading::Zero), ("1", Grading::One)],
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for a in algebras {
                for (gname, g) in &gradings {
                    let b = degree_bound(&spec, a.into(), *g);
                    let name = a.to_possible_value().unwrap().get_name().to_string();
                    text.push_str(&format!("{name:<16} grading {gname}: {b}\n"));
                    rows.push(json!({ "algebra": name, "grading": gname.parse::<u8>().unwrap(), "bound": b }));
                }
            }
            (Value::Array(rows), text)
        }
        Quantity::RationalPower => {
            let m = monomial(inst)?;
            let u = match x.u {
                Some(u) => u,
                None => rees_denominator(&m)?,
            };
            monomial_out(inst.ring(), &rational_power(&m, n, u)?)?
        }
        Quantity::SquarefreeSymbolic => {
            let m = monomial(inst)?;
            let Some(s) = m.symbolic_power_squarefree(n) else { bail!("the monomial ideal is not square-free") };
            monomial_out(inst.ring(), &s)?
        }
    };
    Ok((base(result), text))
}

fn q_name(q: Quantity) -> String {
    q.to_possible_value().unwrap().get_name().to_string()
}

fn power_or_ideal(inst: &Instance, r: &RangeArgs) -> Result<Ideal> {
    Ok(match r.n {
        Some(n) if n > 1 => inst.provider()?.power(n)?,
        _ => inst.ideal(),
    })
}

fn monomial(inst: &Instance) -> Result<MonomialIdeal> {
    match inst.monomial() {
        Some(m) => Ok(m),
        None => bail!("this command needs a monomial ideal"),
    }
}

/// Minimal generators when the ideal is graded, the given ones otherwise.
fn ideal_out(i: &Ideal) -> Result<(Value, String)> {
    let gens = if i.is_homogeneous() { i.minimal_generators()? } else { i.gens().to_vec() };
    Ok(polys_out(i.ring(), &gens))
}

fn monomial_out(ring: &Ring, m: &MonomialIdeal) -> Result<(Value, String)> {
    Ok(polys_out(ring, &m.to_polynomials(ring)))
}

/// Text in the ideal grammar, so the output re-parses.
fn polys_out(ring: &Ring, gens: &[Polynomial]) -> (Value, String) {
    let strs: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let mut text = format!("{ring}\n");
    text.push_str(&strs.iter().map(|s| format!("  {s}")).collect::<Vec<_>>().join(",\n"));
    text.push('\n');
    (json!({ "ring": ring.to_string(), "count": strs.len(), "generators": strs }), text)
}

fn rees(inst: &Instance, x: &ComputeArgs) -> Result<(Value, String)> {
    let (pres, bound) = match inst {
        Instance::Family(f) => {
            let a = if x.symbolic { BlowupAlgebra::SymbolicRees } else { BlowupAlgebra::Rees };
            let b = (degree_bound(f.spec(), a, Grading::Zero), degree_bound(f.spec(), a, Grading::One));
            (ReesPresentation::of_family(f, x.symbolic)?, Some(b))
        }
        Instance::Ideal(u) => (ReesPresentation::of_ideal(&u.ideal)?, None),
    };
    let report = pres.report(bound);
    let mut text = format!("{} algebra generators, {} defining equations\n", report.generators.len(), report.defining_equations.len());
    text.push_str(&format!("max T-degree {}, max total degree {}\n", pres.max_t_degree(), pres.max_total_degree()));
    if let (Some([b0, b1]), Some(w)) = (report.bound, report.within_bound) {
        text.push_str(&format!("bound [{b0}, {b1}]: {}\n", if w { "within" } else { "EXCEEDED" }));
    }
    text.push_str(&polys_out(pres.ring(), pres.equations()).1);
    let mut v = serde_json::to_value(&report)?;
    v["ring"] = pres.ring().to_string().into();
    v["equations"] = pres.equations().iter().map(|e| e.to_string()).collect::<Vec<_>>().into();
    Ok((v, text))
}
