//! Turning command-line instance flags into families and ideals.

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};

use fpure::corpus::{builtin_ideal, smallest_admissible_prime, BUILTIN_NAMES};
use fpure::fsing::SymbolicProvider;
use fpure::poly::{parse_ideal, parse_polynomial};
use fpure::{DetFamily, DetIdealSpec, Ideal, MatrixShape, MonomialIdeal, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Generic,
    Symmetric,
    Pfaffian,
    Hankel,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InstanceArgs {
    /// Determinantal family.
    #[arg(long, value_enum, conflicts_with = "ideal")]
    pub family: Option<Family>,
    /// Rows (generic), size (symmetric, skew).
    #[arg(short)]
    pub r: Option<u32>,
    /// Columns of a generic matrix.
    #[arg(short)]
    pub s: Option<u32>,
    /// Minor size; half the Pfaffian size for skew matrices.
    #[arg(short)]
    pub t: Option<u32>,
    /// Number of Hankel variables.
    #[arg(short)]
    pub c: Option<u32>,
    /// Rows of the Hankel matrix (default: the most square shape).
    #[arg(long)]
    pub rows: Option<u32>,
    /// Characteristic. Families default to the smallest admissible prime.
    #[arg(short)]
    pub p: Option<u64>,
    /// Built-in ideal name or a file in the ideal grammar.
    #[arg(long, value_name = "NAME|FILE")]
    pub ideal: Option<String>,
    /// Big height of a user ideal.
    #[arg(long)]
    pub big_height: Option<u32>,
    /// Symbolic powers as saturations `I^n : f^inf`.
    #[arg(long, value_name = "POLY", requires = "ideal")]
    pub saturate_by: Option<String>,
    /// Witness polynomial for a user ideal.
    #[arg(long, value_name = "POLY", requires = "ideal")]
    pub witness: Option<String>,
}

pub struct UserIdeal {
    pub name: String,
    pub ideal: Ideal,
    pub big_height: Option<u32>,
    pub saturate_by: Option<Polynomial>,
    pub witness: Option<Polynomial>,
}

pub enum Instance {
    Family(Arc<DetFamily>),
    Ideal(UserIdeal),
}

impl InstanceArgs {
    pub fn spec(&self, family: Family) -> Result<DetIdealSpec> {
        let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| anyhow!("--family {family:?} needs -{flag}"));
        let t = need(self.t, "t")?;
        let spec = match family {
            Family::Generic => DetIdealSpec::generic(need(self.r, "r")?, self.s.or(self.r).unwrap(), t),
            Family::Symmetric => DetIdealSpec::symmetric(need(self.r, "r")?, t),
            Family::Pfaffian => DetIdealSpec::pfaffian(need(self.r, "r")?, t),
            Family::Hankel => {
                let c = need(self.c, "c")?;
                match self.rows {
                    Some(j) => DetIdealSpec { shape: MatrixShape::Hankel { j, c }, t },
                    None => DetIdealSpec::hankel(c, t),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `initial` selects the prime bound of the initial-ideal criteria when
    /// no `-p` is given.
    pub fn build(&self, initial: bool) -> Result<Instance> {
        if let Some(f) = self.family {
            let spec = self.spec(f)?;
            let p = match self.p {
                Some(p) => p,
                None => smallest_admissible_prime(spec, initial)?,
            };
            return Ok(Instance::Family(Arc::new(DetFamily::new(spec, p)?)));
        }
        let Some(src) = &self.ideal else {
            bail!("give an instance with --family or --ideal");
        };
        let (name, ideal, builtin_h) = if BUILTIN_NAMES.contains(&src.as_str()) {
            let b = builtin_ideal(src, self.p)?;
            (src.clone(), b.ideal, Some(b.big_height))
        } else {
            let text = std::fs::read_to_string(src).with_context(|| format!("reading {src}"))?;
            let (ring, gens) = parse_ideal(&text).with_context(|| format!("parsing {src}"))?;
            if let Some(p) = self.p {
                if u64::from(ring.p()) != p {
                    bail!("-p {p} disagrees with p={} in {src}", ring.p());
                }
            }
            (src.clone(), Ideal::new(&ring, gens)?, None)
        };
        let ring = ideal.ring().clone();
        let poly = |s: &Option<String>| -> Result<Option<Polynomial>> {
            s.as_deref().map(|s| parse_polynomial(&ring, s).map_err(Into::into)).transpose()
        };
        Ok(Instance::Ideal(UserIdeal {
            name,
            big_height: self.big_height.or(builtin_h),
            saturate_by: poly(&self.saturate_by)?,
            witness: poly(&self.witness)?,
            ideal,
        }))
    }
}

impl Instance {
    pub fn name(&self) -> String {
        match self {
            Instance::Family(f) => f.spec().to_string(),
            Instance::Ideal(u) => u.name.clone(),
        }
    }

    pub fn ring(&self) -> &Ring {
        match self {
            Instance::Family(f) => f.ring(),
            Instance::Ideal(u) => u.ideal.ring(),
        }
    }

    pub fn ideal(&self) -> Ideal {
        match self {
            Instance::Family(f) => f.ideal(),
            Instance::Ideal(u) => u.ideal.clone(),
        }
    }

    pub fn family(&self) -> Result<&Arc<DetFamily>> {
        match self {
            Instance::Family(f) => Ok(f),
            Instance::Ideal(_) => bail!("this command needs --family"),
        }
    }

    /// The monomial ideal when every generator is a monomial.
    pub fn monomial(&self) -> Option<MonomialIdeal> {
        let i = self.ideal();
        let gens = i.gens().iter().filter(|g| !g.is_zero());
        let mons: Option<Vec<_>> = gens.map(|g| (g.terms().len() == 1).then(|| g.leading_monomial().unwrap().clone())).collect();
        mons.map(|m| MonomialIdeal::new(i.ring().nvars(), m))
    }

    /// Families use their generation formula; square-free monomial ideals
    /// their prime decomposition; other ideals a saturation or, failing
    /// that, ordinary powers.
    pub fn provider(&self) -> Result<SymbolicProvider> {
        let u = match self {
            Instance::Family(f) => return Ok(SymbolicProvider::determinantal(f.clone())?),
            Instance::Ideal(u) => u,
        };
        let mut s = match (self.monomial(), &u.saturate_by) {
            (Some(m), None) if m.is_squarefree() => SymbolicProvider::squarefree_monomial(u.ideal.ring(), m)?,
            (_, Some(d)) => SymbolicProvider::saturation(u.ideal.clone(), d.clone(), u.big_height),
            _ => SymbolicProvider::ordinary(u.ideal.clone(), u.big_height),
        };
        if let Some(h) = u.big_height {
            s = s.with_big_height(h);
        }
        if let Some(w) = &u.witness {
            s = s.with_witness(w.clone());
        }
        Ok(s)
    }
}
