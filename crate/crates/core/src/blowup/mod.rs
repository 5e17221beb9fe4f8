//! Rees algebras of filtrations: presentations by elimination, the degree
//! bounds for their defining equations, and Waldschmidt constants.

mod bounds;

use serde::Serialize;

use crate::determinantal::{symbolic_tuples, DetFamily, DetIdealSpec};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub use bounds::{degree_bound, filtration_bound, BlowupAlgebra, Grading};

/// One algebra generator `f T^e`.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorInfo {
    #[serde(rename = "T_degree")]
    pub t_degree: u32,
    pub source_degree: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquationInfo {
    pub total_degree: u32,
    #[serde(rename = "T_degree")]
    pub t_degree: u32,
}

/// `R[f_1 T^{e_1}, ..]` presented as a quotient of `R[y_1, ..]`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    source: Ring,
    ring: Ring,
    gens: Vec<(Polynomial, u32)>,
    defining: Ideal,
    equations: Vec<Polynomial>,
}

impl ReesPresentation {
    /// Blocks `(generators, T-degree)`; generators must be homogeneous.
    pub fn compute(source: &Ring, blocks: &[(Vec<Polynomial>, u32)]) -> Result<ReesPresentation> {
        let mut gens: Vec<(Polynomial, u32)> = Vec::new();
        for (fs, e) in blocks {
            for f in fs.iter().filter(|f| !f.is_zero()) {
                gens.push((f.clone(), *e));
            }
        }
        if gens.iter().any(|(f, _)| !f.is_homogeneous()) {
            return Err(Error::NotHomogeneous("Rees algebra generators".into()));
        }
        if gens.iter().any(|&(_, e)| e == 0) {
            return Err(Error::InvalidSpec("T-degrees must be positive".into()));
        }
        let n = source.nvars();
        let k = gens.len();
        let t_name = source.fresh_name("T");
        let y_names: Vec<String> = (1..=k).map(|i| source.fresh_name(&format!("y{i}"))).collect();
        let mut names = vec![t_name];
        names.extend(y_names.iter().cloned());
        let mut weights = vec![1];
        weights.extend(gens.iter().map(|(f, e)| f.degree() + e));
        let big = source.extend(&names, &weights, MonomialOrder::eliminate(n + 1 + k, &[n]))?;

        let map: Vec<usize> = (0..n).collect();
        let graph: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .map(|(i, (f, e))| {
                let y = Polynomial::var(&big, n + 1 + i);
                let t = Polynomial::monomial(&big, Monomial::var(n + 1 + k, n, *e as u16), 1);
                &y - &(&f.embed(&big, &map) * &t)
            })
            .collect();
        let gb = Ideal::new(&big, graph)?.groebner()?;

        let keep: Vec<usize> = (0..n).chain(n + 1..n + 1 + k).collect();
        let mut s_names = source.vars().to_vec();
        s_names.extend(y_names);
        let mut s_weights = source.weights().to_vec();
        s_weights.extend(weights[1..].iter().copied());
        let ring = crate::poly::RingContext::new(
            source.p() as u64,
            s_names,
            s_weights,
            MonomialOrder::grevlex(n + k),
        )?;
        let kernel: Vec<Polynomial> = gb.elements().iter().filter_map(|g| g.restrict(&ring, &keep)).collect();
        let defining = Ideal::new(&ring, kernel)?;
        let equations = defining.minimal_generators()?;
        Ok(ReesPresentation { source: source.clone(), ring, gens, defining, equations })
    }

    /// Ordinary Rees algebra of `I`.
    pub fn of_ideal(i: &Ideal) -> Result<ReesPresentation> {
        Self::compute(i.ring(), &[(i.minimal_generators()?, 1)])
    }

    /// Rees algebra of the ideal of a family, or of its symbolic filtration
    /// (generated by `I_j T^{j-t+1}`).
    pub fn of_family(fam: &DetFamily, symbolic: bool) -> Result<ReesPresentation> {
        let t = fam.spec().t;
        let top = if symbolic { fam.spec().top() } else { t };
        let mut blocks = Vec::new();
        for j in t..=top {
            let id = if j == t { fam.ideal() } else { fam.family_ideal(j) };
            blocks.push((id.minimal_generators()?, j - t + 1));
        }
        Self::compute(fam.ring(), &blocks)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn generators(&self) -> Vec<GeneratorInfo> {
        self.gens.iter().map(|(f, e)| GeneratorInfo { t_degree: *e, source_degree: f.degree() }).collect()
    }

    fn t_degree(&self, m: &Monomial) -> u32 {
        let n = self.source.nvars();
        self.gens.iter().enumerate().map(|(i, (_, e))| e * m.exps()[n + i] as u32).sum()
    }

    /// Degrees of the minimal defining equations. The `T`-degree of a
    /// polynomial is its largest over terms.
    pub fn equation_info(&self) -> Vec<EquationInfo> {
        self.equations
            .iter()
            .map(|f| EquationInfo {
                total_degree: f.degree(),
                t_degree: f.terms().iter().map(|(m, _)| self.t_degree(m)).max().unwrap_or(0),
            })
            .collect()
    }

    pub fn max_t_degree(&self) -> u32 {
        self.equation_info().iter().map(|e| e.t_degree).max().unwrap_or(0)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.equation_info().iter().map(|e| e.total_degree).max().unwrap_or(0)
    }

    /// Substituting `y_i -> f_i T^{e_i}` kills every defining equation.
    pub fn is_sound(&self) -> Result<bool> {
        let n = self.source.nvars();
        let t_name = self.source.fresh_name("T");
        let rt = self.source.extend(&[t_name], &[1], MonomialOrder::grevlex(n + 1))?;
        let map: Vec<usize> = (0..n).collect();
        let images: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|(f, e)| &f.embed(&rt, &map) * &Polynomial::monomial(&rt, Monomial::var(n + 1, n, *e as u16), 1))
            .collect();
        for eq in &self.equations {
            let mut acc = Polynomial::zero(&rt);
            for (m, c) in eq.terms() {
                let mut term = Polynomial::monomial(&rt, Monomial::from_exps(&[&m.exps()[..n], &[0]].concat()), *c);
                for (i, img) in images.iter().enumerate() {
                    let k = m.exps()[n + i] as u32;
                    if k > 0 {
                        term = &term * &img.pow(k);
                    }
                }
                acc = &acc + &term;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of the Rees algebra.
    pub fn dimension(&self) -> Result<usize> {
        self.defining.krull_dimension()
    }

    /// Krull dimension of the associated graded algebra `R(I) / I_1 R(I)`,
    /// where `I_1` is generated by the T-degree-one generators.
    pub fn graded_dimension(&self) -> Result<usize> {
        let map: Vec<usize> = (0..self.source.nvars()).collect();
        let mut gens = self.defining.gens().to_vec();
        gens.extend(self.gens.iter().filter(|(_, e)| *e == 1).map(|(f, _)| f.embed(&self.ring, &map)));
        Ideal::new(&self.ring, gens)?.krull_dimension()
    }

    pub fn report(&self, bound: Option<(u64, u64)>) -> PresentationReport {
        let eqs = self.equation_info();
        let within = bound.map(|(b0, b1)| {
            eqs.iter().all(|e| u64::from(e.t_degree) <= b0 && u64::from(e.total_degree) <= b1)
        });
        PresentationReport {
            generators: self.generators(),
            defining_equations: eqs,
            bound: bound.map(|(a, b)| [a, b]),
            within_bound: within,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<GeneratorInfo>,
    pub defining_equations: Vec<EquationInfo>,
    /// `[T-grading bound, total-degree bound]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<[u64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_bound: Option<bool>,
}

/// Reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, o: &Ratio) -> Option<std::cmp::Ordering> {
        Some((self.num as u128 * o.den as u128).cmp(&(o.num as u128 * self.den as u128)))
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WaldschmidtReport {
    /// `alpha(I^(n))` for `n = 1..=N`.
    pub alpha: Vec<u32>,
    pub ratios: Vec<Ratio>,
    pub limit: Ratio,
}

/// `alpha(I^(n))` from the generation formula: the cheapest minimal tuple,
/// where `I_j` (or `P_{2j}`) is generated in degree `j`.
pub fn symbolic_alpha(spec: &DetIdealSpec, n: u32) -> u32 {
    let t = spec.t;
    symbolic_tuples(t, spec.top(), n)
        .iter()
        .map(|tup| tup.iter().enumerate().map(|(k, &a)| a * (t + k as u32)).sum::<u32>())
        .min()
        .unwrap_or(0)
}

/// `alpha(I^(n)) / n` for `n <= N` and the limit `top / (top - t + 1)`.
pub fn waldschmidt_estimate(spec: &DetIdealSpec, max_n: u32) -> Result<WaldschmidtReport> {
    spec.validate()?;
    let alpha: Vec<u32> = (1..=max_n).map(|n| symbolic_alpha(spec, n)).collect();
    let ratios = alpha.iter().zip(1..).map(|(&a, n)| Ratio::new(a as u64, n)).collect();
    let top = spec.top() as u64;
    let limit = Ratio::new(top, top - spec.t as u64 + 1);
    Ok(WaldschmidtReport { alpha, ratios, limit })
}
