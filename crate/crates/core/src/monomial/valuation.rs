use serde::Serialize;

use super::MonomialIdeal;
use crate::poly::{Exp, Monomial};

/// Monomial valuations `v_i(x^m) = a_i . m`; level `n` of the filtration is
/// the ideal of monomials with `v_i >= n` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationFiltration {
    pub nvars: usize,
    pub vals: Vec<Vec<u32>>,
}

impl ValuationFiltration {
    pub fn new(nvars: usize, vals: Vec<Vec<u32>>) -> Self {
        assert!(vals.iter().all(|v| v.len() == nvars), "valuation length mismatch");
        ValuationFiltration { nvars, vals }
    }

    pub fn level(&self, n: u32) -> MonomialIdeal {
        valuation_ideal(self.nvars, &self.vals, n)
    }
}

/// Minimal generators of `{x^m : a_i . m >= n for all i}`.
///
/// A variable with every `a_i` zero never helps and is left out. A minimal
/// generator never has exponent above `max_i ceil(n / a_ij)` in variable `j`.
pub fn valuation_ideal(nvars: usize, vals: &[Vec<u32>], n: u32) -> MonomialIdeal {
    threshold_ideal(nvars, vals, &vec![n; vals.len()])
}

/// Minimal generators of `{x^m : a_i . m >= t_i for all i}`.
pub(crate) fn threshold_ideal(nvars: usize, vals: &[Vec<u32>], thresholds: &[u32]) -> MonomialIdeal {
    let live: Vec<(Vec<u32>, u32)> =
        vals.iter().zip(thresholds).filter(|(_, &t)| t > 0).map(|(v, &t)| (v.clone(), t)).collect();
    if live.is_empty() {
        return MonomialIdeal::unit(nvars);
    }
    if live.iter().any(|(v, _)| v.iter().all(|&a| a == 0)) {
        return MonomialIdeal::zero(nvars);
    }
    let useful: Vec<usize> = (0..nvars).filter(|&j| live.iter().any(|(v, _)| v[j] > 0)).collect();
    let caps: Vec<u32> = useful
        .iter()
        .map(|&j| live.iter().filter(|(v, _)| v[j] > 0).map(|(v, t)| t.div_ceil(v[j])).max().unwrap())
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0 as Exp; nvars];
    let mut partial = vec![0u32; live.len()];
    let search = Search { live: &live, useful: &useful, caps: &caps };
    search.descend(0, &mut exps, &mut partial, &mut out);
    MonomialIdeal::new(nvars, out)
}

struct Search<'a> {
    live: &'a [(Vec<u32>, u32)],
    useful: &'a [usize],
    caps: &'a [u32],
}

impl Search<'_> {
    fn descend(&self, k: usize, exps: &mut Vec<Exp>, partial: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if partial.iter().zip(self.live).all(|(&s, (_, t))| s >= *t) {
            out.push(Monomial::from_exps(exps));
            return;
        }
        if k == self.useful.len() {
            return;
        }
        let j = self.useful[k];
        if k + 1 == self.useful.len() {
            // last variable: least exponent finishing every valuation
            let mut need = 0u32;
            for (i, (v, t)) in self.live.iter().enumerate() {
                if partial[i] >= *t {
                    continue;
                }
                if v[j] == 0 {
                    return;
                }
                need = need.max((t - partial[i]).div_ceil(v[j]));
            }
            exps[j] = need as Exp;
            out.push(Monomial::from_exps(exps));
            exps[j] = 0;
            return;
        }
        for e in 0..=self.caps[k] {
            exps[j] = e as Exp;
            for (i, (v, _)) in self.live.iter().enumerate() {
                partial[i] += v[j] * e;
            }
            self.descend(k + 1, exps, partial, out);
            for (i, (v, _)) in self.live.iter().enumerate() {
                partial[i] -= v[j] * e;
            }
        }
        exps[j] = 0;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpureCheck {
    pub holds: bool,
    pub verified_up_to: u32,
    /// `(n, generator of I_{np+1})` whose splitting image escapes `I_{n+1}`.
    pub counterexample: Option<(u32, Vec<Exp>)>,
}

/// Check of the monomial splitting on a monomial filtration for `n <= max_n`.
///
/// For monomial ideals the colon `(I_{n+1})^[p] : I_{np+1}` escapes `m^[p]`
/// exactly when it contains `(x_1...x_d)^{p-1}`, which amounts to
/// `x^{ceil(g/p)} in I_{n+1}` for every generator `x^g` of `I_{np+1}`.
pub fn monomial_filtration_fpure_check<F>(filtration: F, p: u32, max_n: u32) -> FpureCheck
where
    F: Fn(u32) -> MonomialIdeal,
{
    for n in 0..=max_n {
        let big = filtration(n * p + 1);
        let small = filtration(n + 1);
        for g in big.gens() {
            if !small.contains(&g.ceil_root(p)) {
                return FpureCheck { holds: false, verified_up_to: n.saturating_sub(1), counterexample: Some((n, g.exps().to_vec())) };
            }
        }
    }
    FpureCheck { holds: true, verified_up_to: max_n, counterexample: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_valuation_is_power_of_maximal() {
        let f = ValuationFiltration::new(2, vec![vec![1, 1]]);
        assert_eq!(f.level(3), MonomialIdeal::maximal(2).power(3));
    }

    #[test]
    fn unconstrained_variable_skipped() {
        let f = ValuationFiltration::new(3, vec![vec![2, 1, 0]]);
        let i = f.level(3);
        assert!(i.gens().iter().all(|g| g.exps()[2] == 0));
        assert_eq!(i, MonomialIdeal::from_exps(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]));
    }

    #[test]
    fn bad_filtration_detected() {
        // I_1 = (x), I_2 = (x^2), I_4 = (x^3), p = 3: the root x of x^3 misses I_2
        let f = |n: u32| MonomialIdeal::from_exps(1, &[&[((n + 2) / 2) as u16]]);
        let r = monomial_filtration_fpure_check(f, 3, 2);
        assert!(!r.holds);
        assert_eq!(r.counterexample, Some((1, vec![3])));
        // ordinary powers of a monomial prime are fine
        let m = |n: u32| MonomialIdeal::maximal(2).power(n);
        assert!(monomial_filtration_fpure_check(m, 3, 3).holds);
    }
}
