//! Upper bounds for degrees of defining equations of blowup algebras.

use serde::Serialize;

use crate::determinantal::{DetIdealSpec, MatrixShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlowupAlgebra {
    Rees,
    SymbolicRees,
    /// Associated graded algebra of the symbolic filtration.
    SymbolicGraded,
    /// Associated graded algebra of the ordinary filtration.
    Graded,
}

/// `Zero`: variables in degree 0, degrees counted in the `T`-grading.
/// `One`: standard grading, total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grading {
    Zero,
    One,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Bound for an F-pure blowup algebra `R[I_{e_1} T^{e_1}, ..]` over a
/// polynomial ring of dimension `dim` with `blocks = (e_i, v_i, w_i)`:
/// `v_i` generators of maximal degree `w_i`. With `Grading::One` the
/// variables count as `dim` generators of degree one.
pub fn filtration_bound(dim: u64, blocks: &[(u64, u64, u64)], graded: bool, grading: Grading) -> u64 {
    let v: u64 = blocks.iter().map(|b| b.1).sum();
    let d = if graded { dim } else { dim + 1 };
    match grading {
        Grading::Zero => {
            let ev: u64 = blocks.iter().map(|b| b.0 * b.1).sum();
            d + ev - d.max(v)
        }
        Grading::One => {
            let s: u64 = blocks.iter().map(|b| b.1 * (b.2 + b.0)).sum();
            d + dim + s - d.max(dim + v)
        }
    }
}

/// Number of variables and minimal generators `mu_j` of `I_j`, `j = t..=top`.
fn family_counts(spec: &DetIdealSpec) -> (u64, Vec<(u64, u64)>) {
    let t = spec.t as u64;
    let top = spec.top() as u64;
    let mu = |j: u64| -> u64 {
        match spec.shape {
            MatrixShape::Generic { r, s } => binom(r as u64, j) * binom(s as u64, j),
            // distinct minors of a symmetric matrix: unordered pairs of row sets
            MatrixShape::Symmetric { r } => {
                let b = binom(r as u64, j);
                b * (b + 1) / 2
            }
            MatrixShape::Skew { r } => binom(r as u64, 2 * j),
            MatrixShape::Hankel { c, .. } => binom(c as u64 + 1 - j, j),
        }
    };
    (spec.nvars() as u64, (t..=top).map(|j| (j, mu(j))).collect())
}

/// The closed-form bounds for the determinantal families.
pub fn degree_bound(spec: &DetIdealSpec, which: BlowupAlgebra, grading: Grading) -> u64 {
    let (n, mus) = family_counts(spec);
    let t = spec.t as u64;
    let hankel = matches!(spec.shape, MatrixShape::Hankel { .. });
    let mu = mus[0].1;
    match (which, grading) {
        (BlowupAlgebra::Rees, Grading::Zero) => {
            if hankel {
                n.min(mu)
            } else {
                (n + 1).min(mu)
            }
        }
        (BlowupAlgebra::Rees, Grading::One) => n + mu * (t + 1),
        (BlowupAlgebra::Graded, g) => filtration_bound(n, &[(1, mu, t)], true, g),
        (BlowupAlgebra::SymbolicRees | BlowupAlgebra::SymbolicGraded, Grading::Zero) => {
            let extra: u64 = mus.iter().skip(1).map(|&(j, m)| m * (j - t)).sum();
            let all: u64 = mus.iter().map(|&(j, m)| m * (j - t + 1)).sum();
            let base = if which == BlowupAlgebra::SymbolicRees { n + 1 } else { n };
            (base + extra).min(all)
        }
        (BlowupAlgebra::SymbolicRees | BlowupAlgebra::SymbolicGraded, Grading::One) => {
            n + mus.iter().map(|&(j, m)| m * (2 * j - t + 1)).sum::<u64>()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_values() {
        assert_eq!(degree_bound(&DetIdealSpec::generic(3, 3, 2), BlowupAlgebra::Rees, Grading::One), 36);
        assert_eq!(degree_bound(&DetIdealSpec::pfaffian(5, 2), BlowupAlgebra::Rees, Grading::Zero), 5);
        assert_eq!(degree_bound(&DetIdealSpec::hankel(4, 2), BlowupAlgebra::Rees, Grading::Zero), 3);
        assert_eq!(degree_bound(&DetIdealSpec::generic(2, 3, 2), BlowupAlgebra::Rees, Grading::Zero), 3);
        // symmetric 3x3, t = 2: six distinct 2-minors
        assert_eq!(degree_bound(&DetIdealSpec::symmetric(3, 2), BlowupAlgebra::Rees, Grading::Zero), 6);
    }

    #[test]
    fn general_bound_specializes() {
        // one block in T-degree 1 with mu generators: min(dim + 1, mu)
        for (dim, mu) in [(6, 3), (9, 9), (2, 2), (4, 10)] {
            assert_eq!(filtration_bound(dim, &[(1, mu, 2)], false, Grading::Zero), (dim + 1).min(mu));
        }
    }
}
