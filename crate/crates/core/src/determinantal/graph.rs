//! Binomial edge ideals of simple graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Ring, RingContext};

/// Simple graph on vertices `1..=n` with its identity labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidSpec(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidSpec(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidSpec(format!("repeated edge {{{a},{b}}}")));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn path(n: u32) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &e).unwrap()
    }

    pub fn cycle(n: u32) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        e.push((n, 1));
        Graph::new(n, &e).unwrap()
    }

    pub fn complete(n: u32) -> Graph {
        let e: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Graph::new(n, &e).unwrap()
    }

    pub fn vertices(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n as usize + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for w in 1..=self.n {
                if !seen[w as usize] && self.has_edge(v, w) {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    /// Closedness for the given labeling: edges `{i,j}`, `{i,l}` force `{j,l}`,
    /// and edges `{i,j}`, `{k,j}` force `{i,k}`.
    pub fn is_closed(&self) -> bool {
        for &(i, j) in &self.edges {
            for &(k, l) in &self.edges {
                if (i, j) == (k, l) {
                    continue;
                }
                if i == k && !self.has_edge(j, l) {
                    return false;
                }
                if j == l && !self.has_edge(i, k) {
                    return false;
                }
            }
        }
        true
    }

    /// Ring `K[x_1..x_n, y_1..y_n]` with lex `x_1 > .. > x_n > y_1 > .. > y_n`.
    pub fn ring(&self, p: u64) -> Result<Ring> {
        let names: Vec<String> =
            (1..=self.n).map(|i| format!("x{i}")).chain((1..=self.n).map(|i| format!("y{i}"))).collect();
        let k = names.len();
        RingContext::new(p, names, vec![1; k], MonomialOrder::lex(k))
    }

    fn edge_binomial(&self, ring: &Ring, i: u32, j: u32) -> Polynomial {
        let x = |a: u32| Polynomial::var(ring, a as usize - 1);
        let y = |a: u32| Polynomial::var(ring, (self.n + a) as usize - 1);
        &(&x(i) * &y(j)) - &(&x(j) * &y(i))
    }

    /// `J_G = (x_i y_j - x_j y_i : {i,j} in E)` with `i < j`.
    pub fn binomial_edge_ideal(&self, ring: &Ring) -> Result<Ideal> {
        if ring.nvars() != 2 * self.n as usize {
            return Err(Error::RingMismatch);
        }
        let gens = self.edges.iter().map(|&(i, j)| self.edge_binomial(ring, i, j)).collect();
        Ideal::new(ring, gens)
    }

    /// Product of the edge binomials along a Hamiltonian path.
    pub fn path_witness(&self, ring: &Ring, path: &[u32]) -> Result<Polynomial> {
        let mut seen: Vec<u32> = path.to_vec();
        seen.sort_unstable();
        if seen != (1..=self.n).collect::<Vec<_>>() {
            return Err(Error::InvalidSpec("path must visit every vertex exactly once".into()));
        }
        let mut f = Polynomial::one(ring);
        for w in path.windows(2) {
            let (a, b) = (w[0], w[1]);
            if !self.has_edge(a, b) {
                return Err(Error::InvalidSpec(format!("{{{a},{b}}} is not an edge")));
            }
            f = &f * &self.edge_binomial(ring, a.min(b), a.max(b));
        }
        Ok(f)
    }
}
