//! Schreyer frames.
//!
//! Each level holds generators of a free module together with their images
//! in the previous level. The images form a Gröbner basis of the kernel of
//! the previous map for the induced Schreyer order, so the syzygies between
//! them come from S-pairs that reduce to zero. Only pairs whose lead
//! quotients minimally generate each colon are kept.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::budget;
use crate::error::{Error, Result};
use crate::poly::field;
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Clone, Debug)]
pub(crate) struct Gen {
    pub deg: u32,
    /// Lead monomial of the image chased down to the ring.
    total: Monomial,
    lead_pos: usize,
    lead_mon: Monomial,
    /// Tie-break rank; smaller is larger in the order.
    rank: usize,
}

#[derive(Clone, Debug)]
struct Term {
    mon: Monomial,
    total: Monomial,
    pos: usize,
    coef: u32,
}

type Vector = Vec<Term>;

#[derive(Debug, Default)]
pub(crate) struct Level {
    pub gens: Vec<Gen>,
    images: Vec<Vector>,
}

impl Level {
    /// Degree-preserving entries of the map into the previous level, as
    /// `(row, column, coefficient)`.
    pub fn constant_entries(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (col, img) in self.images.iter().enumerate() {
            for t in img {
                if t.mon.is_one() {
                    out.push((t.pos, col, t.coef));
                }
            }
        }
        out
    }
}

fn cmp_terms(ring: &Ring, gens: &[Gen], a: &Term, b: &Term) -> Ordering {
    ring.cmp(&a.total, &b.total).then_with(|| gens[b.pos].rank.cmp(&gens[a.pos].rank))
}

/// `a - c * m * b`, both sorted decreasingly.
fn sub_mul(ring: &Ring, gens: &[Gen], a: Vector, c: u32, m: &Monomial, b: &[Term]) -> Vector {
    let p = ring.p();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b
        .iter()
        .map(|t| Term { mon: t.mon.mul(m), total: t.total.mul(m), pos: t.pos, coef: field::neg(field::mul(c, t.coef, p), p) })
        .peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => cmp_terms(ring, gens, x, y),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(ai.next().unwrap()),
            Ordering::Less => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let mut x = ai.next().unwrap();
                let y = bi.next().unwrap();
                x.coef = field::add(x.coef, y.coef, p);
                if x.coef != 0 {
                    out.push(x);
                }
            }
        }
    }
    out
}

fn sort_vector(ring: &Ring, gens: &[Gen], mut v: Vector) -> Vector {
    let p = ring.p();
    v.sort_by(|a, b| cmp_terms(ring, gens, b, a));
    let mut out: Vector = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(last) if last.pos == t.pos && last.mon == t.mon => last.coef = field::add(last.coef, t.coef, p),
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coef != 0);
    out
}

/// The first level: a Gröbner basis of the ideal mapping onto `R`.
pub(crate) fn first_levels(ring: &Ring, basis: &[Polynomial]) -> (Level, Level) {
    let n = ring.nvars();
    let one = Monomial::one(n);
    let base = Level {
        gens: vec![Gen { deg: 0, total: one.clone(), lead_pos: 0, lead_mon: one.clone(), rank: 0 }],
        images: Vec::new(),
    };
    let mut polys: Vec<&Polynomial> = basis.iter().filter(|f| !f.is_zero()).collect();
    if n > 0 {
        polys.sort_by(|a, b| {
            let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            lb.exps()[0].cmp(&la.exps()[0]).then_with(|| ring.cmp(lb, la))
        });
    }
    let mut level = Level::default();
    for (k, f) in polys.into_iter().enumerate() {
        let lm = f.leading_monomial().unwrap().clone();
        level.gens.push(Gen { deg: f.degree(), total: lm.clone(), lead_pos: 0, lead_mon: lm, rank: k });
        let img = f
            .terms()
            .iter()
            .map(|(m, c)| Term { mon: m.clone(), total: m.clone(), pos: 0, coef: *c })
            .collect();
        level.images.push(img);
    }
    (base, level)
}

/// Syzygies of `cur`, whose images live in `prev`. `var` picks the variable
/// used to order each new group, which bounds the frame length by the
/// number of variables.
pub(crate) fn next_level(ring: &Ring, prev: &Level, cur: &Level, var: usize, work: &mut usize) -> Result<Level> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, g) in cur.gens.iter().enumerate() {
        groups.entry(g.lead_pos).or_default().push(i);
    }
    for v in groups.values_mut() {
        v.sort_by_key(|&i| cur.gens[i].rank);
    }
    let mut new: Vec<(Gen, Vector)> = Vec::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            let lm_i = &cur.gens[i].lead_mon;
            let mut quots: Vec<(Monomial, usize)> =
                members[a + 1..].iter().map(|&j| (lm_i.quotient_of(&lm_i.lcm(&cur.gens[j].lead_mon)), j)).collect();
            quots.sort_by(|x, y| x.0.total_degree().cmp(&y.0.total_degree()).then_with(|| x.1.cmp(&y.1)));
            let mut kept: Vec<(Monomial, usize)> = Vec::new();
            for (q, j) in quots {
                if !kept.iter().any(|(k, _)| k.divides(&q)) {
                    kept.push((q, j));
                }
            }
            for (q, j) in kept {
                *work += 1;
                if (*work).is_multiple_of(64) {
                    budget::check_deadline(*work)?;
                }
                let syz = pair_syzygy(ring, prev, cur, i, j, &q)?;
                let gen = Gen {
                    deg: cur.gens[i].deg + q.total_degree(),
                    total: q.mul(&cur.gens[i].total),
                    lead_pos: i,
                    lead_mon: q,
                    rank: 0,
                };
                new.push((gen, syz));
            }
        }
    }
    new.sort_by(|(a, _), (b, _)| {
        cur.gens[a.lead_pos]
            .rank
            .cmp(&cur.gens[b.lead_pos].rank)
            .then_with(|| b.lead_mon.exps()[var].cmp(&a.lead_mon.exps()[var]))
            .then_with(|| ring.cmp(&b.lead_mon, &a.lead_mon))
    });
    let mut level = Level::default();
    for (k, (mut g, img)) in new.into_iter().enumerate() {
        g.rank = k;
        debug_assert!(img.first().is_some_and(|t| t.pos == g.lead_pos && t.mon == g.lead_mon));
        level.gens.push(g);
        level.images.push(img);
    }
    Ok(level)
}

/// Reduce the S-vector of images `i`, `j` to zero, recording quotients.
fn pair_syzygy(ring: &Ring, prev: &Level, cur: &Level, i: usize, j: usize, q_i: &Monomial) -> Result<Vector> {
    let p = ring.p();
    let (gi, gj) = (&cur.images[i], &cur.images[j]);
    let (ci, cj) = (gi[0].coef, gj[0].coef);
    let lcm = q_i.mul(&cur.gens[i].lead_mon);
    let q_j = cur.gens[j].lead_mon.quotient_of(&lcm);
    let inv_i = field::inv(ci, p);
    let inv_j = field::inv(cj, p);
    let total_of = |m: &Monomial, pos: usize| m.mul(&cur.gens[pos].total);
    let mut syz: Vector = vec![
        Term { total: total_of(q_i, i), mon: q_i.clone(), pos: i, coef: inv_i },
        Term { total: total_of(&q_j, j), mon: q_j.clone(), pos: j, coef: field::neg(inv_j, p) },
    ];
    let mut s = sub_mul(ring, &prev.gens, Vec::new(), field::neg(inv_i, p), q_i, gi);
    s = sub_mul(ring, &prev.gens, s, inv_j, &q_j, gj);
    while let Some(lead) = s.first() {
        let k = find_divisor(cur, lead).ok_or_else(|| Error::Unsupported("syzygy failed to reduce".into()))?;
        let u = cur.gens[k].lead_mon.quotient_of(&lead.mon);
        let c = field::mul(lead.coef, field::inv(cur.images[k][0].coef, p), p);
        s = sub_mul(ring, &prev.gens, s, c, &u, &cur.images[k]);
        syz.push(Term { total: total_of(&u, k), mon: u, pos: k, coef: field::neg(c, p) });
    }
    Ok(sort_vector(ring, &cur.gens, syz))
}

fn find_divisor(cur: &Level, t: &Term) -> Option<usize> {
    // Prefer the element of least degree, which keeps quotients small.
    cur.gens
        .iter()
        .enumerate()
        .filter(|(_, g)| g.lead_pos == t.pos && g.lead_mon.divides(&t.mon))
        .min_by_key(|(_, g)| g.deg)
        .map(|(k, _)| k)
}

/// Levels `F_0, F_1, ..` of the frame for `R/I` given a Gröbner basis of `I`.
pub(crate) fn frame(ring: &Ring, basis: &[Polynomial]) -> Result<Vec<Level>> {
    let (max_pd, max_total) = budget::resolution_limits();
    let (base, first) = first_levels(ring, basis);
    let mut levels = vec![base, first];
    let mut total = 1 + levels[1].gens.len();
    let mut work = 0usize;
    while !levels.last().unwrap().gens.is_empty() {
        let k = levels.len() - 1;
        if k > max_pd {
            return Err(Error::BudgetExceeded { pairs: work, what: format!("resolution longer than {max_pd}") });
        }
        let var = k.min(ring.nvars().saturating_sub(1));
        let next = next_level(ring, &levels[k - 1], &levels[k], var, &mut work)?;
        total += next.gens.len();
        if total > max_total {
            return Err(Error::BudgetExceeded { pairs: work, what: format!("more than {max_total} frame generators") });
        }
        levels.push(next);
    }
    levels.pop();
    Ok(levels)
}
