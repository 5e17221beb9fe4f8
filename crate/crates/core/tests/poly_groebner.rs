//! Randomized invariants of polynomial arithmetic and Gröbner computations.

use fpure::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Ring, RingContext};
use fpure::{Ideal, MonomialIdeal};
use proptest::prelude::*;

type Raw = Vec<(Vec<u16>, u32)>;

fn ring(n: usize, p: u64, order: MonomialOrder) -> Ring {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    RingContext::standard(p, &refs, order).unwrap()
}

fn poly(r: &Ring, raw: &Raw) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exps(e), c % r.p())).collect())
}

/// Sum of `deg`-forms with support from `raw`, so the result is homogeneous.
fn form(r: &Ring, raw: &Raw, deg: u16) -> Polynomial {
    let terms = raw
        .iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            let s: u16 = e.iter().sum();
            if s < deg {
                e[0] += deg - s;
            } else {
                let mut extra = s - deg;
                for x in e.iter_mut() {
                    let d = extra.min(*x);
                    *x -= d;
                    extra -= d;
                }
            }
            (Monomial::from_exps(&e), c % r.p())
        })
        .collect();
    Polynomial::from_terms(r, terms)
}

fn raw_poly(n: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::collection::vec(0u16..=2, n), 1u32..5), 1..=4)
}

fn setup() -> impl Strategy<Value = (usize, u64, Vec<Raw>)> {
    (2usize..=4, prop::sample::select(vec![2u64, 3, 5]))
        .prop_flat_map(|(n, p)| (Just(n), Just(p), prop::collection::vec(raw_poly(n), 4)))
}

fn orders(n: usize) -> Vec<MonomialOrder> {
    let rev: Vec<usize> = (0..n).rev().collect();
    vec![MonomialOrder::lex(n), MonomialOrder::grevlex(n), MonomialOrder::Lex(rev.clone()), MonomialOrder::GRevLex(rev)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leading_terms_multiply((n, p, raws) in setup()) {
        for o in orders(n) {
            let r = ring(n, p, o);
            let (f, g) = (poly(&r, &raws[0]), poly(&r, &raws[1]));
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            prop_assert_eq!(fg.leading_monomial().unwrap(), &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap()));
        }
    }

    #[test]
    fn freshman_dream((n, p, raws) in setup()) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let (f, g) = (poly(&r, &raws[0]), poly(&r, &raws[1]));
        prop_assert_eq!((&f + &g).pow(p as u32), &f.pow(p as u32) + &g.pow(p as u32));
    }

    #[test]
    fn frobenius_test_ignores_units((n, p, raws) in setup(), c in 1u32..5) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let f = poly(&r, &raws[0]);
        let c = c % p as u32;
        prop_assume!(c != 0);
        prop_assert_eq!(f.scale(c).outside_frobenius_max(p as u32), f.outside_frobenius_max(p as u32));
    }

    #[test]
    fn printed_polynomials_re_parse((n, p, raws) in setup()) {
        for o in orders(n) {
            let r = ring(n, p, o);
            let f = &poly(&r, &raws[0]) - &poly(&r, &raws[1]);
            prop_assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn frobenius_commutes_with_intersection((n, p, raws) in setup()) {
        let mono = |raw: &Raw| {
            let gens: Vec<Monomial> = raw.iter().map(|(e, _)| Monomial::from_exps(e)).filter(|m| !m.is_one()).collect();
            MonomialIdeal::new(n, gens)
        };
        let (i, j) = (mono(&raws[0]), mono(&raws[1]));
        prop_assume!(!i.is_zero() && !j.is_zero());
        let q = p as u32;
        prop_assert_eq!(i.intersect(&j).frobenius(q), i.frobenius(q).intersect(&j.frobenius(q)));
        // and through the polynomial side
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let (pi, pj) = (Ideal::from_monomial(&r, &i), Ideal::from_monomial(&r, &j));
        let lhs = pi.intersect(&pj).unwrap().frobenius_power(1).unwrap();
        let rhs = pi.frobenius_power(1).unwrap().intersect(&pj.frobenius_power(1).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_decides_membership((n, p, raws) in setup(), lex in any::<bool>()) {
        let o = if lex { MonomialOrder::lex(n) } else { MonomialOrder::grevlex(n) };
        let r = ring(n, p, o);
        let (f0, f1) = (poly(&r, &raws[0]), poly(&r, &raws[1]));
        let i = Ideal::new(&r, vec![f0.clone(), f1.clone()]).unwrap();
        let member = &(&poly(&r, &raws[2]) * &f0) + &f1;
        let probe = poly(&r, &raws[3]);
        for f in [member, probe] {
            prop_assert_eq!(i.normal_form(&f).unwrap().is_zero(), i.contains(&f).unwrap());
        }
        prop_assert!(i.gens().iter().all(|g| i.contains(g).unwrap()));
    }

    #[test]
    fn colon_times_ideal_lands_inside((n, p, raws) in setup()) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let j = Ideal::new(&r, vec![form(&r, &raws[0], 2), form(&r, &raws[1], 3)]).unwrap();
        let i = Ideal::new(&r, vec![form(&r, &raws[2], 1), form(&r, &raws[3], 1)]).unwrap();
        let q = j.quotient(&i).unwrap();
        prop_assert!(j.contains_ideal(&q.product(&i).unwrap()).unwrap());
    }

    #[test]
    fn saturation_is_idempotent((n, p, raws) in setup()) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let j = Ideal::new(&r, vec![form(&r, &raws[0], 2), form(&r, &raws[1], 2)]).unwrap();
        let f = form(&r, &raws[2], 1);
        prop_assume!(!f.is_zero());
        let once = j.saturate(&f).unwrap();
        prop_assert!(once.saturate(&f).unwrap().equals(&once).unwrap());
        prop_assert!(once.contains_ideal(&j).unwrap());
    }

    #[test]
    fn reduced_bases_are_unique((n, p, raws) in setup(), rot in 0usize..3) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let mut gens: Vec<Polynomial> = raws[..3].iter().zip([1, 2, 2]).map(|(raw, d)| form(&r, raw, d)).collect();
        let a = Ideal::new(&r, gens.clone()).unwrap();
        gens.rotate_left(rot);
        let extra = &gens[0] + &gens[1];
        gens.push(extra);
        let b = Ideal::new(&r, gens).unwrap();
        for o in orders(n) {
            prop_assert_eq!(a.groebner_in(&o).unwrap().elements(), b.groebner_in(&o).unwrap().elements());
        }
    }

    #[test]
    fn initial_ideal_of_product((n, p, raws) in setup()) {
        let r = ring(n, p, MonomialOrder::grevlex(n));
        let i = Ideal::new(&r, vec![form(&r, &raws[0], 1), form(&r, &raws[1], 2)]).unwrap();
        let j = Ideal::new(&r, vec![form(&r, &raws[2], 1), form(&r, &raws[3], 2)]).unwrap();
        for o in orders(n) {
            let ij = i.product(&j).unwrap().initial_ideal(&o).unwrap();
            let prod = i.initial_ideal(&o).unwrap().product(&j.initial_ideal(&o).unwrap());
            prop_assert!(ij.contains_ideal(&prod));
        }
    }
}
