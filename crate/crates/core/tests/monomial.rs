//! Randomized invariants of monomial filtrations.

use fpure::fsing::{symbolic_fpure, SymbolicProvider};
use fpure::monomial::{integral_closure, rational_power, rees_denominator, ValuationFiltration};
use fpure::poly::{Monomial, MonomialOrder, RingContext};
use fpure::MonomialIdeal;
use proptest::prelude::*;

fn squarefree(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u32..(1 << n), 1..=5).prop_map(move |masks| {
        let gens = masks.iter().map(|m| Monomial::from_exps(&(0..n).map(|i| (m >> i & 1) as u16).collect::<Vec<_>>())).collect();
        MonomialIdeal::new(n, gens)
    })
}

fn general(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u16..=3, n), 1..=4).prop_map(move |exps| {
        let gens = exps.iter().filter(|e| e.iter().any(|&x| x > 0)).map(|e| Monomial::from_exps(e)).collect();
        MonomialIdeal::new(n, gens)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn squarefree_symbolic_powers(i in (2usize..=6).prop_flat_map(squarefree)) {
        let s = |k| i.symbolic_power_squarefree(k).unwrap();
        for a in 1..=4 {
            prop_assert!(s(a).contains_ideal(&i.power(a)), "I^{} not inside I^({})", a, a);
        }
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            prop_assert!(s(a + b).contains_ideal(&s(a).product(&s(b))));
        }
    }

    #[test]
    fn squarefree_ideals_are_symbolic_fpure(i in (2usize..=5).prop_flat_map(squarefree), p in prop::sample::select(vec![2u64, 3, 5])) {
        let n = i.nvars();
        let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let ring = RingContext::standard(p, &refs, MonomialOrder::grevlex(n)).unwrap();
        let s = SymbolicProvider::squarefree_monomial(&ring, i.clone()).unwrap();
        let v = symbolic_fpure(&s, None).unwrap();
        prop_assert!(v.holds(), "{}", i.format(&ring));
        // (x_1..x_d)^(p-1) multiplies every colon into the Frobenius power
        let q = p as u32;
        let top = Monomial::from_exps(&vec![(q - 1) as u16; n]);
        for m in 0..=3 {
            let big = i.symbolic_power_squarefree(m * q + 1).unwrap();
            let small = i.symbolic_power_squarefree(m + 1).unwrap().frobenius(q);
            prop_assert!(big.gens().iter().all(|g| small.contains(&g.mul(&top))));
        }
    }

    #[test]
    fn valuation_filtrations_are_multiplicative(
        (n, vals) in (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=3)))
    ) {
        prop_assume!(vals.iter().all(|v| v.iter().any(|&x| x > 0)));
        let f = ValuationFiltration::new(n, vals);
        for (a, b) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
            prop_assert!(f.level(a + b).contains_ideal(&f.level(a).product(&f.level(b))));
        }
    }

    #[test]
    fn integral_closure_is_a_closure(i in (2usize..=3).prop_flat_map(general)) {
        prop_assume!(!i.is_zero());
        let c = integral_closure(&i).unwrap();
        prop_assert!(c.contains_ideal(&i));
        prop_assert_eq!(integral_closure(&c).unwrap(), c.clone());
        let u = rees_denominator(&i).unwrap();
        for k in 1..=2 {
            prop_assert_eq!(integral_closure(&i.power(k)).unwrap(), rational_power(&i, k * u, u).unwrap());
        }
    }
}
