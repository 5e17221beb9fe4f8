use std::sync::Arc;

use super::*;
use crate::determinantal::{DetFamily, DetIdealSpec};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::poly::{parse_ideal, RingContext, MonomialOrder};

fn ideal(src: &str) -> Ideal {
    let (ring, gens) = parse_ideal(src).unwrap();
    Ideal::new(&ring, gens).unwrap()
}

fn family(spec: DetIdealSpec, p: u64) -> Arc<DetFamily> {
    Arc::new(DetFamily::new(spec, p).unwrap())
}

const EX510: &str = "ring p=3 vars a,b:2,c:2,d:2; order grevlex;
    a^4 - b*c, a^2*(b-d) - c*d, b*(b-d) - d*a^2";

#[test]
fn fedder_basic() {
    assert!(fedder_fpure(&ideal("ring p=5 vars x,y; order grevlex; x")).unwrap().holds());
    assert_eq!(fedder_fpure(&ideal("ring p=2 vars x,y; order grevlex; x^2")).unwrap().verdict, Outcome::Fails);
}

#[test]
fn example_not_symbolic_fpure() {
    let i = ideal(EX510);
    assert!(fedder_fpure(&i).unwrap().holds());
    let s = SymbolicProvider::ordinary(i, Some(2));
    let v = symbolic_fpure(&s, None).unwrap();
    assert_eq!(v.verdict, Outcome::Fails);
    assert_eq!(v.colon_data.as_ref().unwrap()["n"], 1);
}

#[test]
fn principal_and_squarefree_monomial() {
    let s = SymbolicProvider::ordinary(ideal("ring p=3 vars x,y; order grevlex; x"), Some(1));
    assert!(symbolic_fpure(&s, None).unwrap().holds());

    let ring = RingContext::new(3, vec!["x".into(), "y".into(), "z".into()], vec![1; 3], MonomialOrder::grevlex(3)).unwrap();
    let tri = MonomialIdeal::from_exps(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let s = SymbolicProvider::squarefree_monomial(&ring, tri).unwrap();
    assert_eq!(s.big_height(), Some(2));
    assert!(symbolic_fpure(&s, None).unwrap().holds());
    assert!(corh_sufficient(&s, None).unwrap().holds());
}

#[test]
fn maximal_minors_are_symbolic_fpure() {
    let s = SymbolicProvider::determinantal(family(DetIdealSpec::generic(2, 3, 2), 2)).unwrap();
    let v = symbolic_fpure(&s, None).unwrap();
    assert!(v.holds(), "{v:?}");
    assert!(corh_sufficient(&s, None).unwrap().holds());
    assert!(fedder_fpure(s.ideal()).unwrap().holds());
    assert!(symbolic_rees_fpure_sufficient(&s, None).unwrap().holds());
    // the verdict is stable when more colons are intersected
    let h = s.big_height().unwrap();
    for extra in 1..=2 {
        assert!(symbolic_fpure_range(&s, h - 1 + extra).unwrap().holds());
    }
}

#[test]
fn compare_powers_both_ways() {
    let s = SymbolicProvider::determinantal(family(DetIdealSpec::generic(2, 3, 2), 2)).unwrap();
    assert!(compare_powers(&s).unwrap().holds());
    let fam = family(DetIdealSpec::generic(3, 3, 2), 2);
    let det = fam.minor(&[0, 1, 2], &[0, 1, 2]);
    let s = SymbolicProvider::determinantal(fam).unwrap();
    let v = compare_powers(&s).unwrap();
    assert_eq!(v.verdict, Outcome::Fails);
    assert_eq!(v.params.n, Some(2));
    assert_eq!(v.witness, Some(det.monic().to_string()));
}

#[test]
fn rees_witness_small() {
    let v = rees_fpure_witness(&family(DetIdealSpec::pfaffian(5, 2), 2), 1).unwrap();
    assert_eq!(v.verdict, Outcome::VerifiedUpTo(1), "{v:?}");
    let v = rees_fpure_witness(&family(DetIdealSpec::generic(2, 3, 1), 2), 2).unwrap();
    assert_eq!(v.verdict, Outcome::VerifiedUpTo(2));
}

#[test]
fn initial_equality_small() {
    for spec in [DetIdealSpec::generic(2, 3, 2), DetIdealSpec::hankel(4, 2), DetIdealSpec::pfaffian(5, 2)] {
        let v = initial_symbolic_equality(&family(spec, 5), 2, false).unwrap();
        assert!(v.holds(), "{spec}: {v:?}");
    }
    assert!(initial_symbolic_equality(&family(DetIdealSpec::symmetric(3, 2), 5), 2, false).is_err());
}

#[test]
fn initial_filtration_small() {
    for spec in [DetIdealSpec::generic(2, 3, 2), DetIdealSpec::hankel(4, 2), DetIdealSpec::generic(2, 2, 1)] {
        let v = initial_filtration_fpure(&family(spec, 2), 2).unwrap();
        assert_eq!(v.verdict, Outcome::VerifiedUpTo(2), "{spec}: {v:?}");
    }
}

#[test]
fn sfr_witness() {
    assert!(sfr_localization_witness(&family(DetIdealSpec::generic(3, 3, 2), 2)).unwrap().holds());
    assert!(sfr_localization_witness(&family(DetIdealSpec::pfaffian(6, 2), 3)).unwrap().holds());
    assert!(sfr_localization_witness(&family(DetIdealSpec::generic(3, 3, 1), 2)).is_err());
}

#[test]
fn characteristic_hypotheses() {
    // generic 4x4, t = 2 needs p > 2
    assert!(rees_fpure_witness(&family(DetIdealSpec::generic(4, 4, 2), 2), 1).is_err());
    assert!(characteristic_ok(&family(DetIdealSpec::generic(4, 4, 2), 3), false));
}

#[test]
fn verdict_json() {
    let v = fedder_fpure(&ideal("ring p=5 vars x,y; order grevlex; x")).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["verdict"], "holds");
    assert_eq!(j["params"]["p"], 5);
    assert_eq!(Outcome::VerifiedUpTo(3).to_string(), "verified-up-to(3)");
}
