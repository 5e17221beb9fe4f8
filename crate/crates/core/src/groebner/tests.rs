use super::*;
use crate::budget;
use crate::error::Error;
use crate::poly::{parse_ideal, parse_polynomial, MonomialOrder};

fn ideal(src: &str) -> Ideal {
    let (r, g) = parse_ideal(src).unwrap();
    Ideal::new(&r, g).unwrap()
}

#[test]
fn twisted_cubic() {
    let i = ideal("ring p=32003 vars x,y,z,w; order grevlex; x*z - y^2, y*w - z^2, x*w - y*z");
    let gb = i.groebner().unwrap();
    assert_eq!(gb.len(), 3);
    assert_eq!(i.krull_dimension().unwrap(), 2);
    assert_eq!(i.mu().unwrap(), 3);
    let lex = i.groebner_in(&MonomialOrder::lex(4)).unwrap();
    assert!(lex.len() >= 3);
    let f = parse_polynomial(i.ring(), "x*(x*z - y^2) + w^2*(x*w - y*z)").unwrap();
    assert!(i.contains(&f).unwrap());
    assert!(!i.contains(&parse_polynomial(i.ring(), "x*w").unwrap()).unwrap());
}

#[test]
fn intersection_and_colon() {
    let a = ideal("ring p=7 vars x,y,z; order grevlex; x");
    let b = Ideal::new(a.ring(), vec![parse_polynomial(a.ring(), "y").unwrap()]).unwrap();
    let i = a.intersect(&b).unwrap();
    assert!(i.equals(&Ideal::new(a.ring(), vec![parse_polynomial(a.ring(), "x*y").unwrap()]).unwrap()).unwrap());
    let j = ideal("ring p=7 vars x,y,z; order grevlex; x^2, x*y");
    let x = parse_polynomial(j.ring(), "x").unwrap();
    let q = j.quotient_poly(&x).unwrap();
    assert!(q.equals(&ideal("ring p=7 vars x,y,z; order grevlex; x, y")).unwrap());
}

#[test]
fn saturation_routes_agree() {
    let j = ideal("ring p=5 vars x,y,z; order grevlex; x^2*y, x*y^2 - x*z^2");
    let x = parse_polynomial(j.ring(), "x").unwrap();
    let fast = j.saturate(&x).unwrap();
    let slow = j.saturate_by_elimination(&x).unwrap();
    assert!(fast.equals(&slow).unwrap());
    assert!(fast.equals(&ideal("ring p=5 vars x,y,z; order grevlex; y, z^2")).unwrap());
    let f = parse_polynomial(j.ring(), "x + y").unwrap();
    let s = j.saturate(&f).unwrap();
    assert!(s.contains_ideal(&j).unwrap());
}

#[test]
fn minimal_generators_drop_redundancy() {
    let i = ideal("ring p=3 vars x,y; order grevlex; x^2, x*y, x^2*y + x*y^2, y^3, x^3");
    let mg = i.minimal_generators().unwrap();
    assert_eq!(mg.len(), 3);
}

#[test]
fn frobenius_membership() {
    let i = ideal("ring p=3 vars x,y; order grevlex; x^2 - y^2");
    let f = parse_polynomial(i.ring(), "(x^2-y^2)^3*(x + y)").unwrap();
    assert!(i.frobenius_contains(&f, 3).unwrap());
    assert!(!i.frobenius_contains(&parse_polynomial(i.ring(), "(x^2-y^2)*x^4").unwrap(), 3).unwrap());
    let fp = i.frobenius_power(1).unwrap();
    assert!(fp.contains(&f).unwrap());
}

#[test]
fn budget_is_enforced() {
    let i = ideal("ring p=32003 vars a,b,c,d,e; order grevlex; a*b - c^2, b*c*d - e^3 + a^3, a*e - d^2 + b*c");
    let r = budget::with_max_spairs(2, || i.groebner_in(&MonomialOrder::lex(5)));
    assert!(matches!(r, Err(Error::BudgetExceeded { pairs: 2, .. })));
}

#[test]
fn truncation_matches_intersection() {
    let i = ideal("ring p=5 vars x,y,z; order grevlex; x*y - z^2, y^3");
    let m2 = Ideal::maximal(i.ring()).power(3);
    assert!(i.truncate(3).unwrap().equals(&i.intersect(&m2).unwrap()).unwrap());
}
