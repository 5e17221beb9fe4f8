use super::*;
use crate::poly::parse_polynomial;

fn fam(spec: DetIdealSpec) -> DetFamily {
    DetFamily::new(spec, 3).unwrap()
}

#[test]
fn small_minors_and_pfaffians() {
    let g = fam(DetIdealSpec::generic(2, 2, 2));
    let d = g.minor(&[0, 1], &[0, 1]);
    assert_eq!(d, parse_polynomial(g.ring(), "x1_1*x2_2 - x1_2*x2_1").unwrap());

    let z = fam(DetIdealSpec::pfaffian(4, 2));
    let pf = z.pfaffian(&[0, 1, 2, 3]);
    assert_eq!(pf, parse_polynomial(z.ring(), "z1_2*z3_4 - z1_3*z2_4 + z1_4*z2_3").unwrap());
    // Pfaffian squared is the determinant
    let all = [0, 1, 2, 3];
    assert_eq!(&pf * &pf, z.minor(&all, &all));
}

#[test]
fn validation() {
    assert!(DetIdealSpec::generic(3, 2, 1).validate().is_err());
    assert!(DetIdealSpec::generic(2, 3, 3).validate().is_err());
    assert!(DetIdealSpec::pfaffian(5, 3).validate().is_err());
    assert!(DetIdealSpec::hankel(4, 3).validate().is_err());
    assert!(DetIdealSpec::hankel(5, 3).validate().is_ok());
}

#[test]
fn heights_match_dimension() {
    for spec in [
        DetIdealSpec::generic(2, 3, 2),
        DetIdealSpec::generic(3, 3, 2),
        DetIdealSpec::symmetric(3, 2),
        DetIdealSpec::pfaffian(5, 2),
        DetIdealSpec::hankel(4, 2),
        DetIdealSpec::hankel(5, 2),
    ] {
        let f = fam(spec);
        assert_eq!(f.ideal().height().unwrap() as u32, spec.height(), "{spec}");
    }
}

#[test]
fn tuples_are_minimal() {
    // weights 1, 2 and n = 3: (3,0), (1,1), (0,2)
    let mut t = symbolic_tuples(2, 3, 3);
    t.sort();
    assert_eq!(t, vec![vec![0, 2], vec![1, 1], vec![3, 0]]);
}

#[test]
fn symbolic_formula_matches_saturation() {
    for (spec, n) in [
        (DetIdealSpec::generic(3, 3, 2), 2),
        (DetIdealSpec::generic(2, 3, 2), 2),
        (DetIdealSpec::symmetric(3, 2), 2),
        (DetIdealSpec::pfaffian(5, 1), 2),
        (DetIdealSpec::hankel(4, 2), 2),
    ] {
        let f = fam(spec);
        let a = f.symbolic_power(n);
        let b = f.symbolic_power_oracle(n).unwrap();
        assert!(a.equals(&b).unwrap(), "{spec} n={n}");
    }
}

#[test]
fn ordinary_power_as_intersection() {
    let f = fam(DetIdealSpec::generic(3, 3, 2));
    let a = f.ordinary_power_intersection(2).unwrap();
    assert!(a.equals(&f.ideal().power(2)).unwrap());
}

#[test]
fn witness_initial_terms_are_squarefree() {
    let mut specs = vec![];
    for r in 1..=4 {
        for s in r..=4 {
            specs.push(DetIdealSpec::generic(r, s, 1));
        }
        specs.push(DetIdealSpec::symmetric(r, 1));
    }
    for r in 2..=6 {
        specs.push(DetIdealSpec::pfaffian(r, 1));
    }
    for c in 1..=6 {
        specs.push(DetIdealSpec::hankel(c, 1));
    }
    for spec in specs {
        let f = fam(spec);
        for u in 1..=spec.top() {
            let w = f.witness(u).unwrap();
            let lm = f.initial(&w);
            assert!(lm.is_squarefree(), "{spec} u={u}: {}", f.ring().format_monomial(&lm));
        }
    }
}

#[test]
fn rees_witness_covers_every_variable() {
    for spec in [
        DetIdealSpec::generic(3, 3, 1),
        DetIdealSpec::symmetric(3, 1),
        DetIdealSpec::pfaffian(5, 1),
        DetIdealSpec::hankel(5, 1),
    ] {
        let f = fam(spec);
        let lm = f.initial(&f.rees_witness().unwrap());
        assert_eq!(lm.total_degree(), spec.nvars(), "{spec}");
    }
}

#[test]
fn stated_orders() {
    let names = |o: MonomialOrder, shape: MatrixShape| {
        let v = variable_names(&shape);
        match o {
            MonomialOrder::Lex(perm) => perm.iter().map(|&i| v[i].clone()).collect::<Vec<_>>().join(">"),
            _ => unreachable!(),
        }
    };
    let h = MatrixShape::Hankel { j: 3, c: 5 };
    assert_eq!(names(stated_order(&h), h), "w1>w3>w5>w2>w4");
    let z = MatrixShape::Skew { r: 3 };
    assert_eq!(names(stated_order(&z), z), "z1_3>z1_2>z2_3");
}

#[test]
fn stated_hankel_order_is_not_diagonal() {
    // under w1 > w3 > w2 > w4 the minor w2*w4 - w3^2 leads with w3^2
    let spec = DetIdealSpec::hankel(4, 2);
    let f = fam(spec);
    let stated = f.ideal().initial_ideal(&stated_order(&spec.shape)).unwrap();
    assert!(!stated.is_squarefree());
    let used = f.ideal().initial_ideal(&f.ring().order().clone()).unwrap();
    assert!(used.is_squarefree());
}
