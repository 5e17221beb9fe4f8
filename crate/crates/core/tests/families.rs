//! Cross-module invariants on the determinantal family corpus.

use std::sync::Arc;

use fpure::blowup::{degree_bound, symbolic_alpha, waldschmidt_estimate, BlowupAlgebra, Grading, ReesPresentation};
use fpure::fsing::{corh_sufficient, fedder_fpure, symbolic_fpure, symbolic_fpure_range, SymbolicProvider};
use fpure::homology::{depth_comparison_pairs, depth_reg_sequences};
use fpure::{DetFamily, DetIdealSpec, MatrixShape};

fn fam(spec: DetIdealSpec, p: u64) -> Arc<DetFamily> {
    Arc::new(DetFamily::new(spec, p).unwrap())
}

fn corpus() -> Vec<(DetIdealSpec, u64)> {
    vec![
        (DetIdealSpec::generic(2, 3, 2), 3),
        (DetIdealSpec::generic(3, 3, 2), 2),
        (DetIdealSpec::symmetric(3, 2), 3),
        (DetIdealSpec::pfaffian(5, 2), 3),
        (DetIdealSpec::hankel(4, 2), 2),
        (DetIdealSpec::hankel(5, 2), 2),
    ]
}

#[test]
fn hankel_ideals_do_not_depend_on_the_shape() {
    for (c, t) in [(4, 2), (5, 2), (6, 2), (6, 3)] {
        let base = fam(DetIdealSpec { shape: MatrixShape::Hankel { j: t, c }, t }, 5);
        for j in t..=c + 1 - t {
            let other = fam(DetIdealSpec { shape: MatrixShape::Hankel { j, c }, t }, 5);
            let i = other.ideal().in_ring(base.ring()).unwrap();
            assert!(i.equals(&base.ideal()).unwrap(), "c={c} t={t} j={j}");
        }
    }
}

#[test]
fn larger_minors_lie_in_the_second_symbolic_power() {
    let specs = [
        DetIdealSpec::generic(3, 3, 2),
        DetIdealSpec::generic(3, 4, 2),
        DetIdealSpec::symmetric(3, 2),
        DetIdealSpec::pfaffian(6, 2),
        DetIdealSpec::hankel(5, 2),
    ];
    for spec in specs {
        let f = fam(spec, 3);
        let sym2 = f.symbolic_power(2);
        assert!(sym2.contains_ideal(&f.family_ideal(spec.t + 1)).unwrap(), "{spec}");
    }
}

#[test]
fn symbolic_powers_form_a_filtration() {
    for (spec, p) in corpus() {
        let f = fam(spec, p);
        for (a, b) in [(1, 1), (1, 2)] {
            let prod = f.symbolic_power(a).product(&f.symbolic_power(b)).unwrap();
            assert!(f.symbolic_power(a + b).contains_ideal(&prod).unwrap(), "{spec} {a}+{b}");
        }
    }
}

#[test]
fn initial_ideals_of_symbolic_powers_sit_inside() {
    for (spec, _) in corpus() {
        let f = fam(spec, 5);
        let order = f.ring().order().clone();
        let init = f.ideal().initial_ideal(&order).unwrap();
        assert!(init.is_squarefree(), "{spec}");
        for n in 2..=2 {
            let lhs = f.symbolic_power(n).initial_ideal(&order).unwrap();
            let rhs = init.symbolic_power_squarefree(n).unwrap();
            assert!(rhs.contains_ideal(&lhs), "{spec} n={n}");
        }
    }
}

#[test]
fn witnesses_lie_in_the_height_symbolic_power() {
    let mut specs = vec![DetIdealSpec::generic(2, 2, 1), DetIdealSpec::generic(2, 3, 2), DetIdealSpec::generic(3, 3, 2)];
    specs.extend([DetIdealSpec::symmetric(2, 1), DetIdealSpec::symmetric(3, 2)]);
    specs.extend([DetIdealSpec::pfaffian(4, 1), DetIdealSpec::pfaffian(5, 2)]);
    specs.extend([DetIdealSpec::hankel(3, 2), DetIdealSpec::hankel(5, 2)]);
    for spec in specs {
        let f = fam(spec, 3);
        let w = f.witness_t().unwrap();
        assert!(f.symbolic_power(spec.height()).contains(&w).unwrap(), "{spec}");
    }
}

#[test]
fn criteria_imply_each_other() {
    for (spec, p) in corpus() {
        let s = SymbolicProvider::determinantal(fam(spec, p)).unwrap();
        let sym = symbolic_fpure(&s, None).unwrap();
        let corh = corh_sufficient(&s, None).unwrap();
        let fedder = fedder_fpure(s.ideal()).unwrap();
        if sym.holds() {
            assert!(fedder.holds(), "{spec}: symbolic F-pure but not F-pure");
        }
        if corh.holds() {
            assert!(sym.holds(), "{spec}: corh holds but symbolic F-purity fails");
        }
        // two more colons do not change the verdict
        let h = spec.height();
        let nmax = (h as i64 - 1 - i64::from(p as u32 <= h)).max(0) as u32;
        let longer = symbolic_fpure_range(&s, nmax + 2).unwrap();
        assert_eq!(longer.verdict, sym.verdict, "{spec}");
    }
}

#[test]
fn containment_passes_to_initial_ideals() {
    for (spec, p) in [(DetIdealSpec::generic(2, 3, 2), 3), (DetIdealSpec::generic(3, 3, 2), 2), (DetIdealSpec::hankel(4, 2), 2)] {
        let f = fam(spec, p);
        let order = f.ring().order().clone();
        for (a, b) in [(2, 2), (3, 2), (4, 3)] {
            let sym = f.symbolic_power(a);
            let ord = f.ideal().power(b);
            if ord.contains_ideal(&sym).unwrap() {
                let (ia, ib) = (sym.initial_ideal(&order).unwrap(), ord.initial_ideal(&order).unwrap());
                assert!(ib.contains_ideal(&ia), "{spec} I^({a}) in I^{b}");
            }
        }
    }
}

#[test]
fn waldschmidt_sequences() {
    for (spec, _) in corpus() {
        let w = waldschmidt_estimate(&spec, 8).unwrap();
        for a in 1..=8u32 {
            for b in 1..=8 - a {
                let (x, y, z) = (w.alpha[a as usize - 1], w.alpha[b as usize - 1], w.alpha[(a + b) as usize - 1]);
                assert!(z <= x + y, "{spec}: alpha not subadditive at {a}+{b}");
            }
            assert!(w.ratios[a as usize - 1] >= w.limit, "{spec}: alpha/n below the limit at n={a}");
        }
        assert_eq!(symbolic_alpha(&spec, 1), spec.t, "{spec}");
    }
}

#[test]
fn presentations_are_sound_and_bounded() {
    for (spec, symbolic) in [(DetIdealSpec::generic(2, 3, 2), false), (DetIdealSpec::hankel(4, 2), false), (DetIdealSpec::generic(3, 3, 2), true)] {
        let f = fam(spec, 3);
        let pres = ReesPresentation::of_family(&f, symbolic).unwrap();
        assert!(pres.is_sound().unwrap(), "{spec}");
        let kind = if symbolic { BlowupAlgebra::SymbolicRees } else { BlowupAlgebra::Rees };
        let b0 = degree_bound(&spec, kind, Grading::Zero);
        let b1 = degree_bound(&spec, kind, Grading::One);
        assert_eq!(pres.report(Some((b0, b1))).within_bound, Some(true), "{spec}");
    }
}

#[test]
fn depth_comparison_on_maximal_minors() {
    let p = 3;
    let t = depth_reg_sequences(&DetIdealSpec::generic(2, 3, 2), p, 4).unwrap();
    for (a, b) in depth_comparison_pairs(p as u32, 4) {
        assert!(t.depth_at(a).unwrap() >= t.depth_at(b).unwrap(), "{a} vs {b}");
    }
}
