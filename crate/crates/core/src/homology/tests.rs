use super::*;
use crate::determinantal::DetIdealSpec;
use crate::poly::{parse_ideal, Monomial, Polynomial, RingContext};
use proptest::prelude::*;

fn ideal(src: &str) -> Ideal {
    let (ring, gens) = parse_ideal(src).unwrap();
    Ideal::new(&ring, gens).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn principal_ideal() {
    let b = free_resolution(&ideal("ring p=5 vars x,y; order grevlex; x")).unwrap();
    assert_eq!(b.get(0, 0), 1);
    assert_eq!(b.get(1, 1), 1);
    assert_eq!(b.projective_dimension(), 1);
    assert_eq!(b.depth(), 1);
    assert_eq!(b.regularity(), 0);
}

#[test]
fn koszul_complex() {
    for d in 1..=5 {
        let names: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
        let b = free_resolution(&ideal(&format!("ring p=3 vars {0}; order grevlex; {0}", names.join(",")))).unwrap();
        for i in 0..=d {
            assert_eq!(b.get(i, i as u32), binom(d, i));
            assert_eq!(b.total(i), binom(d, i));
        }
        assert_eq!(b.depth(), 0);
        assert_eq!(b.regularity(), 0);
    }
}

#[test]
fn eagon_northcott() {
    let fam = DetFamily::new(DetIdealSpec::generic(2, 3, 2), 7).unwrap();
    let b = free_resolution(&fam.ideal()).unwrap();
    assert_eq!(b.get(1, 2), 3);
    assert_eq!(b.get(2, 3), 2);
    assert_eq!(b.projective_dimension(), 2);
    assert_eq!(b.depth(), 4);
    assert_eq!(b.regularity(), 1);
}

#[test]
fn powers_of_the_maximal_ideal() {
    let m = ideal("ring p=2 vars x,y,z; order grevlex; x,y,z");
    for n in 1..=3 {
        let b = free_resolution(&m.power(n)).unwrap();
        assert_eq!(b.regularity(), n - 1);
        assert_eq!(b.depth(), 0);
    }
}

#[test]
fn generator_order_and_redundancy() {
    let a = ideal("ring p=3 vars a,b,c,d; order grevlex; a*c-b^2, a*d-b*c, b*d-c^2");
    let b = ideal("ring p=3 vars a,b,c,d; order grevlex; b*d-c^2, a*c-b^2, a*d-b*c, a*(b*d-c^2), a*c-b^2 + b*d-c^2");
    let ta = free_resolution(&a).unwrap();
    assert_eq!(ta, free_resolution(&b).unwrap());
    assert_eq!(ta.depth(), 2);
    assert_eq!(ta.get(1, 2), 3);
    assert_eq!(ta.get(2, 3), 2);
}

#[test]
fn text_and_json() {
    let b = free_resolution(&ideal("ring p=5 vars x,y,z; order grevlex; x*y, y*z, x*z")).unwrap();
    let text = b.to_string();
    assert!(text.contains("total: 1 3 2"), "{text}");
    assert!(text.lines().nth(3).unwrap().starts_with("    1:"), "{text}");
    let v = serde_json::to_value(&b).unwrap();
    assert_eq!(v["pd"], 2);
    assert_eq!(v["depth"], 1);
    assert_eq!(v["betti"][1], serde_json::json!([1, 2, 3]));
}

#[test]
fn unit_and_zero_ideals() {
    assert!(free_resolution(&ideal("ring p=5 vars x,y; order grevlex; x, 1")).is_err());
    let ring = RingContext::standard(5, &["x", "y"], MonomialOrder::grevlex(2)).unwrap();
    let b = free_resolution(&Ideal::zero(&ring)).unwrap();
    assert_eq!(b.depth(), 2);
    assert!(free_resolution(&ideal("ring p=5 vars x,y; order grevlex; x^2 + y")).is_err());
}

#[test]
fn depth_pairs() {
    assert_eq!(depth_comparison_pairs(2, 3), vec![(1, 2), (2, 3)]);
    assert_eq!(depth_comparison_pairs(3, 4), vec![(1, 2), (1, 3), (2, 4)]);
}

#[test]
fn sequences_for_maximal_ideal() {
    let t = depth_reg_sequences(&DetIdealSpec::generic(1, 3, 1), 2, 3).unwrap();
    for r in &t.rows {
        assert_eq!(r.depth, Some(0));
        assert_eq!(r.regularity, Some(r.n - 1));
    }
    assert!(t.to_string().contains("reg/n"));
}

#[test]
fn maximal_minors_sequence() {
    let t = depth_reg_sequences(&DetIdealSpec::generic(2, 3, 2), 3, 2).unwrap();
    assert_eq!(t.depth_at(1), Some(4));
    assert!(t.rows.iter().all(|r| r.status == "ok"));
}

// ---- Hochster's formula oracle ------------------------------------------

/// Graded Betti numbers of `R/I` for a square-free monomial ideal, from
/// reduced homology of induced subcomplexes of its Stanley–Reisner complex.
fn hochster(n: usize, gens: &[u32], p: u32) -> BettiTable {
    let is_face = |f: u32| !gens.iter().any(|&g| g & f == g);
    let mut entries: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    for sigma in 0u32..1 << n {
        let size = sigma.count_ones() as i64;
        let faces: Vec<u32> = (0..=sigma).filter(|&f| f & sigma == f && is_face(f)).collect();
        let by_dim = |k: i64| -> Vec<u32> { faces.iter().copied().filter(|f| f.count_ones() as i64 == k + 1).collect() };
        let boundary_rank = |k: i64| -> usize {
            if k < 0 {
                return 0;
            }
            let lower = by_dim(k - 1);
            let cols = by_dim(k)
                .into_iter()
                .map(|f| {
                    let mut col = Vec::new();
                    let mut sign = 0;
                    for v in 0..n {
                        if f >> v & 1 == 1 {
                            let g = f & !(1 << v);
                            let row = lower.iter().position(|&x| x == g).unwrap();
                            col.push((row, if sign % 2 == 0 { 1 } else { p - 1 }));
                            sign += 1;
                        }
                    }
                    col
                })
                .collect();
            rank_mod_p(cols, p)
        };
        for i in 0..=size {
            let k = size - i - 1;
            let h = by_dim(k).len() - boundary_rank(k) - boundary_rank(k + 1);
            if h > 0 {
                *entries.entry((i as usize, size as u32)).or_default() += h;
            }
        }
    }
    BettiTable::from_entries(n, entries)
}

/// Polarize exponent vectors into square-free masks over `sum(max exps)` variables.
fn polarize(exps: &[Vec<u16>]) -> (usize, Vec<u32>) {
    let n = exps[0].len();
    let maxes: Vec<usize> = (0..n).map(|i| exps.iter().map(|e| e[i] as usize).max().unwrap()).collect();
    let offsets: Vec<usize> = maxes.iter().scan(0, |acc, &m| Some(std::mem::replace(acc, *acc + m))).collect();
    let total = maxes.iter().sum();
    let offsets = &offsets;
    let masks = exps
        .iter()
        .map(|e| (0..n).flat_map(|i| (0..e[i] as usize).map(move |k| 1u32 << (offsets[i] + k))).fold(0, |a, b| a | b))
        .collect();
    (total, masks)
}

fn monomial_ideal(p: u64, n: usize, exps: &[Vec<u16>]) -> Ideal {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = RingContext::standard(p, &refs, MonomialOrder::grevlex(n)).unwrap();
    let gens = exps.iter().map(|e| Polynomial::monomial(&ring, Monomial::from_exps(e), 1)).collect();
    Ideal::new(&ring, gens).unwrap()
}

#[test]
fn hochster_on_known_complexes() {
    // Triangle boundary: R/(xyz) is a hypersurface.
    let b = hochster(3, &[0b111], 2);
    assert_eq!(b.get(1, 3), 1);
    assert_eq!(b.projective_dimension(), 1);
    // Two disjoint edges: (x1 x3, x1 x4, x2 x3, x2 x4).
    let b = hochster(4, &[0b0101, 0b1001, 0b0110, 0b1010], 3);
    assert_eq!(b.get(1, 2), 4);
    assert_eq!(b.get(2, 3), 4);
    assert_eq!(b.get(3, 4), 1);
}

fn exps_strategy() -> impl Strategy<Value = (usize, Vec<Vec<u16>>, u64)> {
    (2usize..=5).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(prop::collection::vec(0u16..=2, n), 1..=5), prop::sample::select(vec![2u64, 3, 5]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resolution_matches_hochster((n, exps, p) in exps_strategy()) {
        let exps: Vec<Vec<u16>> = exps.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect();
        prop_assume!(!exps.is_empty());
        let id = monomial_ideal(p, n, &exps);
        let table = free_resolution(&id).unwrap();
        let (m, masks) = polarize(&exps);
        let oracle = hochster(m, &masks, p as u32);
        // Polarization keeps graded Betti numbers and the codimension.
        prop_assert_eq!(table.entries().collect::<Vec<_>>(), oracle.entries().collect::<Vec<_>>());
        prop_assert_eq!(table.depth() + table.projective_dimension(), n);
        prop_assert!(table.regularity() + 1 >= id.min_degree().unwrap());
        prop_assert!(table.projective_dimension() <= n);
    }

    #[test]
    fn generator_order_is_irrelevant((n, exps, p) in exps_strategy(), seed in any::<u64>()) {
        let exps: Vec<Vec<u16>> = exps.into_iter().filter(|e| e.iter().any(|&x| x > 0)).collect();
        prop_assume!(!exps.is_empty());
        let a = monomial_ideal(p, n, &exps);
        // A binomial-perturbed generating set of a homogeneous ideal.
        let ring = a.ring().clone();
        let mut gens = a.gens().to_vec();
        let k = gens.len();
        gens.rotate_left((seed as usize) % k);
        for i in 1..k {
            if gens[i].degree() == gens[0].degree() && seed >> i & 1 == 1 {
                gens[i] = &gens[i] + &gens[0];
            }
        }
        let b = Ideal::new(&ring, gens).unwrap();
        prop_assert_eq!(free_resolution(&a).unwrap(), free_resolution(&b).unwrap());
    }
}
