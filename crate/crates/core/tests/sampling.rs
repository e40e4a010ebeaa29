mod common;

use num_traits::Zero;
use resultant_core::rng::Lcg64;
use resultant_core::verify::{
    common_root_oracle, membership_scan, membership_scan_with, rational_rank, sample_planted, sample_planted_with_root,
    CoefficientTuple, GeneratorTable,
};
use resultant_core::Rational;

use common::GRID;

fn small_integer_tuple(rng: &mut Lcg64, d: usize, n: usize) -> CoefficientTuple {
    let values =
        (0..n).map(|_| (0..=d).map(|_| Rational::from_integer(rng.range_inclusive(-2, 2).into())).collect()).collect();
    CoefficientTuple::new(d, n, values).unwrap()
}

/// First small-integer tuple (d=2, n=3) whose single `M_1` minor vanishes
/// while the polynomials have no common root and some leading coefficient is nonzero.
fn search_m1_counterexample(seed: u64) -> (usize, CoefficientTuple) {
    let mut rng = Lcg64::new(seed);
    for attempt in 0..10_000 {
        let c = small_integer_tuple(&mut rng, 2, 3);
        if c.is_zero() || c.all_leading_zero() {
            continue;
        }
        let m1 = c.cascade_values(1).unwrap();
        if rational_rank(&m1) == 3 {
            continue;
        }
        if common_root_oracle(&c).unwrap().gcd_degree == 0 {
            return (attempt, c);
        }
    }
    panic!("no counterexample found");
}

// frozen output of search_m1_counterexample(17)
const M1_FIXTURE: [[i64; 3]; 3] = [[-2, 0, -1], [-1, -1, 0], [-1, 1, -1]];

#[test]
fn first_cascade_matrix_alone_is_not_sufficient() {
    let rows: Vec<&[i64]> = M1_FIXTURE.iter().map(|r| &r[..]).collect();
    let c = CoefficientTuple::from_integers(2, 3, &rows).unwrap();
    let (_, found) = search_m1_counterexample(17);
    assert_eq!(found, c, "search output changed: {:?}", found.values());
    let rep = membership_scan(&c).unwrap();
    let m1: Vec<_> = rep.values.iter().filter(|g| g.k == 1).collect();
    assert_eq!(m1.len(), 1);
    assert!(m1[0].value.is_zero());
    assert!(!rep.root.has_projective_common_root());
    assert!(!rep.top_vanish && rep.consistent);
}

#[test]
fn root_at_infinity_kills_every_generator() {
    for (d, n) in GRID {
        let table = GeneratorTable::new(d, n).unwrap();
        let mut rng = Lcg64::new(99);
        for seed in 0..20 {
            // shared affine root of the truncated polynomials, or none at all
            let lower = if d >= 2 && seed % 2 == 0 { Some(sample_planted(d - 1, n, seed).unwrap()) } else { None };
            let values = (0..n)
                .map(|i| {
                    let mut row = vec![Rational::zero()];
                    match &lower {
                        Some(l) => row.extend(l.values()[i].iter().cloned()),
                        None => row.extend((0..d).map(|_| Rational::from_integer(rng.range_inclusive(-3, 3).into()))),
                    }
                    row
                })
                .collect();
            let c = CoefficientTuple::new(d, n, values).unwrap();
            if c.is_zero() {
                continue;
            }
            let rep = membership_scan_with(&table, &c).unwrap();
            assert!(rep.root.all_leading_zero);
            assert!(rep.all_vanish, "d={d} n={n} seed {seed}");
        }
    }
}

#[test]
fn planted_root_spans_the_kernel() {
    for (d, n) in GRID {
        for seed in 0..25 {
            let (c, r) = sample_planted_with_root(d, n, seed).unwrap();
            for k in 1..=d {
                assert!(c.kernel_residual(k, &r).unwrap().iter().all(Zero::is_zero), "d={d} n={n} k={k}");
            }
        }
    }
}

#[test]
fn planted_samples_are_distinct_per_seed() {
    let tuples: std::collections::BTreeSet<_> =
        (0..100).map(|s| format!("{:?}", sample_planted(2, 3, s).unwrap().values())).collect();
    assert_eq!(tuples.len(), 100);
}

#[test]
fn planted_samples_have_a_common_root() {
    for seed in 0..50 {
        let c = sample_planted(2, 3, seed).unwrap();
        assert!(common_root_oracle(&c).unwrap().has_affine_common_root);
    }
}
