//! Structural invariants checked through the public API only.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use plats::braid::{from_braid_word, to_braid_word};
use plats::canonical::{apply_symmetry, canonicalize, decide_equivalence, EquivalenceVerdict, SymmetryElement};
use plats::census::{dedupe, genericity_ratio};
use plats::hypothesis::{bridge_distance, hypothesis_report};
use plats::knotcodes::{fingerprint, to_pd_code};
use plats::plat::{row_width, Closure, PlatGrid};
use plats::spheres::{check_sphere, classify_region, enumerate_vertical_spheres, isolating_sphere_for, RegionClass, SphereKind};

fn grid_strategy(m: std::ops::RangeInclusive<usize>, half_n: std::ops::RangeInclusive<usize>, coeffs: Vec<i64>) -> impl Strategy<Value = PlatGrid> {
    (m, half_n).prop_flat_map(move |(m, h)| {
        let n = 2 * h;
        let count: usize = (1..n).map(|i| row_width(m, i)).sum();
        proptest::collection::vec(proptest::sample::select(coeffs.clone()), count).prop_map(move |flat| {
            let mut it = flat.into_iter();
            PlatGrid::from_fn(m, n, Closure::StandardPlat, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

fn twisted(m: std::ops::RangeInclusive<usize>, half_n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PlatGrid> {
    grid_strategy(m, half_n, vec![-6, -5, -4, -3, 3, 4, 5, 6])
}

fn any_grid(m: std::ops::RangeInclusive<usize>, half_n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PlatGrid> {
    grid_strategy(m, half_n, (-4..=4).collect())
}

/// Every grid of a shape with entries drawn from `coeffs`.
fn all_grids(m: usize, n: usize, coeffs: &[i64]) -> Vec<PlatGrid> {
    let count: usize = (1..n).map(|i| row_width(m, i)).sum();
    let total = coeffs.len().pow(count as u32);
    (0..total)
        .map(|mut code| {
            PlatGrid::from_fn(m, n, Closure::StandardPlat, |_, _| {
                let a = coeffs[code % coeffs.len()];
                code /= coeffs.len();
                a
            })
            .unwrap()
        })
        .collect()
}

#[test]
fn components_fixed_by_symmetries_exhaustively() {
    for (m, n) in [(2, 2), (2, 4), (3, 4)] {
        for g in all_grids(m, n, &[-1, 0, 1]) {
            for s in SymmetryElement::ALL {
                assert_eq!(apply_symmetry(&g, s).unwrap().component_count(), g.component_count(), "{g:?} {s:?}");
            }
        }
    }
}

#[test]
fn distance_domain_and_monotonicity() {
    for m in 2..=6 {
        let mut last = 0;
        for h in 1..=20 {
            let n = 2 * h;
            let g = PlatGrid::constant(m, n, Closure::StandardPlat, 3).unwrap();
            let d = bridge_distance(&g);
            assert_eq!(d.is_ok(), m >= 3, "m={m} n={n}");
            if let Ok(d) = d {
                assert!(d >= last, "distance dropped at m={m} n={n}");
                last = d;
            }
            assert!(bridge_distance(&g.with_entry(1, 1, 2)).is_err());
        }
    }
}

#[test]
fn region_classes_partition() {
    for m in 3..=6 {
        for h in 4..=10 {
            let g = PlatGrid::constant(m, 2 * h, Closure::StandardPlat, 3).unwrap();
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for r in g.regions() {
                *counts.entry(classify_region(&g, r).unwrap().name()).or_default() += 1;
            }
            assert_eq!(counts.values().sum::<usize>(), g.twist_region_count());
            assert_eq!(counts["extreme"], 8, "m={m} n={}", 2 * h);
        }
    }
}

#[test]
fn genericity_monotone() {
    for t in 1..40 {
        for big_m in 3..60 {
            assert!(genericity_ratio(big_m, t) < genericity_ratio(big_m + 1, t));
            assert!(genericity_ratio(big_m, t + 1) < genericity_ratio(big_m, t));
        }
    }
    assert!(genericity_ratio(7, 0).is_one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn region_count_is_row_sum(g in any_grid(2..=7, 1..=9)) {
        let direct: usize = g.rows().iter().map(Vec::len).sum();
        prop_assert_eq!(g.twist_region_count(), direct);
        prop_assert_eq!(g.crossing_count(), g.rows().iter().flatten().map(|a| a.unsigned_abs()).sum::<u64>());
    }

    #[test]
    fn unique_sphere_implies_large_distance(g in twisted(3..=4, 1..=20)) {
        let r = hypothesis_report(&g);
        if r.unique_bridge_sphere {
            prop_assert!(bridge_distance(&g).unwrap() > 2 * g.m() as u64);
        }
    }

    #[test]
    fn braid_word_shape(g in any_grid(2..=6, 1..=8)) {
        let word = to_braid_word(&g);
        let nonzero = g.rows().iter().flatten().filter(|&&a| a != 0).count();
        prop_assert_eq!(word.letters().len(), nonzero);
        // always acceptable once the length is pinned; exact when no row is empty of letters
        let back = from_braid_word(&word, Some(g.n())).unwrap();
        if nonzero == g.twist_region_count() {
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn symmetries_and_canonical_forms(g in any_grid(2..=6, 1..=8)) {
        let c = canonicalize(&g).unwrap();
        for s in SymmetryElement::ALL {
            let img = apply_symmetry(&g, s).unwrap();
            prop_assert_eq!(&apply_symmetry(&img, s).unwrap(), &g);
            prop_assert_eq!(&canonicalize(&img).unwrap().grid, &c.grid);
        }
    }

    #[test]
    fn equivalence_symmetric_and_reflexive(g in twisted(3..=3, 7..=8), h in twisted(3..=3, 7..=8)) {
        prop_assert_eq!(decide_equivalence(&g, &g), EquivalenceVerdict::Equal);
        prop_assert_eq!(decide_equivalence(&g, &h).token(), decide_equivalence(&h, &g).token());
    }

    #[test]
    fn dedupe_idempotent_and_stable(gs in proptest::collection::vec(grid_strategy(3..=3, 3..=3, vec![-3, 3]), 0..40)) {
        let once = dedupe(&gs);
        let reps: Vec<PlatGrid> = once.iter().map(|f| f.grid.clone()).collect();
        let twice: Vec<PlatGrid> = dedupe(&reps).into_iter().map(|f| f.grid).collect();
        prop_assert_eq!(&twice, &reps);
        // order of first appearance
        let mut firsts = Vec::new();
        for g in &gs {
            let c = canonicalize(g).unwrap().grid;
            if !firsts.contains(&c) {
                firsts.push(c);
            }
        }
        prop_assert_eq!(reps, firsts);
    }

    #[test]
    fn vertical_spheres_check_out(g in any_grid(3..=5, 2..=6)) {
        for s in enumerate_vertical_spheres(&g) {
            let checked = check_sphere(&g, &s.c).unwrap();
            prop_assert_eq!(checked.kind, SphereKind::Vertical);
        }
    }

    #[test]
    fn allowable_regions_isolate(g in twisted(3..=5, 3..=7)) {
        for r in g.regions() {
            if classify_region(&g, r).unwrap() == RegionClass::Allowable {
                let iso = isolating_sphere_for(&g, r).unwrap();
                let diffs = iso.s1.c.iter().zip(&iso.s2.c).filter(|(a, b)| a != b).count();
                prop_assert_eq!(diffs, 1);
            }
        }
    }

    #[test]
    fn pd_labels_pair_up(g in grid_strategy(2..=4, 1..=4, vec![-3, -2, -1, 1, 2, 3])) {
        let pd = to_pd_code(&g).unwrap();
        prop_assert_eq!(pd.crossings.len() as u64, g.crossing_count());
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for x in &pd.crossings {
            for &label in x {
                *seen.entry(label).or_default() += 1;
            }
        }
        prop_assert!(seen.values().all(|&k| k == 2));
    }

    #[test]
    fn fingerprint_survives_braid_round_trip(g in grid_strategy(2..=3, 1..=4, vec![-3, -2, -1, 1, 2, 3])) {
        let back = from_braid_word(&to_braid_word(&g), None).unwrap();
        let f = fingerprint(&g);
        prop_assert_eq!(fingerprint(&back), f.clone());
        if f.components == 1 {
            prop_assert_eq!(&f.determinant % BigUint::from(2u32), BigUint::one());
        }
    }
}
