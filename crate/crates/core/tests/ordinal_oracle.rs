mod common;

use common::{brute_force_index, naive_counts, permutations, rng};
use permplane::{extract_pattern, pattern_distribution, OrdinalConfig, TimeSeries};
use proptest::prelude::*;
use rand::Rng;

fn cfg(d: usize, tau: usize) -> OrdinalConfig {
    OrdinalConfig::new(d, tau).unwrap()
}

#[test]
fn brute_force_agrees_on_spec_windows() {
    let perms = permutations(3);
    for (window, ranks) in [
        ([1.0, 2.0, 3.0], [0, 1, 2]),
        ([3.0, 1.0, 2.0], [2, 0, 1]),
        ([2.0, 2.0, 1.0], [2, 1, 0]),
    ] {
        let oracle = &perms[brute_force_index(&window, &perms)];
        assert_eq!(oracle.as_slice(), &ranks);
        let p = extract_pattern(&window, &cfg(3, 1)).unwrap();
        assert_eq!(p.ranks(), &ranks);
    }
}

#[test]
fn every_window_with_ties_matches_brute_force() {
    // all value patterns over a 3-letter alphabet exercise every tie shape
    for d in 2..=5 {
        let perms = permutations(d);
        let mut digits = vec![0usize; d];
        loop {
            let window: Vec<f64> = digits.iter().map(|&v| v as f64).collect();
            let p = extract_pattern(&window, &cfg(d, 1)).unwrap();
            assert_eq!(p.index(), brute_force_index(&window, &perms), "{window:?}");
            let mut k = 0;
            while k < d && digits[k] == 2 {
                digits[k] = 0;
                k += 1;
            }
            if k == d {
                break;
            }
            digits[k] += 1;
        }
    }
}

#[test]
fn distribution_matches_naive_oracle_on_random_series() {
    let mut r = rng(7);
    for _ in 0..60 {
        let len = r.random_range(50..300);
        let d = r.random_range(3..=5);
        let tau = r.random_range(1..=2);
        // coarse rounding so ties occur
        let values: Vec<f64> = (0..len)
            .map(|_| (r.random::<f64>() * 8.0).round())
            .collect();
        let s = TimeSeries::new("r", values.clone()).unwrap();
        let p = pattern_distribution(&s, &cfg(d, tau)).unwrap();
        assert_eq!(p.counts(), naive_counts(&values, d, tau).as_slice());
        assert_eq!(p.total_vectors() as usize, len - (d - 1) * tau);
    }
}

#[test]
fn round_trip_every_permutation() {
    for d in 1..=7 {
        for (index, ranks) in permutations(d).iter().enumerate() {
            assert_eq!(permplane::encode_pattern(ranks).unwrap(), index);
            assert_eq!(&permplane::decode_pattern(index, d).unwrap(), ranks);
        }
    }
}

#[test]
fn iid_series_visits_every_pattern() {
    let mut r = rng(99);
    let values: Vec<f64> = (0..20_000).map(|_| r.random()).collect();
    let s = TimeSeries::new("iid", values).unwrap();
    let p = pattern_distribution(&s, &cfg(4, 1)).unwrap();
    // expected count per bin ~833; all bins well away from zero
    assert!(p.counts().iter().all(|&c| c > 600), "{:?}", p.counts());
}

fn tie_free(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1e3f64..1e3, len..len + 200).prop_filter("no ties", |v| {
        let mut s = v.clone();
        s.sort_by(f64::total_cmp);
        s.windows(2).all(|w| w[0] != w[1])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monotone_transform_invariance(values in tie_free(30), d in 2usize..=5, tau in 1usize..=2) {
        let c = cfg(d, tau);
        let base = pattern_distribution(&TimeSeries::new("x", values.clone()).unwrap(), &c).unwrap();
        let cubed: Vec<f64> = values.iter().map(|v| v * v * v + 3.0 * v).collect();
        let affine: Vec<f64> = values.iter().map(|v| 2.5 * v - 7.0).collect();
        let atan: Vec<f64> = values.iter().map(|v| (v / 100.0).atan()).collect();
        for t in [cubed, affine, atan] {
            let other = pattern_distribution(&TimeSeries::new("y", t).unwrap(), &c).unwrap();
            prop_assert_eq!(base.counts(), other.counts());
            prop_assert_eq!(base.probabilities(), other.probabilities());
        }
    }

    #[test]
    fn normalization(values in prop::collection::vec(-5i32..5, 20..200), d in 2usize..=5, tau in 1usize..=3) {
        let values: Vec<f64> = values.into_iter().map(f64::from).collect();
        let c = cfg(d, tau);
        prop_assume!(values.len() > (d - 1) * tau);
        let p = pattern_distribution(&TimeSeries::new("x", values.clone()).unwrap(), &c).unwrap();
        let sum: f64 = p.probabilities().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
        prop_assert_eq!(p.counts().iter().sum::<u64>() as usize, values.len() - (d - 1) * tau);
        for (count, prob) in p.counts().iter().zip(p.probabilities()) {
            prop_assert_eq!(*prob, *count as f64 / p.total_vectors() as f64);
        }
    }

    #[test]
    fn time_reversal_reverses_patterns(values in tie_free(20), d in 2usize..=4) {
        let c = cfg(d, 1);
        let forward = pattern_distribution(&TimeSeries::new("x", values.clone()).unwrap(), &c).unwrap();
        let mut rev = values.clone();
        rev.reverse();
        let backward = pattern_distribution(&TimeSeries::new("x", rev).unwrap(), &c).unwrap();
        prop_assert_eq!(forward.total_vectors(), backward.total_vectors());
        // reversing time maps offset r to D-1-r
        for (index, ranks) in permutations(d).iter().enumerate() {
            let mirrored: Vec<usize> = ranks.iter().map(|r| d - 1 - r).collect();
            prop_assert_eq!(forward.counts()[index], backward.count_of(&mirrored).unwrap());
        }
    }
}
