//! Property tests for the fuzzification transform and the statistics kernel.

mod common;

use common::{itemset, random_grid_dataset};
use fuzzcorr_core::dataset::{fuzzify_value, MembershipSpec};
use fuzzcorr_core::stats::{
    correlation_of_sequences, fuzzy_support, item_support, partition_stats, Bipartition, Itemset,
};
use fuzzcorr_core::FuzzyDataset;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_spec() -> impl Strategy<Value = MembershipSpec> {
    (
        -100.0f64..100.0,
        0.001f64..500.0,
        prop_oneof![Just(None), (0u32..=9).prop_map(Some)],
    )
        .prop_map(|(zero, width, round)| MembershipSpec::new(zero, zero + width, round).unwrap())
}

/// In-test transcription of the sample Pearson coefficient, kept separate
/// from both the kernel and the oracle. Shares the project convention that
/// a constant sequence has zero variance.
fn pearson_reference(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.iter().all(|&v| v == x[0]) || y.iter().all(|&v| v == y[0]) {
        return None;
    }
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        cov += (xi - mean_x) * (yi - mean_y);
        var_x += (xi - mean_x) * (xi - mean_x);
        var_y += (yi - mean_y) * (yi - mean_y);
    }
    cov /= n - 1.0;
    var_x /= n - 1.0;
    var_y /= n - 1.0;
    if var_x == 0.0 || var_y == 0.0 {
        None
    } else {
        Some(cov / (var_x.sqrt() * var_y.sqrt()))
    }
}

proptest! {
    #[test]
    fn fuzzify_is_monotone(spec in arb_spec(), a in -1000.0f64..1000.0, b in -1000.0f64..1000.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(fuzzify_value(lo, &spec) <= fuzzify_value(hi, &spec));
    }

    #[test]
    fn fuzzify_stays_in_unit_interval(spec in arb_spec(), t in -1000.0f64..1000.0) {
        let v = fuzzify_value(t, &spec);
        prop_assert!((0.0..=1.0).contains(&v));
    }

    #[test]
    fn fuzzify_hits_exact_boundaries(spec in arb_spec()) {
        prop_assert_eq!(fuzzify_value(spec.zero_point(), &spec), 0.0);
        prop_assert_eq!(fuzzify_value(spec.saturation_point(), &spec), 1.0);
    }

    #[test]
    fn fuzzify_rounding_lands_on_the_decimal_grid(
        zero in -100.0f64..100.0,
        width in 0.001f64..500.0,
        d in 0u32..=9,
        t in -1000.0f64..1000.0,
    ) {
        let spec = MembershipSpec::new(zero, zero + width, Some(d)).unwrap();
        let value = fuzzify_value(t, &spec);
        // The result is exactly an integer number of 10^-d steps.
        let scale = 10f64.powi(d as i32);
        prop_assert_eq!(value, (value * scale).round() / scale);
    }

    #[test]
    fn correlation_matches_reference_transcription(
        pairs in proptest::collection::vec((0.0f64..1.0, 0.0f64..1.0), 2..60)
    ) {
        let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        let got = correlation_of_sequences(&x, &y).unwrap();
        match (got, pearson_reference(&x, &y)) {
            (None, None) => {}
            (Some(a), Some(b)) => prop_assert!((a - b).abs() <= 1e-12),
            other => prop_assert!(false, "definedness differs: {other:?}"),
        }
    }

    #[test]
    fn correlation_is_symmetric_in_its_arguments(
        pairs in proptest::collection::vec((0.0f64..1.0, 0.0f64..1.0), 2..40)
    ) {
        let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        prop_assert_eq!(
            correlation_of_sequences(&x, &y).unwrap(),
            correlation_of_sequences(&y, &x).unwrap()
        );
    }

    #[test]
    fn correlation_is_bounded(
        pairs in proptest::collection::vec((0.0f64..1.0, 0.0f64..1.0), 2..60)
    ) {
        if let Some(r) = correlation_of_sequences(
            &pairs.iter().map(|p| p.0).collect::<Vec<_>>(),
            &pairs.iter().map(|p| p.1).collect::<Vec<_>>(),
        )
        .unwrap()
        {
            prop_assert!(r.abs() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn correlation_is_affine_invariant(
        pairs in proptest::collection::vec((0.0f64..1.0, 0.0f64..1.0), 3..40),
        scale in 0.01f64..100.0,
        shift in -10.0f64..10.0,
    ) {
        let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        let scaled: Vec<f64> = x.iter().map(|v| scale * v + shift).collect();
        match (
            correlation_of_sequences(&x, &y).unwrap(),
            correlation_of_sequences(&scaled, &y).unwrap(),
        ) {
            (None, None) => {}
            (Some(a), Some(b)) => prop_assert!((a - b).abs() <= 1e-9, "{a} vs {b}"),
            other => prop_assert!(false, "definedness differs: {other:?}"),
        }
    }
}

#[test]
fn support_is_anti_monotone_over_nested_itemsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let n = rng.random_range(2..=15);
        let m = rng.random_range(2..=8);
        let ds = random_grid_dataset(&mut rng, n, m);

        // Draw V, then a non-empty U subset of V.
        let v_len = rng.random_range(1..=m);
        let mut pool: Vec<usize> = (0..m).collect();
        for i in (1..pool.len()).rev() {
            let j = rng.random_range(0..=i);
            pool.swap(i, j);
        }
        let v: Vec<usize> = pool[..v_len].to_vec();
        let u_len = rng.random_range(1..=v_len);
        let u: Vec<usize> = v[..u_len].to_vec();

        let sup_v = fuzzy_support(&ds, &itemset(&v)).unwrap();
        let sup_u = fuzzy_support(&ds, &itemset(&u)).unwrap();
        assert!(
            sup_v <= sup_u,
            "support({v:?}) = {sup_v} > support({u:?}) = {sup_u}"
        );
    }
}

#[test]
fn singleton_support_equals_item_support_on_random_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.random_range(1..=20);
        let m = rng.random_range(1..=8);
        let ds = random_grid_dataset(&mut rng, n, m);
        for j in 0..m {
            assert_eq!(
                fuzzy_support(&ds, &Itemset::singleton(j)).unwrap(),
                item_support(&ds, j).unwrap()
            );
        }
    }
}

#[test]
fn partition_stats_is_symmetric_under_side_swap() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let n = rng.random_range(2..=20);
        let m = rng.random_range(2..=8);
        let ds = random_grid_dataset(&mut rng, n, m);
        let partition = common::random_bipartition(&mut rng, m);
        let stats = partition_stats(&ds, &partition).unwrap();

        // Rebuilding with the sides swapped yields the same canonical object
        // and therefore identical statistics.
        let swapped =
            Bipartition::new(partition.side_b().clone(), partition.side_a().clone()).unwrap();
        assert_eq!(swapped, partition);
        assert_eq!(partition_stats(&ds, &swapped).unwrap(), stats);

        // And the underlying correlation is symmetric in its sequences.
        let mu = |set: &Itemset| -> Vec<f64> {
            (0..n)
                .map(|i| {
                    set.indices()
                        .iter()
                        .map(|&j| ds.membership(i, j))
                        .fold(f64::INFINITY, f64::min)
                })
                .collect()
        };
        let a = mu(partition.side_a());
        let b = mu(partition.side_b());
        assert_eq!(
            correlation_of_sequences(&a, &b).unwrap(),
            correlation_of_sequences(&b, &a).unwrap()
        );
    }
}

#[test]
fn constant_membership_column_never_panics() {
    // A dataset whose every column is constant: correlations are all
    // undefined and support queries still work.
    let ds = FuzzyDataset::new(
        vec!["a".into(), "b".into()],
        vec!["r1".into(), "r2".into(), "r3".into()],
        vec![0.4, 0.7, 0.4, 0.7, 0.4, 0.7],
    )
    .unwrap();
    let partition = Bipartition::new(Itemset::singleton(0), Itemset::singleton(1)).unwrap();
    let stats = partition_stats(&ds, &partition).unwrap();
    assert_eq!(stats.correlation, None);
    assert!(stats.support > 0.0);
}
