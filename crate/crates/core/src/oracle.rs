//! Exhaustive reference implementation for desk-scale cross-checking.
//!
//! Instead of growing candidates from the previous level the oracle
//! enumerates every bipartition of every k-subset of the frequent items
//! and applies the candidate-membership rule directly, so it exercises
//! none of the miner's candidate-generation machinery. Its statistics are
//! separate two-pass transcriptions of the support, confidence, and
//! correlation formulas with no shared code in [`crate::stats`].
//!
//! Deliberately naive and single-threaded; guarded to at most
//! [`ORACLE_MAX_ITEMS`] items to keep the enumeration tractable.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::FuzzyDataset;
use crate::fmath;
use crate::miner::{
    canonical_rule_order, FuzzyCorrelationRule, Level, LevelSets, MinerConfig, MinerError,
    ScoredCandidate, TargetPolicy,
};
use crate::stats::{Bipartition, Itemset, PartitionStats};

/// Largest item count the oracle will enumerate.
pub const ORACLE_MAX_ITEMS: usize = 12;

/// Errors raised by the oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// The dataset has too many items for exhaustive enumeration.
    InstanceTooLarge {
        items: usize,
        limit: usize,
    },
    Mining(MinerError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::InstanceTooLarge { items, limit } => {
                write!(
                    f,
                    "instance has {items} items, more than the oracle limit of {limit}"
                )
            }
            OracleError::Mining(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<MinerError> for OracleError {
    fn from(e: MinerError) -> Self {
        OracleError::Mining(e)
    }
}

/// Minimum membership of `items` in one record, written independently of
/// the statistics kernel.
fn sequence_of(ds: &FuzzyDataset, items: &[usize]) -> Vec<f64> {
    let mut seq = Vec::with_capacity(ds.n());
    for record in 0..ds.n() {
        let mut degree = ds.membership(record, items[0]);
        for &item in &items[1..] {
            let v = ds.membership(record, item);
            if v < degree {
                degree = v;
            }
        }
        seq.push(degree);
    }
    seq
}

/// Transcribed fuzzy support: mean over records of the min-membership.
fn transcribed_support(ds: &FuzzyDataset, items: &[usize]) -> f64 {
    let mut total = 0.0;
    for record in 0..ds.n() {
        let mut degree = ds.membership(record, items[0]);
        for &item in &items[1..] {
            let v = ds.membership(record, item);
            if v < degree {
                degree = v;
            }
        }
        total += degree;
    }
    total / ds.n() as f64
}

fn sorted_union(a: &Itemset, b: &Itemset) -> Vec<usize> {
    let mut union: Vec<usize> = a.indices().iter().chain(b.indices()).copied().collect();
    union.sort_unstable();
    union
}

/// Literal two-pass evaluation of a bipartition's statistics: first pass
/// means, second pass covariance and variances (denominator n - 1), then
/// the correlation as covariance over the product of standard deviations.
pub fn naive_stats(
    ds: &FuzzyDataset,
    partition: &Bipartition,
) -> Result<PartitionStats, OracleError> {
    let n = ds.n();
    if n < 2 {
        return Err(OracleError::Mining(MinerError::TooFewRecords { n }));
    }

    let mu_a = sequence_of(ds, partition.side_a().indices());
    let mu_b = sequence_of(ds, partition.side_b().indices());

    let mut sum_a = 0.0;
    let mut sum_b = 0.0;
    for record in 0..n {
        sum_a += mu_a[record];
        sum_b += mu_b[record];
    }
    let mean_a = sum_a / n as f64;
    let mean_b = sum_b / n as f64;

    let mut covariance = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for record in 0..n {
        let da = mu_a[record] - mean_a;
        let db = mu_b[record] - mean_b;
        covariance += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    covariance /= (n - 1) as f64;
    var_a /= (n - 1) as f64;
    var_b /= (n - 1) as f64;

    // A constant side has zero variance even where the rounded mean
    // leaves a residual.
    let mut constant_a = true;
    let mut constant_b = true;
    for record in 0..n {
        if mu_a[record] != mu_a[0] {
            constant_a = false;
        }
        if mu_b[record] != mu_b[0] {
            constant_b = false;
        }
    }
    if constant_a {
        var_a = 0.0;
    }
    if constant_b {
        var_b = 0.0;
    }

    let stddev_a = fmath::sqrt(var_a);
    let stddev_b = fmath::sqrt(var_b);
    let correlation = if stddev_a == 0.0 || stddev_b == 0.0 {
        None
    } else {
        Some(covariance / (stddev_a * stddev_b))
    };

    let support = transcribed_support(ds, &sorted_union(partition.side_a(), partition.side_b()));

    Ok(PartitionStats {
        support,
        correlation,
        mean_a,
        mean_b,
        stddev_a,
        stddev_b,
    })
}

fn resolve_target(
    ds: &FuzzyDataset,
    item_supports: &[f64],
    l1: &[usize],
    config: &MinerConfig,
) -> Result<usize, OracleError> {
    match &config.target {
        TargetPolicy::Auto => {
            let mut best: Option<usize> = None;
            for &j in l1 {
                if best.is_none_or(|b| item_supports[j] > item_supports[b]) {
                    best = Some(j);
                }
            }
            best.ok_or(OracleError::Mining(MinerError::NoFrequentItems))
        }
        TargetPolicy::Named(name) => {
            let j = ds.item_index(name).ok_or_else(|| {
                OracleError::Mining(MinerError::UnknownTarget { name: name.clone() })
            })?;
            if !l1.contains(&j) {
                return Err(OracleError::Mining(MinerError::TargetNotFrequent {
                    name: name.clone(),
                    support: item_supports[j],
                    threshold: config.min_support,
                }));
            }
            Ok(j)
        }
    }
}

/// All k-element subsets of `items` in lexicographic order.
fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn recurse(
        items: &[usize],
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            recurse(items, k, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every unordered bipartition of a subset; the side holding the smallest
/// element is built first, so each split appears exactly once.
fn bipartitions_of(subset: &[usize]) -> Vec<Bipartition> {
    let k = subset.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << (k - 1)) {
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        side_a.push(subset[0]);
        for (bit, &item) in subset[1..].iter().enumerate() {
            if mask & (1 << bit) != 0 {
                side_b.push(item);
            } else {
                side_a.push(item);
            }
        }
        let a = Itemset::new(side_a).expect("side_a holds at least the first element");
        let b = Itemset::new(side_b).expect("mask is non-zero so side_b is non-empty");
        out.push(Bipartition::new(a, b).expect("sides partition the subset"));
    }
    out
}

/// True when every one-item-smaller bipartition survived the previous level.
fn all_subs_survive(partition: &Bipartition, survivors: &BTreeSet<Bipartition>) -> bool {
    let sides = [
        (partition.side_a(), partition.side_b()),
        (partition.side_b(), partition.side_a()),
    ];
    for (side, other) in sides {
        if side.len() < 2 {
            continue;
        }
        for &dropped in side.indices() {
            let rest: Vec<usize> = side
                .indices()
                .iter()
                .copied()
                .filter(|&j| j != dropped)
                .collect();
            let reduced = Itemset::new(rest).expect("side keeps at least one item");
            let sub = Bipartition::new(reduced, other.clone()).expect("sides stay disjoint");
            if !survivors.contains(&sub) {
                return false;
            }
        }
    }
    true
}

/// Reference level computation by exhaustive enumeration.
pub fn oracle_levels(ds: &FuzzyDataset, config: &MinerConfig) -> Result<LevelSets, OracleError> {
    config.validate()?;
    let m = ds.m();
    if m > ORACLE_MAX_ITEMS {
        return Err(OracleError::InstanceTooLarge {
            items: m,
            limit: ORACLE_MAX_ITEMS,
        });
    }
    let n = ds.n();
    if n < 2 {
        return Err(OracleError::Mining(MinerError::TooFewRecords { n }));
    }

    let mut item_supports = Vec::with_capacity(m);
    for j in 0..m {
        let mut total = 0.0;
        for record in 0..n {
            total += ds.membership(record, j);
        }
        item_supports.push(total / n as f64);
    }

    let l1: Vec<usize> = (0..m)
        .filter(|&j| item_supports[j] >= config.min_support)
        .collect();
    let target = resolve_target(ds, &item_supports, &l1, config)?;
    let l1_prime: Vec<usize> = l1.iter().copied().filter(|&j| j != target).collect();
    let max_level = config.max_level.unwrap_or(m);

    let mut sets = LevelSets {
        target,
        item_supports,
        l1: l1.clone(),
        l1_prime,
        levels: Vec::new(),
        capped: false,
    };

    let mut survivors: BTreeSet<Bipartition> = BTreeSet::new();
    for k in 2..=l1.len() {
        let mut with_target = Vec::new();
        let mut without_target = Vec::new();
        for subset in k_subsets(&l1, k) {
            for partition in bipartitions_of(&subset) {
                if k > 2 && !all_subs_survive(&partition, &survivors) {
                    continue;
                }
                let stats = naive_stats(ds, &partition)?;
                let passed = stats.support >= config.min_support
                    && stats
                        .correlation
                        .is_some_and(|r| r >= config.min_correlation);
                let scored = ScoredCandidate {
                    partition,
                    stats,
                    passed,
                };
                if scored.partition.contains(target) {
                    with_target.push(scored);
                } else {
                    without_target.push(scored);
                }
            }
        }
        if with_target.is_empty() && without_target.is_empty() {
            break;
        }
        if k > max_level {
            sets.capped = true;
            break;
        }
        with_target.sort_by(|a, b| a.partition.cmp(&b.partition));
        without_target.sort_by(|a, b| a.partition.cmp(&b.partition));
        survivors = with_target
            .iter()
            .chain(without_target.iter())
            .filter(|sc| sc.passed)
            .map(|sc| sc.partition.clone())
            .collect();
        sets.levels.push(Level {
            k,
            with_target,
            without_target,
        });
    }

    Ok(sets)
}

/// Reference rule extraction over the oracle's levels.
pub fn oracle_mine(
    ds: &FuzzyDataset,
    config: &MinerConfig,
) -> Result<Vec<FuzzyCorrelationRule>, OracleError> {
    let sets = oracle_levels(ds, config)?;
    let mut rules = Vec::new();
    for level in &sets.levels {
        for sc in level.with_target.iter().filter(|sc| sc.passed) {
            let correlation = sc
                .stats
                .correlation
                .expect("surviving candidate has a defined correlation");
            let directions = [
                (sc.partition.side_a(), sc.partition.side_b()),
                (sc.partition.side_b(), sc.partition.side_a()),
            ];
            for (antecedent, consequent) in directions {
                let union = sorted_union(antecedent, consequent);
                let confidence =
                    transcribed_support(ds, &union) / transcribed_support(ds, antecedent.indices());
                if confidence >= config.min_confidence {
                    rules.push(FuzzyCorrelationRule {
                        antecedent: antecedent.clone(),
                        consequent: consequent.clone(),
                        support: sc.stats.support,
                        confidence,
                        correlation,
                    });
                }
            }
        }
    }
    rules.sort_by(|a, b| canonical_rule_order(a, b, ds.item_names()));
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn dataset(rows: &[&[f64]]) -> FuzzyDataset {
        let m = rows[0].len();
        let item_names = (1..=m).map(|j| format!("f{j}")).collect();
        let record_ids = (1..=rows.len()).map(|i| format!("t{i}")).collect();
        let values = rows.iter().flat_map(|r| r.iter().copied()).collect();
        FuzzyDataset::new(item_names, record_ids, values).unwrap()
    }

    #[test]
    fn guards_against_large_instances() {
        let names: Vec<_> = (0..13).map(|j| format!("f{j}")).collect();
        let ds = FuzzyDataset::new(names, vec!["a".into(), "b".into()], vec![0.5; 26]).unwrap();
        let err = oracle_levels(&ds, &MinerConfig::new(0.25, 0.8, 0.3)).unwrap_err();
        assert_eq!(
            err,
            OracleError::InstanceTooLarge {
                items: 13,
                limit: 12
            }
        );
    }

    #[test]
    fn rejects_single_record() {
        let ds = dataset(&[&[0.5, 0.6]]);
        assert_eq!(
            oracle_levels(&ds, &MinerConfig::new(0.25, 0.8, 0.3)).unwrap_err(),
            OracleError::Mining(MinerError::TooFewRecords { n: 1 })
        );
    }

    #[test]
    fn single_item_dataset_has_no_levels() {
        let ds = dataset(&[&[0.5], &[0.7]]);
        let sets = oracle_levels(&ds, &MinerConfig::new(0.25, 0.8, 0.3)).unwrap();
        assert_eq!(sets.target, 0);
        assert!(sets.levels.is_empty());
        assert!(oracle_mine(&ds, &MinerConfig::new(0.25, 0.8, 0.3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bipartition_enumeration_counts() {
        // 2^(k-1) - 1 unordered splits of a k-set.
        assert_eq!(bipartitions_of(&[0, 1]).len(), 1);
        assert_eq!(bipartitions_of(&[0, 1, 2]).len(), 3);
        assert_eq!(bipartitions_of(&[0, 1, 2, 3]).len(), 7);
    }

    #[test]
    fn k_subset_enumeration_counts() {
        let items = [0, 1, 2, 3, 4];
        assert_eq!(k_subsets(&items, 2).len(), 10);
        assert_eq!(k_subsets(&items, 3).len(), 10);
        assert_eq!(k_subsets(&items, 5).len(), 1);
    }

    #[test]
    fn naive_stats_on_constant_side_is_undefined() {
        let ds = dataset(&[&[0.5, 0.1], &[0.5, 0.9]]);
        let p = Bipartition::new(Itemset::singleton(0), Itemset::singleton(1)).unwrap();
        let stats = naive_stats(&ds, &p).unwrap();
        assert_eq!(stats.correlation, None);
        assert_eq!(stats.mean_a, 0.5);
    }
}
