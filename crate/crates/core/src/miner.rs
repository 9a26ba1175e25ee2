//! Target-oriented level-wise mining.
//!
//! The algorithm selects a target item (the most supported one unless a
//! name is forced), seeds level 2 with item pairs, and then grows levels:
//! a bipartition of a k-itemset is a candidate at level k exactly when
//! every immediate sub-bipartition — obtained by deleting one item from a
//! side of two or more items — survived level k - 1. Candidates whose
//! union contains the target are tracked separately from those without it;
//! only target-containing survivors yield rules, while target-free
//! survivors keep feeding candidate growth.
//!
//! A candidate survives a level when its fuzzy support and its correlation
//! both clear the configured thresholds; an undefined correlation (a
//! zero-variance side) never passes. The loop stops when a level produces
//! no candidates at all, or at the `max_level` safety cap.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::dataset::FuzzyDataset;
use crate::stats::{self, Bipartition, Itemset, PartitionStats, StatsError};

/// How the target item is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetPolicy {
    /// The frequent item with the largest support; ties go to the lowest index.
    Auto,
    /// A specific item name, which must itself be frequent.
    Named(String),
}

/// Mining thresholds and options.
#[derive(Debug, Clone, PartialEq)]
pub struct MinerConfig {
    /// Minimal fuzzy support, in (0, 1].
    pub min_support: f64,
    /// Minimal fuzzy confidence, in (0, 1].
    pub min_confidence: f64,
    /// Minimal fuzzy correlation coefficient, in [-1, 1].
    pub min_correlation: f64,
    pub target: TargetPolicy,
    /// Deepest level to explore; defaults to the item count.
    pub max_level: Option<usize>,
}

impl MinerConfig {
    pub fn new(min_support: f64, min_confidence: f64, min_correlation: f64) -> Self {
        Self {
            min_support,
            min_confidence,
            min_correlation,
            target: TargetPolicy::Auto,
            max_level: None,
        }
    }

    pub fn with_target(mut self, name: impl Into<String>) -> Self {
        self.target = TargetPolicy::Named(name.into());
        self
    }

    pub fn with_max_level(mut self, level: usize) -> Self {
        self.max_level = Some(level);
        self
    }

    pub fn validate(&self) -> Result<(), MinerError> {
        if !(self.min_support > 0.0 && self.min_support <= 1.0) {
            return Err(MinerError::InvalidConfig {
                reason: "min_support must be in (0, 1]",
            });
        }
        if !(self.min_confidence > 0.0 && self.min_confidence <= 1.0) {
            return Err(MinerError::InvalidConfig {
                reason: "min_confidence must be in (0, 1]",
            });
        }
        if !(self.min_correlation >= -1.0 && self.min_correlation <= 1.0) {
            return Err(MinerError::InvalidConfig {
                reason: "min_correlation must be in [-1, 1]",
            });
        }
        if let Some(level) = self.max_level {
            if level < 2 {
                return Err(MinerError::InvalidConfig {
                    reason: "max_level must be at least 2",
                });
            }
        }
        Ok(())
    }
}

/// Errors raised while mining.
#[derive(Debug, Clone, PartialEq)]
pub enum MinerError {
    /// No item reaches the support threshold.
    NoFrequentItems,
    /// A forced target exists but is below the support threshold.
    TargetNotFrequent {
        name: String,
        support: f64,
        threshold: f64,
    },
    /// A forced target name is not in the dataset.
    UnknownTarget {
        name: String,
    },
    TooFewRecords {
        n: usize,
    },
    InvalidConfig {
        reason: &'static str,
    },
    Stats(StatsError),
}

impl fmt::Display for MinerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinerError::NoFrequentItems => {
                write!(f, "no item reaches the minimal fuzzy support")
            }
            MinerError::TargetNotFrequent {
                name,
                support,
                threshold,
            } => write!(
                f,
                "target `{name}` has support {support}, below the threshold {threshold}"
            ),
            MinerError::UnknownTarget { name } => {
                write!(f, "target `{name}` is not an item of the dataset")
            }
            MinerError::TooFewRecords { n } => {
                write!(f, "mining needs at least 2 records, got {n}")
            }
            MinerError::InvalidConfig { reason } => write!(f, "invalid config: {reason}"),
            MinerError::Stats(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MinerError {}

impl From<StatsError> for MinerError {
    fn from(e: StatsError) -> Self {
        MinerError::Stats(e)
    }
}

/// A candidate bipartition with its statistics and threshold verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredCandidate {
    pub partition: Bipartition,
    pub stats: PartitionStats,
    pub passed: bool,
}

/// One mined level: every candidate of size k, split by target containment.
///
/// Survivors are the candidates with `passed` set; the full candidate lists
/// are kept for auditing.
#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    pub k: usize,
    pub with_target: Vec<ScoredCandidate>,
    pub without_target: Vec<ScoredCandidate>,
}

impl Level {
    pub fn survivors_with_target(&self) -> impl Iterator<Item = &ScoredCandidate> {
        self.with_target.iter().filter(|sc| sc.passed)
    }

    pub fn survivors_without_target(&self) -> impl Iterator<Item = &ScoredCandidate> {
        self.without_target.iter().filter(|sc| sc.passed)
    }
}

/// Complete level structure of a mining run.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSets {
    /// Index of the target item.
    pub target: usize,
    /// Support of every item, by index.
    pub item_supports: Vec<f64>,
    /// Frequent items (support >= min_support), ascending.
    pub l1: Vec<usize>,
    /// Frequent items minus the target, ascending.
    pub l1_prime: Vec<usize>,
    /// Levels k = 2, 3, ... that produced at least one candidate.
    pub levels: Vec<Level>,
    /// True when the max_level cap cut the run short.
    pub capped: bool,
}

impl LevelSets {
    pub fn level(&self, k: usize) -> Option<&Level> {
        self.levels.iter().find(|level| level.k == k)
    }

    /// Deepest populated level, or 1 when no pair level exists.
    pub fn deepest_level(&self) -> usize {
        self.levels.last().map_or(1, |level| level.k)
    }
}

/// A directed rule that cleared all three thresholds.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyCorrelationRule {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    pub support: f64,
    pub confidence: f64,
    pub correlation: f64,
}

/// A directed candidate rule with its confidence verdict; the ones with
/// `passed` set become [`FuzzyCorrelationRule`]s.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleCandidate {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    pub support: f64,
    pub confidence: f64,
    pub correlation: f64,
    pub passed: bool,
}

/// Everything a mining run produced, in deterministic order.
#[derive(Debug, Clone, PartialEq)]
pub struct MiningReport {
    pub config: MinerConfig,
    pub item_names: Vec<String>,
    pub target_name: String,
    pub levels: LevelSets,
    /// Every direction considered, including the confidence near-misses.
    pub rule_candidates: Vec<RuleCandidate>,
    pub rules: Vec<FuzzyCorrelationRule>,
    pub diagnostics: Vec<String>,
}

/// Computes the frequent item set L_1 and resolves the target item.
///
/// With [`TargetPolicy::Auto`] the target is the frequent item with the
/// largest support, ties broken by the lowest index.
pub fn select_target(
    ds: &FuzzyDataset,
    min_support: f64,
    policy: &TargetPolicy,
) -> Result<(Vec<usize>, usize), MinerError> {
    let mut l1 = Vec::new();
    let mut best: Option<(usize, f64)> = None;
    for j in 0..ds.m() {
        let support = stats::item_support(ds, j)?;
        if support >= min_support {
            l1.push(j);
            if best.is_none_or(|(_, s)| support > s) {
                best = Some((j, support));
            }
        }
    }
    let target = match policy {
        TargetPolicy::Auto => best.ok_or(MinerError::NoFrequentItems)?.0,
        TargetPolicy::Named(name) => {
            let j = ds
                .item_index(name)
                .ok_or_else(|| MinerError::UnknownTarget { name: name.clone() })?;
            if !l1.contains(&j) {
                return Err(MinerError::TargetNotFrequent {
                    name: name.clone(),
                    support: stats::item_support(ds, j)?,
                    threshold: min_support,
                });
            }
            j
        }
    };
    Ok((l1, target))
}

/// Level-2 candidates: pairs of a frequent item with the target (C_2) and
/// pairs of two frequent non-target items (C'_2), both canonically sorted.
pub fn generate_level2(l1: &[usize], target: usize) -> (Vec<Bipartition>, Vec<Bipartition>) {
    let others: Vec<usize> = l1.iter().copied().filter(|&j| j != target).collect();
    let mut with_target = Vec::with_capacity(others.len());
    for &item in &others {
        let pair = Bipartition::new(Itemset::singleton(item), Itemset::singleton(target))
            .expect("distinct singletons are disjoint");
        with_target.push(pair);
    }
    let mut without_target = Vec::new();
    for (i, &a) in others.iter().enumerate() {
        for &b in &others[i + 1..] {
            let pair = Bipartition::new(Itemset::singleton(a), Itemset::singleton(b))
                .expect("distinct singletons are disjoint");
            without_target.push(pair);
        }
    }
    with_target.sort();
    without_target.sort();
    (with_target, without_target)
}

fn passes(stats: &PartitionStats, min_support: f64, min_correlation: f64) -> bool {
    stats.support >= min_support && stats.correlation.is_some_and(|r| r >= min_correlation)
}

/// Scores candidates against the support and correlation thresholds and
/// keeps exactly the passing ones.
pub fn filter_level(
    ds: &FuzzyDataset,
    candidates: &[Bipartition],
    min_support: f64,
    min_correlation: f64,
) -> Result<Vec<(Bipartition, PartitionStats)>, MinerError> {
    let mut kept = Vec::new();
    for partition in candidates {
        let stats = stats::partition_stats(ds, partition)?;
        if passes(&stats, min_support, min_correlation) {
            kept.push((partition.clone(), stats));
        }
    }
    Ok(kept)
}

fn score_level(
    ds: &FuzzyDataset,
    candidates: &[Bipartition],
    config: &MinerConfig,
    k: usize,
    diagnostics: &mut Vec<String>,
) -> Result<Vec<ScoredCandidate>, MinerError> {
    let mut scored = Vec::with_capacity(candidates.len());
    for partition in candidates {
        let stats = stats::partition_stats(ds, partition)?;
        if stats.correlation.is_none() {
            diagnostics.push(format!(
                "level {k}: candidate {} has a zero-variance side; correlation is undefined and the candidate is dropped",
                partition.label(ds.item_names())
            ));
        }
        let passed = passes(&stats, config.min_support, config.min_correlation);
        scored.push(ScoredCandidate {
            partition: partition.clone(),
            stats,
            passed,
        });
    }
    Ok(scored)
}

/// Level-k candidates (k >= 3) from the level k-1 survivors.
///
/// A bipartition of a k-itemset qualifies exactly when every immediate
/// sub-bipartition (one item deleted from a side of two or more items)
/// survived level k - 1. Candidates containing the target go to the first
/// list, the rest to the second; both come out canonically sorted.
pub fn generate_candidates_k(levels: &LevelSets, k: usize) -> (Vec<Bipartition>, Vec<Bipartition>) {
    assert!(k >= 3, "level-wise generation starts at k = 3");
    let Some(prev) = levels.level(k - 1) else {
        return (Vec::new(), Vec::new());
    };
    let survivors: BTreeSet<Bipartition> = prev
        .with_target
        .iter()
        .chain(prev.without_target.iter())
        .filter(|sc| sc.passed)
        .map(|sc| sc.partition.clone())
        .collect();
    if survivors.is_empty() {
        return (Vec::new(), Vec::new());
    }

    let mut candidates = BTreeSet::new();
    for partition in &survivors {
        for &item in &levels.l1 {
            if partition.contains(item) {
                continue;
            }
            let grown_a = Bipartition::new(
                partition.side_a().with_item(item),
                partition.side_b().clone(),
            )
            .expect("extension keeps sides disjoint");
            let grown_b = Bipartition::new(
                partition.side_a().clone(),
                partition.side_b().with_item(item),
            )
            .expect("extension keeps sides disjoint");
            candidates.insert(grown_a);
            candidates.insert(grown_b);
        }
    }

    let mut with_target = Vec::new();
    let mut without_target = Vec::new();
    for candidate in candidates {
        if !all_sub_bipartitions_survive(&candidate, &survivors) {
            continue;
        }
        if candidate.contains(levels.target) {
            with_target.push(candidate);
        } else {
            without_target.push(candidate);
        }
    }
    (with_target, without_target)
}

fn all_sub_bipartitions_survive(
    partition: &Bipartition,
    survivors: &BTreeSet<Bipartition>,
) -> bool {
    let sides = [
        (partition.side_a(), partition.side_b()),
        (partition.side_b(), partition.side_a()),
    ];
    for (side, other) in sides {
        if side.len() < 2 {
            continue;
        }
        for &item in side.indices() {
            let reduced = side
                .without_item(item)
                .expect("side has at least two items");
            let sub = Bipartition::new(reduced, other.clone()).expect("subsets stay disjoint");
            if !survivors.contains(&sub) {
                return false;
            }
        }
    }
    true
}

fn directed_order(
    a: (&Itemset, &Itemset, f64),
    b: (&Itemset, &Itemset, f64),
    item_names: &[String],
) -> Ordering {
    let names = |set: &Itemset| -> Vec<&str> {
        set.indices()
            .iter()
            .map(|&j| item_names.get(j).map_or("", String::as_str))
            .collect()
    };
    let size_a = a.0.len() + a.1.len();
    let size_b = b.0.len() + b.1.len();
    size_a
        .cmp(&size_b)
        .then_with(|| b.2.total_cmp(&a.2))
        .then_with(|| names(a.0).cmp(&names(b.0)))
        .then_with(|| names(a.1).cmp(&names(b.1)))
}

/// Canonical rule order: smaller rules first, then higher confidence, then
/// lexicographic antecedent and consequent names.
pub fn canonical_rule_order(
    a: &FuzzyCorrelationRule,
    b: &FuzzyCorrelationRule,
    item_names: &[String],
) -> Ordering {
    directed_order(
        (&a.antecedent, &a.consequent, a.confidence),
        (&b.antecedent, &b.consequent, b.confidence),
        item_names,
    )
}

/// Both directions of every target-containing survivor with their
/// confidences and the confidence verdict, canonically sorted. This is the
/// full audit view behind [`extract_rules`].
pub fn enumerate_rule_candidates(
    ds: &FuzzyDataset,
    levels: &LevelSets,
    min_confidence: f64,
) -> Result<Vec<RuleCandidate>, MinerError> {
    let mut candidates = Vec::new();
    for level in &levels.levels {
        for sc in level.survivors_with_target() {
            let correlation = sc
                .stats
                .correlation
                .expect("surviving candidate has a defined correlation");
            let directions = [
                (sc.partition.side_a(), sc.partition.side_b()),
                (sc.partition.side_b(), sc.partition.side_a()),
            ];
            for (antecedent, consequent) in directions {
                let confidence = stats::fuzzy_confidence(ds, antecedent, consequent)?;
                candidates.push(RuleCandidate {
                    antecedent: antecedent.clone(),
                    consequent: consequent.clone(),
                    support: sc.stats.support,
                    confidence,
                    correlation,
                    passed: confidence >= min_confidence,
                });
            }
        }
    }
    candidates.sort_by(|a, b| {
        directed_order(
            (&a.antecedent, &a.consequent, a.confidence),
            (&b.antecedent, &b.consequent, b.confidence),
            ds.item_names(),
        )
    });
    Ok(candidates)
}

/// Turns target-containing survivors into directed rules and keeps those
/// whose confidence clears the threshold.
pub fn extract_rules(
    ds: &FuzzyDataset,
    levels: &LevelSets,
    min_confidence: f64,
) -> Result<Vec<FuzzyCorrelationRule>, MinerError> {
    let rules = enumerate_rule_candidates(ds, levels, min_confidence)?
        .into_iter()
        .filter(|candidate| candidate.passed)
        .map(|candidate| FuzzyCorrelationRule {
            antecedent: candidate.antecedent,
            consequent: candidate.consequent,
            support: candidate.support,
            confidence: candidate.confidence,
            correlation: candidate.correlation,
        })
        .collect();
    Ok(rules)
}

/// Runs the complete mining pipeline and returns an auditable report.
pub fn mine(ds: &FuzzyDataset, config: &MinerConfig) -> Result<MiningReport, MinerError> {
    config.validate()?;
    let n = ds.n();
    if n < 2 {
        return Err(MinerError::TooFewRecords { n });
    }

    let mut item_supports = Vec::with_capacity(ds.m());
    for j in 0..ds.m() {
        item_supports.push(stats::item_support(ds, j)?);
    }

    let (l1, target) = select_target(ds, config.min_support, &config.target)?;
    let l1_prime: Vec<usize> = l1.iter().copied().filter(|&j| j != target).collect();
    let max_level = config.max_level.unwrap_or(ds.m());

    let mut sets = LevelSets {
        target,
        item_supports,
        l1: l1.clone(),
        l1_prime,
        levels: Vec::new(),
        capped: false,
    };
    let mut diagnostics = Vec::new();

    let (c2, c2_prime) = generate_level2(&l1, target);
    if !(c2.is_empty() && c2_prime.is_empty()) {
        let with_target = score_level(ds, &c2, config, 2, &mut diagnostics)?;
        let without_target = score_level(ds, &c2_prime, config, 2, &mut diagnostics)?;
        sets.levels.push(Level {
            k: 2,
            with_target,
            without_target,
        });

        let mut k = 3;
        loop {
            let (ck, ck_prime) = generate_candidates_k(&sets, k);
            if ck.is_empty() && ck_prime.is_empty() {
                break;
            }
            if k > max_level {
                sets.capped = true;
                diagnostics.push(format!(
                    "level cap {max_level} reached; {} candidate(s) of size {k} were not explored",
                    ck.len() + ck_prime.len()
                ));
                break;
            }
            let with_target = score_level(ds, &ck, config, k, &mut diagnostics)?;
            let without_target = score_level(ds, &ck_prime, config, k, &mut diagnostics)?;
            sets.levels.push(Level {
                k,
                with_target,
                without_target,
            });
            k += 1;
        }
    }

    let rule_candidates = enumerate_rule_candidates(ds, &sets, config.min_confidence)?;
    let rules = rule_candidates
        .iter()
        .filter(|candidate| candidate.passed)
        .map(|candidate| FuzzyCorrelationRule {
            antecedent: candidate.antecedent.clone(),
            consequent: candidate.consequent.clone(),
            support: candidate.support,
            confidence: candidate.confidence,
            correlation: candidate.correlation,
        })
        .collect();
    let target_name = ds.item_names()[target].clone();

    Ok(MiningReport {
        config: config.clone(),
        item_names: ds.item_names().to_vec(),
        target_name,
        levels: sets,
        rule_candidates,
        rules,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn dataset(rows: &[&[f64]]) -> FuzzyDataset {
        let m = rows[0].len();
        let item_names = (1..=m).map(|j| format!("f{j}")).collect();
        let record_ids = (1..=rows.len()).map(|i| format!("t{i}")).collect();
        let values = rows.iter().flat_map(|r| r.iter().copied()).collect();
        FuzzyDataset::new(item_names, record_ids, values).unwrap()
    }

    #[test]
    fn config_validation_ranges() {
        assert!(MinerConfig::new(0.25, 0.8, 0.3).validate().is_ok());
        assert!(MinerConfig::new(0.0, 0.8, 0.3).validate().is_err());
        assert!(MinerConfig::new(1.5, 0.8, 0.3).validate().is_err());
        assert!(MinerConfig::new(0.25, 0.0, 0.3).validate().is_err());
        assert!(MinerConfig::new(0.25, 0.8, -1.5).validate().is_err());
        assert!(MinerConfig::new(0.25, 0.8, 1.0).validate().is_ok());
        assert!(MinerConfig::new(0.25, 0.8, 0.3)
            .with_max_level(1)
            .validate()
            .is_err());
        assert!(MinerConfig::new(f64::NAN, 0.8, 0.3).validate().is_err());
    }

    #[test]
    fn target_tie_breaks_to_lowest_index() {
        // Columns 0 and 1 hold the same values, so their supports tie.
        let ds = dataset(&[&[0.4, 0.4, 0.1], &[0.6, 0.6, 0.2]]);
        let (l1, target) = select_target(&ds, 0.1, &TargetPolicy::Auto).unwrap();
        assert_eq!(l1, vec![0, 1, 2]);
        assert_eq!(target, 0);
    }

    #[test]
    fn named_target_errors() {
        let ds = dataset(&[&[0.4, 0.1], &[0.6, 0.1]]);
        assert_eq!(
            select_target(&ds, 0.2, &TargetPolicy::Named("nope".into())).unwrap_err(),
            MinerError::UnknownTarget {
                name: "nope".into()
            }
        );
        let err = select_target(&ds, 0.2, &TargetPolicy::Named("f2".into())).unwrap_err();
        assert!(matches!(err, MinerError::TargetNotFrequent { .. }));
    }

    #[test]
    fn no_frequent_items() {
        let ds = dataset(&[&[0.1, 0.1], &[0.1, 0.1]]);
        assert_eq!(
            select_target(&ds, 0.5, &TargetPolicy::Auto).unwrap_err(),
            MinerError::NoFrequentItems
        );
    }

    #[test]
    fn level2_with_single_other_item() {
        let (c2, c2_prime) = generate_level2(&[0, 3], 3);
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[0].side_a().indices(), &[0]);
        assert_eq!(c2[0].side_b().indices(), &[3]);
        assert!(c2_prime.is_empty());
    }

    #[test]
    fn single_item_dataset_mines_no_rules() {
        let ds = dataset(&[&[0.5], &[0.7]]);
        let report = mine(&ds, &MinerConfig::new(0.25, 0.8, 0.3)).unwrap();
        assert_eq!(report.levels.target, 0);
        assert_eq!(report.target_name, "f1");
        assert!(report.levels.levels.is_empty());
        assert!(report.rules.is_empty());
        assert!(!report.levels.capped);
    }

    #[test]
    fn mining_rejects_single_record() {
        let ds = dataset(&[&[0.5, 0.6]]);
        assert_eq!(
            mine(&ds, &MinerConfig::new(0.25, 0.8, 0.3)).unwrap_err(),
            MinerError::TooFewRecords { n: 1 }
        );
    }

    #[test]
    fn zero_variance_candidate_reports_diagnostic_and_is_pruned() {
        // Column 1 is constant, so every pair with it has undefined correlation.
        let ds = dataset(&[&[0.2, 0.5], &[0.9, 0.5], &[0.4, 0.5]]);
        let report = mine(&ds, &MinerConfig::new(0.1, 0.5, -1.0)).unwrap();
        assert!(report.diagnostics.iter().any(|d| d.contains("undefined")));
        let level2 = report.levels.level(2).unwrap();
        assert!(level2.with_target.iter().all(|sc| !sc.passed));
        assert!(report.rules.is_empty());
    }

    #[test]
    fn max_level_cap_flags_report() {
        // Three mutually correlated items; unlimited mining reaches level 3.
        let ds = dataset(&[
            &[0.1, 0.1, 0.1],
            &[0.9, 0.9, 0.9],
            &[0.2, 0.2, 0.2],
            &[0.8, 0.8, 0.8],
        ]);
        let unlimited = mine(&ds, &MinerConfig::new(0.1, 0.5, 0.5)).unwrap();
        assert_eq!(unlimited.levels.deepest_level(), 3);
        assert!(!unlimited.levels.capped);

        let capped = mine(&ds, &MinerConfig::new(0.1, 0.5, 0.5).with_max_level(2)).unwrap();
        assert_eq!(capped.levels.deepest_level(), 2);
        assert!(capped.levels.capped);
        assert!(capped.diagnostics.iter().any(|d| d.contains("level cap")));
    }

    #[test]
    fn filter_level_empty_candidates() {
        let ds = dataset(&[&[0.5, 0.6], &[0.7, 0.8]]);
        assert!(filter_level(&ds, &[], 0.25, 0.3).unwrap().is_empty());
    }

    #[test]
    fn generated_candidates_are_sorted_and_deduplicated() {
        let ds = dataset(&[
            &[0.1, 0.1, 0.1],
            &[0.9, 0.9, 0.9],
            &[0.2, 0.2, 0.2],
            &[0.8, 0.8, 0.8],
        ]);
        let report = mine(&ds, &MinerConfig::new(0.1, 0.5, 0.5)).unwrap();
        let level3 = report.levels.level(3).unwrap();
        let partitions: Vec<&Bipartition> =
            level3.with_target.iter().map(|sc| &sc.partition).collect();
        let mut sorted = partitions.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(partitions, sorted);
        // All three bipartitions of the triple survive here.
        assert_eq!(level3.with_target.len(), 3);
        assert!(level3.without_target.is_empty());
    }
}
