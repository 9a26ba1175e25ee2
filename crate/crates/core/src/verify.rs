//! Structural comparison of a miner run against the oracle.
//!
//! Used by the `check` command and the equivalence test harness. Set
//! structure (levels, candidates, verdicts, rules) must match exactly;
//! statistics must agree within [`STAT_TOLERANCE`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::miner::{FuzzyCorrelationRule, LevelSets, MiningReport, ScoredCandidate};

/// Largest accepted absolute difference between miner and oracle statistics.
pub const STAT_TOLERANCE: f64 = 1e-12;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= STAT_TOLERANCE
}

fn set_label(indices: &[usize], names: &[String]) -> String {
    let mut out = String::from("{");
    for (i, &j) in indices.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        match names.get(j) {
            Some(name) => out.push_str(name),
            None => out.push_str(&format!("#{j}")),
        }
    }
    out.push('}');
    out
}

fn diff_candidates(
    which: &str,
    k: usize,
    miner: &[ScoredCandidate],
    oracle: &[ScoredCandidate],
    names: &[String],
    out: &mut Vec<String>,
) {
    if miner.len() != oracle.len() {
        out.push(format!(
            "level {k} {which}: miner has {} candidates, oracle has {}",
            miner.len(),
            oracle.len()
        ));
        let miner_set: Vec<String> = miner.iter().map(|sc| sc.partition.label(names)).collect();
        let oracle_set: Vec<String> = oracle.iter().map(|sc| sc.partition.label(names)).collect();
        for label in miner_set.iter().filter(|l| !oracle_set.contains(l)) {
            out.push(format!("level {k} {which}: only in miner: {label}"));
        }
        for label in oracle_set.iter().filter(|l| !miner_set.contains(l)) {
            out.push(format!("level {k} {which}: only in oracle: {label}"));
        }
        return;
    }
    for (ours, theirs) in miner.iter().zip(oracle) {
        let label = ours.partition.label(names);
        if ours.partition != theirs.partition {
            out.push(format!(
                "level {k} {which}: candidate order differs: miner {} vs oracle {}",
                label,
                theirs.partition.label(names)
            ));
            continue;
        }
        if ours.passed != theirs.passed {
            out.push(format!(
                "level {k} {which}: {label}: miner passed={}, oracle passed={}",
                ours.passed, theirs.passed
            ));
        }
        if !close(ours.stats.support, theirs.stats.support) {
            out.push(format!(
                "level {k} {which}: {label}: support {} vs {}",
                ours.stats.support, theirs.stats.support
            ));
        }
        match (ours.stats.correlation, theirs.stats.correlation) {
            (None, None) => {}
            (Some(a), Some(b)) if close(a, b) => {}
            (a, b) => out.push(format!(
                "level {k} {which}: {label}: correlation {a:?} vs {b:?}"
            )),
        }
        for (name, a, b) in [
            ("mean_a", ours.stats.mean_a, theirs.stats.mean_a),
            ("mean_b", ours.stats.mean_b, theirs.stats.mean_b),
            ("stddev_a", ours.stats.stddev_a, theirs.stats.stddev_a),
            ("stddev_b", ours.stats.stddev_b, theirs.stats.stddev_b),
        ] {
            if !close(a, b) {
                out.push(format!("level {k} {which}: {label}: {name} {a} vs {b}"));
            }
        }
    }
}

fn diff_rules(
    miner: &[FuzzyCorrelationRule],
    oracle: &[FuzzyCorrelationRule],
    names: &[String],
    out: &mut Vec<String>,
) {
    let rule_label = |r: &FuzzyCorrelationRule| {
        format!(
            "{} -> {}",
            set_label(r.antecedent.indices(), names),
            set_label(r.consequent.indices(), names)
        )
    };
    if miner.len() != oracle.len() {
        out.push(format!(
            "rule count differs: miner {} vs oracle {}",
            miner.len(),
            oracle.len()
        ));
        let miner_set: Vec<String> = miner.iter().map(&rule_label).collect();
        let oracle_set: Vec<String> = oracle.iter().map(&rule_label).collect();
        for label in miner_set.iter().filter(|l| !oracle_set.contains(l)) {
            out.push(format!("rule only in miner: {label}"));
        }
        for label in oracle_set.iter().filter(|l| !miner_set.contains(l)) {
            out.push(format!("rule only in oracle: {label}"));
        }
        return;
    }
    for (ours, theirs) in miner.iter().zip(oracle) {
        let label = rule_label(ours);
        if ours.antecedent != theirs.antecedent || ours.consequent != theirs.consequent {
            out.push(format!(
                "rule order differs: miner {} vs oracle {}",
                label,
                rule_label(theirs)
            ));
            continue;
        }
        for (name, a, b) in [
            ("support", ours.support, theirs.support),
            ("confidence", ours.confidence, theirs.confidence),
            ("correlation", ours.correlation, theirs.correlation),
        ] {
            if !close(a, b) {
                out.push(format!("rule {label}: {name} {a} vs {b}"));
            }
        }
    }
}

/// Compares a miner report against an oracle run. Returns one line per
/// discrepancy; an empty list means the runs agree.
pub fn diff_runs(
    report: &MiningReport,
    oracle_levels: &LevelSets,
    oracle_rules: &[FuzzyCorrelationRule],
) -> Vec<String> {
    let mut out = Vec::new();
    let names = &report.item_names;
    let miner_levels = &report.levels;

    if miner_levels.target != oracle_levels.target {
        out.push(format!(
            "target differs: miner {} vs oracle {}",
            set_label(&[miner_levels.target], names),
            set_label(&[oracle_levels.target], names)
        ));
    }
    if miner_levels.l1 != oracle_levels.l1 {
        out.push(format!(
            "L_1 differs: miner {} vs oracle {}",
            set_label(&miner_levels.l1, names),
            set_label(&oracle_levels.l1, names)
        ));
    }
    if miner_levels.l1_prime != oracle_levels.l1_prime {
        out.push(format!(
            "L'_1 differs: miner {} vs oracle {}",
            set_label(&miner_levels.l1_prime, names),
            set_label(&oracle_levels.l1_prime, names)
        ));
    }
    if miner_levels.capped != oracle_levels.capped {
        out.push(format!(
            "cap flag differs: miner {} vs oracle {}",
            miner_levels.capped, oracle_levels.capped
        ));
    }
    for (j, (a, b)) in miner_levels
        .item_supports
        .iter()
        .zip(&oracle_levels.item_supports)
        .enumerate()
    {
        if !close(*a, *b) {
            out.push(format!(
                "item support differs for {}: {} vs {}",
                set_label(&[j], names),
                a,
                b
            ));
        }
    }

    if miner_levels.levels.len() != oracle_levels.levels.len() {
        out.push(format!(
            "level count differs: miner reaches k={}, oracle reaches k={}",
            miner_levels.deepest_level(),
            oracle_levels.deepest_level()
        ));
    }
    for (ours, theirs) in miner_levels.levels.iter().zip(&oracle_levels.levels) {
        if ours.k != theirs.k {
            out.push(format!(
                "level numbering differs: miner k={} vs oracle k={}",
                ours.k, theirs.k
            ));
            break;
        }
        diff_candidates(
            "with target",
            ours.k,
            &ours.with_target,
            &theirs.with_target,
            names,
            &mut out,
        );
        diff_candidates(
            "without target",
            ours.k,
            &ours.without_target,
            &theirs.without_target,
            names,
            &mut out,
        );
    }

    diff_rules(&report.rules, oracle_rules, names, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::FuzzyDataset;
    use crate::miner::{mine, MinerConfig};
    use crate::oracle::{oracle_levels, oracle_mine};
    use alloc::vec;

    fn dataset() -> FuzzyDataset {
        let rows: [&[f64]; 4] = [
            &[0.1, 0.3, 0.9],
            &[0.9, 0.8, 0.2],
            &[0.4, 0.5, 0.5],
            &[0.7, 0.9, 0.1],
        ];
        let values = rows.iter().flat_map(|r| r.iter().copied()).collect();
        FuzzyDataset::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["r1".into(), "r2".into(), "r3".into(), "r4".into()],
            values,
        )
        .unwrap()
    }

    #[test]
    fn agreeing_runs_produce_no_diff() {
        let ds = dataset();
        let config = MinerConfig::new(0.2, 0.6, 0.1);
        let report = mine(&ds, &config).unwrap();
        let levels = oracle_levels(&ds, &config).unwrap();
        let rules = oracle_mine(&ds, &config).unwrap();
        assert_eq!(diff_runs(&report, &levels, &rules), Vec::<String>::new());
    }

    #[test]
    fn perturbed_run_is_reported() {
        let ds = dataset();
        let config = MinerConfig::new(0.2, 0.6, 0.1);
        let mut report = mine(&ds, &config).unwrap();
        let levels = oracle_levels(&ds, &config).unwrap();
        let rules = oracle_mine(&ds, &config).unwrap();

        // Simulate a miner defect: flip one verdict and nudge one statistic.
        let sc = &mut report.levels.levels[0].with_target[0];
        sc.passed = !sc.passed;
        sc.stats.support += 1e-6;

        let diff = diff_runs(&report, &levels, &rules);
        assert!(diff.iter().any(|line| line.contains("passed")));
        assert!(diff.iter().any(|line| line.contains("support")));
    }

    #[test]
    fn missing_rule_is_reported() {
        let ds = dataset();
        let config = MinerConfig::new(0.2, 0.6, 0.1);
        let mut report = mine(&ds, &config).unwrap();
        let levels = oracle_levels(&ds, &config).unwrap();
        let rules = oracle_mine(&ds, &config).unwrap();
        assert!(!report.rules.is_empty(), "fixture should yield rules");
        report.rules.pop();
        let diff = diff_runs(&report, &levels, &rules);
        assert!(diff.iter().any(|line| line.contains("rule count differs")));
    }
}
