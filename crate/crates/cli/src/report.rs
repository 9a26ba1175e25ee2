//! Report rendering: the JSON schema, a plain-text table view mirroring
//! the per-level audit, and a rules-only CSV.
//!
//! Every number is rounded to six significant decimals before it is
//! emitted, so serialized reports parse back to exactly the values shown.

use fuzzcorr_core::miner::{MiningReport, ScoredCandidate};
use fuzzcorr_core::stats::Itemset;
use serde::{Deserialize, Serialize};

use crate::decimal::{format_decimal, round_sig6};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub target: String,
    pub thresholds: JsonThresholds,
    pub levels: Vec<JsonLevel>,
    pub rules: Vec<JsonRule>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonThresholds {
    pub min_support: f64,
    pub min_confidence: f64,
    pub min_correlation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonLevel {
    pub k: usize,
    pub with_target: Vec<JsonCandidate>,
    pub without_target: Vec<JsonCandidate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonCandidate {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub support: f64,
    /// `null` when a zero-variance side leaves the coefficient undefined.
    pub correlation: Option<f64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRule {
    pub antecedent: Vec<String>,
    pub consequent: Vec<String>,
    pub support: f64,
    pub confidence: f64,
    pub correlation: f64,
}

fn names_of(set: &Itemset, item_names: &[String]) -> Vec<String> {
    set.indices()
        .iter()
        .map(|&j| item_names[j].clone())
        .collect()
}

fn json_candidate(sc: &ScoredCandidate, item_names: &[String]) -> JsonCandidate {
    JsonCandidate {
        lhs: names_of(sc.partition.side_a(), item_names),
        rhs: names_of(sc.partition.side_b(), item_names),
        support: round_sig6(sc.stats.support),
        correlation: sc.stats.correlation.map(round_sig6),
        passed: sc.passed,
    }
}

/// Projects a mining report onto the serializable schema.
pub fn to_json_report(report: &MiningReport) -> JsonReport {
    let names = &report.item_names;
    JsonReport {
        target: report.target_name.clone(),
        thresholds: JsonThresholds {
            min_support: round_sig6(report.config.min_support),
            min_confidence: round_sig6(report.config.min_confidence),
            min_correlation: round_sig6(report.config.min_correlation),
        },
        levels: report
            .levels
            .levels
            .iter()
            .map(|level| JsonLevel {
                k: level.k,
                with_target: level
                    .with_target
                    .iter()
                    .map(|sc| json_candidate(sc, names))
                    .collect(),
                without_target: level
                    .without_target
                    .iter()
                    .map(|sc| json_candidate(sc, names))
                    .collect(),
            })
            .collect(),
        rules: report
            .rules
            .iter()
            .map(|rule| JsonRule {
                antecedent: names_of(&rule.antecedent, names),
                consequent: names_of(&rule.consequent, names),
                support: round_sig6(rule.support),
                confidence: round_sig6(rule.confidence),
                correlation: round_sig6(rule.correlation),
            })
            .collect(),
    }
}

pub fn render_json(report: &MiningReport) -> String {
    let mut text = serde_json::to_string_pretty(&to_json_report(report))
        .expect("report serialization cannot fail");
    text.push('\n');
    text
}

fn braced(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

/// Left-aligned columns, two spaces apart.
fn render_columns(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn correlation_cell(correlation: Option<f64>) -> String {
    match correlation {
        Some(r) => format_decimal(r),
        None => "undefined".to_string(),
    }
}

fn candidate_rows(candidates: &[ScoredCandidate], item_names: &[String]) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "lhs".to_string(),
        "rhs".to_string(),
        "support".to_string(),
        "correlation".to_string(),
        "passed".to_string(),
    ]];
    for sc in candidates {
        rows.push(vec![
            braced(&names_of(sc.partition.side_a(), item_names)),
            braced(&names_of(sc.partition.side_b(), item_names)),
            format_decimal(sc.stats.support),
            correlation_cell(sc.stats.correlation),
            if sc.passed { "yes" } else { "no" }.to_string(),
        ]);
    }
    rows
}

/// Full audit view: thresholds, item supports, every level's candidates,
/// the rules, and any diagnostics.
pub fn render_table(report: &MiningReport) -> String {
    let names = &report.item_names;
    let mut out = String::new();

    out.push_str(&format!("target: {}\n", report.target_name));
    out.push_str(&format!(
        "thresholds: min_support={}, min_confidence={}, min_correlation={}\n",
        format_decimal(report.config.min_support),
        format_decimal(report.config.min_confidence),
        format_decimal(report.config.min_correlation),
    ));
    if report.levels.capped {
        out.push_str(&format!(
            "note: level cap reached at k={}\n",
            report.levels.deepest_level()
        ));
    }

    out.push_str("\nitem supports\n");
    let mut rows = vec![vec![
        "item".to_string(),
        "support".to_string(),
        "frequent".to_string(),
    ]];
    for (j, name) in names.iter().enumerate() {
        rows.push(vec![
            name.clone(),
            format_decimal(report.levels.item_supports[j]),
            if report.levels.l1.contains(&j) {
                "yes"
            } else {
                "no"
            }
            .to_string(),
        ]);
    }
    out.push_str(&render_columns(&rows));

    for level in &report.levels.levels {
        out.push_str(&format!(
            "\nlevel {}: candidates containing the target\n",
            level.k
        ));
        if level.with_target.is_empty() {
            out.push_str("(none)\n");
        } else {
            out.push_str(&render_columns(&candidate_rows(&level.with_target, names)));
        }
        out.push_str(&format!(
            "\nlevel {}: candidates without the target\n",
            level.k
        ));
        if level.without_target.is_empty() {
            out.push_str("(none)\n");
        } else {
            out.push_str(&render_columns(&candidate_rows(
                &level.without_target,
                names,
            )));
        }
    }

    if !report.rule_candidates.is_empty() {
        out.push_str("\nrule candidates\n");
        let mut rows = vec![vec![
            "antecedent".to_string(),
            "consequent".to_string(),
            "confidence".to_string(),
            "passed".to_string(),
        ]];
        for candidate in &report.rule_candidates {
            rows.push(vec![
                braced(&names_of(&candidate.antecedent, names)),
                braced(&names_of(&candidate.consequent, names)),
                format_decimal(candidate.confidence),
                if candidate.passed { "yes" } else { "no" }.to_string(),
            ]);
        }
        out.push_str(&render_columns(&rows));
    }

    out.push_str(&format!("\nrules ({})\n", report.rules.len()));
    if report.rules.is_empty() {
        out.push_str("(none)\n");
    } else {
        let mut rows = vec![vec![
            "antecedent".to_string(),
            "consequent".to_string(),
            "support".to_string(),
            "confidence".to_string(),
            "correlation".to_string(),
        ]];
        for rule in &report.rules {
            rows.push(vec![
                braced(&names_of(&rule.antecedent, names)),
                braced(&names_of(&rule.consequent, names)),
                format_decimal(rule.support),
                format_decimal(rule.confidence),
                format_decimal(rule.correlation),
            ]);
        }
        out.push_str(&render_columns(&rows));
    }

    if !report.diagnostics.is_empty() {
        out.push_str("\ndiagnostics\n");
        for line in &report.diagnostics {
            out.push_str(&format!("- {line}\n"));
        }
    }

    out
}

/// Rules only, one per line; items within a side joined by `+`.
pub fn render_rules_csv(report: &MiningReport) -> String {
    let names = &report.item_names;
    let mut out = String::from("antecedent,consequent,support,confidence,correlation\n");
    for rule in &report.rules {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            names_of(&rule.antecedent, names).join("+"),
            names_of(&rule.consequent, names).join("+"),
            format_decimal(rule.support),
            format_decimal(rule.confidence),
            format_decimal(rule.correlation),
        ));
    }
    out
}
