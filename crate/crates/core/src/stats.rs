//! Fuzzy statistics kernel.
//!
//! Itemset membership is the minimum of the member items' degrees in a
//! record. Fuzzy support is the mean of that minimum over all records.
//! The correlation of a bipartition is the sample Pearson coefficient
//! (denominator n - 1) between the two sides' membership sequences; it is
//! undefined when either side has zero variance.
//!
//! All functions are pure and sum in record order, left to right, so
//! results are reproducible bit for bit.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::FuzzyDataset;
use crate::fmath;

/// Errors raised by the statistics kernel.
#[derive(Debug, Clone, PartialEq)]
pub enum StatsError {
    IndexOutOfRange { index: usize, bound: usize },
    LengthMismatch { left: usize, right: usize },
    TooFewRecords { n: usize },
    ZeroAntecedentSupport,
    DisjointnessViolated,
    EmptyItemset,
    DuplicateIndex { index: usize },
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            StatsError::LengthMismatch { left, right } => {
                write!(f, "sequence lengths differ: {left} vs {right}")
            }
            StatsError::TooFewRecords { n } => {
                write!(f, "need at least 2 records, got {n}")
            }
            StatsError::ZeroAntecedentSupport => {
                write!(
                    f,
                    "antecedent has zero fuzzy support; confidence is undefined"
                )
            }
            StatsError::DisjointnessViolated => {
                write!(f, "itemsets must be disjoint")
            }
            StatsError::EmptyItemset => write!(f, "itemset must not be empty"),
            StatsError::DuplicateIndex { index } => {
                write!(f, "duplicate item index {index}")
            }
        }
    }
}

impl core::error::Error for StatsError {}

/// Non-empty set of item positions, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset {
    indices: Vec<usize>,
}

impl Itemset {
    /// Builds an itemset from indices in any order; duplicates are rejected.
    pub fn new(mut indices: Vec<usize>) -> Result<Self, StatsError> {
        if indices.is_empty() {
            return Err(StatsError::EmptyItemset);
        }
        indices.sort_unstable();
        for pair in indices.windows(2) {
            if pair[0] == pair[1] {
                return Err(StatsError::DuplicateIndex { index: pair[0] });
            }
        }
        Ok(Self { indices })
    }

    pub fn singleton(index: usize) -> Self {
        Self {
            indices: alloc::vec![index],
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn min_index(&self) -> usize {
        self.indices[0]
    }

    pub fn max_index(&self) -> usize {
        *self.indices.last().expect("itemset is non-empty")
    }

    pub fn is_disjoint(&self, other: &Itemset) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.indices.len() && j < other.indices.len() {
            match self.indices[i].cmp(&other.indices[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Sorted union of two itemsets.
    pub fn union(&self, other: &Itemset) -> Itemset {
        let mut merged = Vec::with_capacity(self.indices.len() + other.indices.len());
        let (mut i, mut j) = (0, 0);
        while i < self.indices.len() && j < other.indices.len() {
            match self.indices[i].cmp(&other.indices[j]) {
                core::cmp::Ordering::Less => {
                    merged.push(self.indices[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    merged.push(other.indices[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    merged.push(self.indices[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&self.indices[i..]);
        merged.extend_from_slice(&other.indices[j..]);
        Itemset { indices: merged }
    }

    /// Copy of this itemset with one more index inserted.
    pub fn with_item(&self, index: usize) -> Itemset {
        debug_assert!(!self.contains(index));
        let pos = self.indices.partition_point(|&j| j < index);
        let mut indices = Vec::with_capacity(self.indices.len() + 1);
        indices.extend_from_slice(&self.indices[..pos]);
        indices.push(index);
        indices.extend_from_slice(&self.indices[pos..]);
        Itemset { indices }
    }

    /// Copy with `index` removed; `None` when absent or when removal
    /// would leave the itemset empty.
    pub fn without_item(&self, index: usize) -> Option<Itemset> {
        if self.indices.len() < 2 {
            return None;
        }
        let pos = self.indices.binary_search(&index).ok()?;
        let mut indices = self.indices.clone();
        indices.remove(pos);
        Some(Itemset { indices })
    }
}

/// Unordered pair of disjoint non-empty itemsets.
///
/// Canonical form: the side containing the globally smallest index is
/// `side_a`, which makes equality and ordering well defined. Direction is
/// applied only at rule extraction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    side_a: Itemset,
    side_b: Itemset,
}

impl Bipartition {
    pub fn new(x: Itemset, y: Itemset) -> Result<Self, StatsError> {
        if !x.is_disjoint(&y) {
            return Err(StatsError::DisjointnessViolated);
        }
        if x.min_index() < y.min_index() {
            Ok(Self {
                side_a: x,
                side_b: y,
            })
        } else {
            Ok(Self {
                side_a: y,
                side_b: x,
            })
        }
    }

    pub fn side_a(&self) -> &Itemset {
        &self.side_a
    }

    pub fn side_b(&self) -> &Itemset {
        &self.side_b
    }

    pub fn union(&self) -> Itemset {
        self.side_a.union(&self.side_b)
    }

    pub fn contains(&self, index: usize) -> bool {
        self.side_a.contains(index) || self.side_b.contains(index)
    }

    /// Number of items in the union of both sides.
    pub fn size(&self) -> usize {
        self.side_a.len() + self.side_b.len()
    }

    /// Human-readable form like `({S_1, S_3}, {S_2})`.
    pub fn label(&self, item_names: &[String]) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let side = |out: &mut String, s: &Itemset| {
            out.push('{');
            for (i, &j) in s.indices().iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                match item_names.get(j) {
                    Some(name) => out.push_str(name),
                    None => {
                        let _ = write!(out, "#{j}");
                    }
                }
            }
            out.push('}');
        };
        out.push('(');
        side(&mut out, &self.side_a);
        out.push_str(", ");
        side(&mut out, &self.side_b);
        out.push(')');
        out
    }
}

/// Support, correlation, and per-side moments of a bipartition.
///
/// `correlation` is `None` exactly when either side's membership sequence
/// has zero variance.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionStats {
    pub support: f64,
    pub correlation: Option<f64>,
    pub mean_a: f64,
    pub mean_b: f64,
    pub stddev_a: f64,
    pub stddev_b: f64,
}

fn check_record(ds: &FuzzyDataset, record: usize) -> Result<(), StatsError> {
    if record >= ds.n() {
        return Err(StatsError::IndexOutOfRange {
            index: record,
            bound: ds.n(),
        });
    }
    Ok(())
}

fn check_itemset(ds: &FuzzyDataset, set: &Itemset) -> Result<(), StatsError> {
    if set.max_index() >= ds.m() {
        return Err(StatsError::IndexOutOfRange {
            index: set.max_index(),
            bound: ds.m(),
        });
    }
    Ok(())
}

/// Minimum membership over `indices` in one record. `indices` must be
/// non-empty and in range.
fn min_membership(ds: &FuzzyDataset, record: usize, indices: &[usize]) -> f64 {
    let mut degree = ds.membership(record, indices[0]);
    for &j in &indices[1..] {
        let v = ds.membership(record, j);
        if v < degree {
            degree = v;
        }
    }
    degree
}

/// Membership of an itemset in one record: the minimum of its items'
/// degrees there.
pub fn itemset_membership(
    ds: &FuzzyDataset,
    record: usize,
    set: &Itemset,
) -> Result<f64, StatsError> {
    check_record(ds, record)?;
    check_itemset(ds, set)?;
    Ok(min_membership(ds, record, set.indices()))
}

/// Fuzzy support of an itemset: mean over records of its min-membership.
pub fn fuzzy_support(ds: &FuzzyDataset, set: &Itemset) -> Result<f64, StatsError> {
    check_itemset(ds, set)?;
    let mut total = 0.0;
    for record in 0..ds.n() {
        total += min_membership(ds, record, set.indices());
    }
    Ok(total / ds.n() as f64)
}

/// Support of a single item: its column mean.
pub fn item_support(ds: &FuzzyDataset, item: usize) -> Result<f64, StatsError> {
    if item >= ds.m() {
        return Err(StatsError::IndexOutOfRange {
            index: item,
            bound: ds.m(),
        });
    }
    let mut total = 0.0;
    for record in 0..ds.n() {
        total += ds.membership(record, item);
    }
    Ok(total / ds.n() as f64)
}

/// Fuzzy confidence of `antecedent -> consequent`: support of the union
/// divided by the support of the antecedent.
pub fn fuzzy_confidence(
    ds: &FuzzyDataset,
    antecedent: &Itemset,
    consequent: &Itemset,
) -> Result<f64, StatsError> {
    check_itemset(ds, antecedent)?;
    check_itemset(ds, consequent)?;
    if !antecedent.is_disjoint(consequent) {
        return Err(StatsError::DisjointnessViolated);
    }
    let antecedent_support = fuzzy_support(ds, antecedent)?;
    if antecedent_support == 0.0 {
        return Err(StatsError::ZeroAntecedentSupport);
    }
    let union_support = fuzzy_support(ds, &antecedent.union(consequent))?;
    Ok(union_support / antecedent_support)
}

struct Moments {
    mean_x: f64,
    mean_y: f64,
    covariance: f64,
    var_x: f64,
    var_y: f64,
}

fn is_constant(values: &[f64]) -> bool {
    values.iter().all(|&v| v == values[0])
}

/// Two-pass sample moments (denominator n - 1), record order.
///
/// A constant sequence has variance exactly 0 even where the rounded
/// mean would leave a residual.
fn sample_moments(x: &[f64], y: &[f64]) -> Moments {
    let n = x.len();
    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    for i in 0..n {
        sum_x += x[i];
        sum_y += y[i];
    }
    let mean_x = sum_x / n as f64;
    let mean_y = sum_y / n as f64;

    let mut covariance = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for i in 0..n {
        let dx = x[i] - mean_x;
        let dy = y[i] - mean_y;
        covariance += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    let divisor = (n - 1) as f64;
    Moments {
        mean_x,
        mean_y,
        covariance: covariance / divisor,
        var_x: if is_constant(x) { 0.0 } else { var_x / divisor },
        var_y: if is_constant(y) { 0.0 } else { var_y / divisor },
    }
}

/// Sample Pearson correlation of two equal-length sequences, or `None`
/// when either variance is zero.
pub fn correlation_of_sequences(x: &[f64], y: &[f64]) -> Result<Option<f64>, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::TooFewRecords { n: x.len() });
    }
    let m = sample_moments(x, y);
    if m.var_x == 0.0 || m.var_y == 0.0 {
        return Ok(None);
    }
    Ok(Some(
        m.covariance / (fmath::sqrt(m.var_x) * fmath::sqrt(m.var_y)),
    ))
}

/// Full statistics of a bipartition: support of the union, correlation of
/// the two sides' membership sequences, and per-side means and standard
/// deviations. The means equal the sides' fuzzy supports exactly.
pub fn partition_stats(
    ds: &FuzzyDataset,
    partition: &Bipartition,
) -> Result<PartitionStats, StatsError> {
    check_itemset(ds, partition.side_a())?;
    check_itemset(ds, partition.side_b())?;
    let n = ds.n();
    if n < 2 {
        return Err(StatsError::TooFewRecords { n });
    }

    let mut mu_a = Vec::with_capacity(n);
    let mut mu_b = Vec::with_capacity(n);
    for record in 0..n {
        mu_a.push(min_membership(ds, record, partition.side_a().indices()));
        mu_b.push(min_membership(ds, record, partition.side_b().indices()));
    }

    let m = sample_moments(&mu_a, &mu_b);
    let correlation = if m.var_x == 0.0 || m.var_y == 0.0 {
        None
    } else {
        Some(m.covariance / (fmath::sqrt(m.var_x) * fmath::sqrt(m.var_y)))
    };

    let support = fuzzy_support(ds, &partition.union())?;

    Ok(PartitionStats {
        support,
        correlation,
        mean_a: m.mean_x,
        mean_b: m.mean_y,
        stddev_a: fmath::sqrt(m.var_x),
        stddev_b: fmath::sqrt(m.var_y),
    })
}
