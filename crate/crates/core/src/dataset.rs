//! Quantitative usage data and its fuzzification into membership degrees.
//!
//! A [`UsageMatrix`] holds raw non-negative counts (how often each item was
//! used per record). A [`MembershipSpec`] describes a piecewise-linear
//! membership function: values at or below `zero_point` map to 0, values at
//! or above `saturation_point` map to 1, and values in between map linearly.
//! [`fuzzify_matrix`] applies it element-wise and yields a [`FuzzyDataset`]
//! whose every cell lies in `[0, 1]`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::fmath;

/// Errors raised while validating or constructing datasets.
#[derive(Debug, Clone, PartialEq)]
pub enum DatasetError {
    /// The dataset has zero records or zero items.
    Empty { what: &'static str },
    /// A raw value is NaN or infinite.
    NonFiniteValue { row: usize, col: usize },
    /// The same label occurs twice.
    DuplicateLabel { kind: &'static str, label: String },
    /// A label is empty text.
    EmptyLabel { kind: &'static str, position: usize },
    /// The value grid does not match the label lists.
    DimensionMismatch { expected: usize, got: usize },
    /// A membership degree lies outside `[0, 1]`.
    MembershipOutOfRange { row: usize, col: usize, value: f64 },
    /// `saturation_point` must be strictly greater than `zero_point`.
    InvalidBreakpoints {
        zero_point: f64,
        saturation_point: f64,
    },
    /// `round_decimals` outside `[0, 9]`.
    RoundDecimalsOutOfRange { got: u32 },
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::Empty { what } => {
                write!(f, "dataset must contain at least one {what}")
            }
            DatasetError::NonFiniteValue { row, col } => {
                write!(f, "value at record {row}, item {col} is not finite")
            }
            DatasetError::DuplicateLabel { kind, label } => {
                write!(f, "duplicate {kind} label `{label}`")
            }
            DatasetError::EmptyLabel { kind, position } => {
                write!(f, "{kind} label at position {position} is empty")
            }
            DatasetError::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} grid values, got {got}")
            }
            DatasetError::MembershipOutOfRange { row, col, value } => {
                write!(
                    f,
                    "membership at record {row}, item {col} is {value}, outside [0, 1]"
                )
            }
            DatasetError::InvalidBreakpoints {
                zero_point,
                saturation_point,
            } => {
                write!(
                    f,
                    "saturation_point ({saturation_point}) must be greater than zero_point ({zero_point})"
                )
            }
            DatasetError::RoundDecimalsOutOfRange { got } => {
                write!(f, "round_decimals must be at most 9, got {got}")
            }
        }
    }
}

impl core::error::Error for DatasetError {}

fn validate_labels(kind: &'static str, labels: &[String]) -> Result<(), DatasetError> {
    let mut seen = BTreeSet::new();
    for (position, label) in labels.iter().enumerate() {
        if label.is_empty() {
            return Err(DatasetError::EmptyLabel { kind, position });
        }
        if !seen.insert(label.as_str()) {
            return Err(DatasetError::DuplicateLabel {
                kind,
                label: label.clone(),
            });
        }
    }
    Ok(())
}

/// Raw n x m grid of quantitative usage values with named rows and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageMatrix {
    item_names: Vec<String>,
    record_ids: Vec<String>,
    values: Vec<f64>, // row-major, n * m
}

impl UsageMatrix {
    pub fn new(
        item_names: Vec<String>,
        record_ids: Vec<String>,
        values: Vec<f64>,
    ) -> Result<Self, DatasetError> {
        if item_names.is_empty() {
            return Err(DatasetError::Empty { what: "item" });
        }
        if record_ids.is_empty() {
            return Err(DatasetError::Empty { what: "record" });
        }
        validate_labels("item", &item_names)?;
        validate_labels("record", &record_ids)?;
        let expected = item_names.len() * record_ids.len();
        if values.len() != expected {
            return Err(DatasetError::DimensionMismatch {
                expected,
                got: values.len(),
            });
        }
        let m = item_names.len();
        for (pos, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(DatasetError::NonFiniteValue {
                    row: pos / m,
                    col: pos % m,
                });
            }
        }
        Ok(Self {
            item_names,
            record_ids,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.record_ids.len()
    }

    pub fn m(&self) -> usize {
        self.item_names.len()
    }

    pub fn item_names(&self) -> &[String] {
        &self.item_names
    }

    pub fn record_ids(&self) -> &[String] {
        &self.record_ids
    }

    pub fn value(&self, record: usize, item: usize) -> f64 {
        self.values[record * self.m() + item]
    }

    pub fn row(&self, record: usize) -> &[f64] {
        let m = self.m();
        &self.values[record * m..(record + 1) * m]
    }
}

/// Piecewise-linear membership function parameters.
///
/// Maps a raw value `t` to `0` for `t <= zero_point`, to `1` for
/// `t >= saturation_point`, and linearly in between. When `round_decimals`
/// is set the result is additionally rounded half-up to that many decimals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipSpec {
    zero_point: f64,
    saturation_point: f64,
    round_decimals: Option<u32>,
}

impl MembershipSpec {
    pub fn new(
        zero_point: f64,
        saturation_point: f64,
        round_decimals: Option<u32>,
    ) -> Result<Self, DatasetError> {
        if !zero_point.is_finite()
            || !saturation_point.is_finite()
            || saturation_point <= zero_point
        {
            return Err(DatasetError::InvalidBreakpoints {
                zero_point,
                saturation_point,
            });
        }
        if let Some(d) = round_decimals {
            if d > 9 {
                return Err(DatasetError::RoundDecimalsOutOfRange { got: d });
            }
        }
        Ok(Self {
            zero_point,
            saturation_point,
            round_decimals,
        })
    }

    pub fn zero_point(&self) -> f64 {
        self.zero_point
    }

    pub fn saturation_point(&self) -> f64 {
        self.saturation_point
    }

    pub fn round_decimals(&self) -> Option<u32> {
        self.round_decimals
    }
}

/// n x m grid of membership degrees in `[0, 1]` with named rows and columns.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyDataset {
    item_names: Vec<String>,
    record_ids: Vec<String>,
    memberships: Vec<f64>, // row-major, n * m
}

impl FuzzyDataset {
    pub fn new(
        item_names: Vec<String>,
        record_ids: Vec<String>,
        memberships: Vec<f64>,
    ) -> Result<Self, DatasetError> {
        if item_names.is_empty() {
            return Err(DatasetError::Empty { what: "item" });
        }
        if record_ids.is_empty() {
            return Err(DatasetError::Empty { what: "record" });
        }
        validate_labels("item", &item_names)?;
        validate_labels("record", &record_ids)?;
        let expected = item_names.len() * record_ids.len();
        if memberships.len() != expected {
            return Err(DatasetError::DimensionMismatch {
                expected,
                got: memberships.len(),
            });
        }
        let m = item_names.len();
        for (pos, v) in memberships.iter().enumerate() {
            if !(*v >= 0.0 && *v <= 1.0) {
                return Err(DatasetError::MembershipOutOfRange {
                    row: pos / m,
                    col: pos % m,
                    value: *v,
                });
            }
        }
        Ok(Self {
            item_names,
            record_ids,
            memberships,
        })
    }

    /// Constructor for values already known to satisfy the invariants.
    fn from_parts(item_names: Vec<String>, record_ids: Vec<String>, memberships: Vec<f64>) -> Self {
        Self {
            item_names,
            record_ids,
            memberships,
        }
    }

    pub fn n(&self) -> usize {
        self.record_ids.len()
    }

    pub fn m(&self) -> usize {
        self.item_names.len()
    }

    pub fn item_names(&self) -> &[String] {
        &self.item_names
    }

    pub fn record_ids(&self) -> &[String] {
        &self.record_ids
    }

    pub fn membership(&self, record: usize, item: usize) -> f64 {
        self.memberships[record * self.m() + item]
    }

    pub fn row(&self, record: usize) -> &[f64] {
        let m = self.m();
        &self.memberships[record * m..(record + 1) * m]
    }

    pub fn item_index(&self, name: &str) -> Option<usize> {
        self.item_names.iter().position(|n| n == name)
    }
}

/// Round a non-negative value to `decimals` places, ties upward.
fn round_half_up(x: f64, decimals: u32) -> f64 {
    let scale = fmath::pow10(decimals);
    let scaled = x * scale;
    let whole = fmath::floor(scaled);
    let rounded = if scaled - whole >= 0.5 {
        whole + 1.0
    } else {
        whole
    };
    rounded / scale
}

/// Membership degree of a single raw value under `spec`.
///
/// Returns 1 at or above the saturation point, 0 at or below the zero
/// point, and the linear interpolation in between, optionally rounded
/// half-up to `spec.round_decimals()` places.
pub fn fuzzify_value(t: f64, spec: &MembershipSpec) -> f64 {
    if t >= spec.saturation_point() {
        return 1.0;
    }
    if t <= spec.zero_point() {
        return 0.0;
    }
    let degree = (t - spec.zero_point()) / (spec.saturation_point() - spec.zero_point());
    match spec.round_decimals() {
        Some(d) => round_half_up(degree, d),
        None => degree,
    }
}

/// Element-wise fuzzification of a raw matrix; labels are preserved in order.
pub fn fuzzify_matrix(raw: &UsageMatrix, spec: &MembershipSpec) -> FuzzyDataset {
    let memberships = raw.values.iter().map(|&t| fuzzify_value(t, spec)).collect();
    FuzzyDataset::from_parts(raw.item_names.clone(), raw.record_ids.clone(), memberships)
}
