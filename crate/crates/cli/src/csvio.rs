//! CSV ingestion and emission.
//!
//! Expected shape: a header `id,<item_1>,...,<item_m>` followed by one row
//! per record, each a record id and m decimal literals. Cells are trimmed;
//! quoting is not supported. Errors name the offending line and column
//! (both 1-based, header = line 1).

use fuzzcorr_core::dataset::{DatasetError, FuzzyDataset, UsageMatrix};
use std::io::{self, Write};

use crate::decimal::format_decimal;

#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("no data rows after the header")]
    EmptyBody,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}, column {column} ({item}): {reason}")]
    MalformedCell {
        line: usize,
        column: usize,
        item: String,
        reason: String,
    },
    #[error("line {line}, column {column} ({item}): membership {value} is outside [0, 1]")]
    OutOfRangeMembership {
        line: usize,
        column: usize,
        item: String,
        value: f64,
    },
    #[error(transparent)]
    Dataset(#[from] DatasetError),
}

struct Grid {
    item_names: Vec<String>,
    record_ids: Vec<String>,
    values: Vec<f64>,
}

fn parse_grid(bytes: &[u8]) -> Result<Grid, CsvError> {
    let text = std::str::from_utf8(bytes).map_err(|_| CsvError::NotUtf8)?;
    let mut lines = text.lines().enumerate();

    let (_, header) = lines.next().ok_or(CsvError::EmptyBody)?;
    let header_cells: Vec<&str> = header.split(',').map(str::trim).collect();
    if header_cells.len() < 2 {
        return Err(CsvError::Malformed {
            line: 1,
            reason: "header must be `id,<item_1>,...,<item_m>`".to_string(),
        });
    }
    if header_cells[0] != "id" {
        return Err(CsvError::Malformed {
            line: 1,
            reason: format!("first header cell must be `id`, got `{}`", header_cells[0]),
        });
    }
    let mut item_names = Vec::with_capacity(header_cells.len() - 1);
    for (idx, cell) in header_cells[1..].iter().enumerate() {
        if cell.is_empty() {
            return Err(CsvError::Malformed {
                line: 1,
                reason: format!("item name in column {} is empty", idx + 2),
            });
        }
        if item_names.iter().any(|n| n == cell) {
            return Err(CsvError::Malformed {
                line: 1,
                reason: format!("duplicate item name `{cell}` in column {}", idx + 2),
            });
        }
        item_names.push(cell.to_string());
    }
    let m = item_names.len();

    let mut record_ids: Vec<String> = Vec::new();
    let mut values = Vec::new();
    for (index, line) in lines {
        let line_no = index + 1;
        if line.trim().is_empty() {
            return Err(CsvError::Malformed {
                line: line_no,
                reason: "empty line".to_string(),
            });
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != m + 1 {
            return Err(CsvError::Malformed {
                line: line_no,
                reason: format!(
                    "expected {} values after the id, found {}",
                    m,
                    cells.len() - 1
                ),
            });
        }
        let id = cells[0];
        if id.is_empty() {
            return Err(CsvError::Malformed {
                line: line_no,
                reason: "record id is empty".to_string(),
            });
        }
        if record_ids.iter().any(|r| r == id) {
            return Err(CsvError::Malformed {
                line: line_no,
                reason: format!("duplicate record id `{id}`"),
            });
        }
        record_ids.push(id.to_string());
        for (j, cell) in cells[1..].iter().enumerate() {
            let value: f64 = cell.parse().map_err(|_| CsvError::MalformedCell {
                line: line_no,
                column: j + 2,
                item: item_names[j].clone(),
                reason: format!("`{cell}` is not a number"),
            })?;
            if !value.is_finite() {
                return Err(CsvError::MalformedCell {
                    line: line_no,
                    column: j + 2,
                    item: item_names[j].clone(),
                    reason: format!("`{cell}` is not finite"),
                });
            }
            values.push(value);
        }
    }
    if record_ids.is_empty() {
        return Err(CsvError::EmptyBody);
    }
    Ok(Grid {
        item_names,
        record_ids,
        values,
    })
}

/// Parses raw quantitative usage data.
pub fn parse_usage_csv(bytes: &[u8]) -> Result<UsageMatrix, CsvError> {
    let grid = parse_grid(bytes)?;
    Ok(UsageMatrix::new(
        grid.item_names,
        grid.record_ids,
        grid.values,
    )?)
}

/// Parses already-fuzzified data; every cell must lie in [0, 1].
pub fn parse_fuzzy_csv(bytes: &[u8]) -> Result<FuzzyDataset, CsvError> {
    let grid = parse_grid(bytes)?;
    let m = grid.item_names.len();
    for (pos, &value) in grid.values.iter().enumerate() {
        if !(0.0..=1.0).contains(&value) {
            return Err(CsvError::OutOfRangeMembership {
                line: pos / m + 2,
                column: pos % m + 2,
                item: grid.item_names[pos % m].clone(),
                value,
            });
        }
    }
    Ok(FuzzyDataset::new(
        grid.item_names,
        grid.record_ids,
        grid.values,
    )?)
}

/// Writes a fuzzy dataset in the same CSV shape `parse_fuzzy_csv` reads.
pub fn write_fuzzy_csv<W: Write>(mut out: W, ds: &FuzzyDataset) -> io::Result<()> {
    write!(out, "id")?;
    for name in ds.item_names() {
        write!(out, ",{name}")?;
    }
    writeln!(out)?;
    for (record, id) in ds.record_ids().iter().enumerate() {
        write!(out, "{id}")?;
        for item in 0..ds.m() {
            write!(out, ",{}", format_decimal(ds.membership(record, item)))?;
        }
        writeln!(out)?;
    }
    Ok(())
}
