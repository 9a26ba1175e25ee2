//! Command-line front end for target-oriented fuzzy correlation rule
//! mining: CSV ingestion, the three subcommands (`fuzzify`, `mine`,
//! `check`), and report rendering.
//!
//! Exit codes: 0 success, 2 input or config error, 3 miner/oracle
//! mismatch, 4 instance too large for the oracle.

pub mod csvio;
pub mod decimal;
pub mod options;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use fuzzcorr_core::dataset::fuzzify_matrix;
use fuzzcorr_core::miner::mine;
use fuzzcorr_core::oracle::{oracle_levels, oracle_mine, OracleError};
use fuzzcorr_core::verify::diff_runs;
use fuzzcorr_core::FuzzyDataset;

pub use options::{CheckOptions, Cli, Command, FuzzifyOptions, MineOptions, OutputFormat};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Anything wrong with the input data or the configuration.
    #[error("{0}")]
    Input(String),
    /// Miner and oracle disagree; the diff lines explain where.
    #[error("miner and oracle disagree:\n{}", diff.join("\n"))]
    OracleMismatch { diff: Vec<String> },
    /// The dataset exceeds the oracle's enumeration guard.
    #[error("{0}")]
    InstanceTooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::OracleMismatch { .. } => 3,
            CliError::InstanceTooLarge(_) => 4,
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_output(output: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Input(format!("cannot write to stdout: {e}")))
        }
    }
}

fn load_dataset(
    path: &Path,
    raw: bool,
    spec: &fuzzcorr_core::MembershipSpec,
) -> Result<FuzzyDataset, CliError> {
    let bytes = read_input(path)?;
    if raw {
        let matrix = csvio::parse_usage_csv(&bytes)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(fuzzify_matrix(&matrix, spec))
    } else {
        csvio::parse_fuzzy_csv(&bytes)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

/// `fuzzify`: raw usage CSV in, membership CSV out.
pub fn run_fuzzify(opts: &FuzzifyOptions) -> Result<(), CliError> {
    let bytes = read_input(&opts.input)?;
    let matrix = csvio::parse_usage_csv(&bytes)
        .map_err(|e| CliError::Input(format!("{}: {e}", opts.input.display())))?;
    let fuzzy = fuzzify_matrix(&matrix, &opts.spec);
    let mut buffer = Vec::new();
    csvio::write_fuzzy_csv(&mut buffer, &fuzzy)
        .map_err(|e| CliError::Input(format!("cannot render output: {e}")))?;
    let text = String::from_utf8(buffer).expect("CSV output is UTF-8");
    write_output(&opts.output, &text)
}

/// `mine`: fuzzy (or raw) CSV in, report out in the chosen format.
/// Finding zero rules is still a successful run.
pub fn run_mine(opts: &MineOptions) -> Result<(), CliError> {
    let ds = load_dataset(&opts.input, opts.raw, &opts.spec)?;
    let report = mine(&ds, &opts.miner).map_err(|e| CliError::Input(e.to_string()))?;
    let text = match opts.format {
        OutputFormat::Table => report::render_table(&report),
        OutputFormat::Csv => report::render_rules_csv(&report),
        OutputFormat::Json => report::render_json(&report),
    };
    write_output(&opts.output, &text)
}

/// `check`: run the miner and the exhaustive oracle on the same input and
/// compare levels, verdicts, statistics, and rules.
pub fn run_check(opts: &CheckOptions) -> Result<(), CliError> {
    let ds = load_dataset(&opts.input, opts.raw, &opts.spec)?;
    if ds.m() > fuzzcorr_core::oracle::ORACLE_MAX_ITEMS {
        return Err(CliError::InstanceTooLarge(
            OracleError::InstanceTooLarge {
                items: ds.m(),
                limit: fuzzcorr_core::oracle::ORACLE_MAX_ITEMS,
            }
            .to_string(),
        ));
    }
    let report = mine(&ds, &opts.miner).map_err(|e| CliError::Input(e.to_string()))?;
    let levels = oracle_levels(&ds, &opts.miner).map_err(map_oracle_error)?;
    let rules = oracle_mine(&ds, &opts.miner).map_err(map_oracle_error)?;
    let diff = diff_runs(&report, &levels, &rules);
    if diff.is_empty() {
        println!(
            "ok: miner and oracle agree (target {}, {} level(s), {} rule(s))",
            report.target_name,
            report.levels.levels.len(),
            report.rules.len()
        );
        Ok(())
    } else {
        Err(CliError::OracleMismatch { diff })
    }
}

fn map_oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::InstanceTooLarge { .. } => CliError::InstanceTooLarge(e.to_string()),
        OracleError::Mining(inner) => CliError::Input(inner.to_string()),
    }
}

/// Dispatches a parsed command line.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Fuzzify(ref args) => run_fuzzify(&args.resolve()?),
        Command::Mine(ref args) => run_mine(&args.resolve()?),
        Command::Check(ref args) => run_check(&args.resolve()?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_cover_the_contract() {
        assert_eq!(CliError::Input("bad".into()).exit_code(), 2);
        let mismatch = CliError::OracleMismatch {
            diff: vec!["rule count differs: miner 1 vs oracle 2".into()],
        };
        assert_eq!(mismatch.exit_code(), 3);
        assert!(mismatch.to_string().contains("rule count differs"));
        assert_eq!(CliError::InstanceTooLarge("too wide".into()).exit_code(), 4);
    }
}
