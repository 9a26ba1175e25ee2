//! Command-line definitions, the flat `key = value` config file, and the
//! merge of the two into validated option structs. Flags always win over
//! file values; thresholds are checked before any input is read.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzcorr_core::dataset::MembershipSpec;
use fuzzcorr_core::miner::MinerConfig;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzcorr",
    version,
    about = "Mine target-oriented fuzzy correlation rules from quantitative usage data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fuzzify raw usage counts into membership degrees (CSV in, CSV out)
    Fuzzify(FuzzifyArgs),
    /// Mine rules from a fuzzy dataset (or raw counts with --raw)
    Mine(MineArgs),
    /// Run both the miner and the exhaustive oracle and compare the results
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Input CSV path
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Write output here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Flat `key = value` config file; flags override file values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MembershipArgs {
    /// Raw value at or below which membership is 0
    #[arg(long)]
    pub zero: Option<f64>,
    /// Raw value at or above which membership is 1
    #[arg(long)]
    pub saturation: Option<f64>,
    /// Decimals to round memberships to (half-up)
    #[arg(long)]
    pub round: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// Minimal fuzzy support, in (0, 1]
    #[arg(long)]
    pub min_support: Option<f64>,
    /// Minimal fuzzy confidence, in (0, 1]
    #[arg(long)]
    pub min_confidence: Option<f64>,
    /// Minimal fuzzy correlation coefficient, in [-1, 1]
    #[arg(long)]
    pub min_correlation: Option<f64>,
    /// Item name to force as the target (default: highest-support item)
    #[arg(long)]
    pub target: Option<String>,
    /// Deepest level to explore (safety cap, >= 2)
    #[arg(long)]
    pub max_level: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FuzzifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub membership: MembershipArgs,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub thresholds: ThresholdArgs,
    /// Report format
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Input is raw usage counts; fuzzify before mining
    #[arg(long)]
    pub raw: bool,
    #[command(flatten)]
    pub membership: MembershipArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub thresholds: ThresholdArgs,
    /// Input is raw usage counts; fuzzify before checking
    #[arg(long)]
    pub raw: bool,
    #[command(flatten)]
    pub membership: MembershipArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

const CONFIG_KEYS: &[&str] = &[
    "input",
    "output",
    "format",
    "zero",
    "saturation",
    "round",
    "min-support",
    "min-confidence",
    "min-correlation",
    "target",
    "max-level",
    "raw",
];

/// A parsed flat config file: `key = value` lines, `#` comments.
#[derive(Debug, Default)]
pub struct FileConfig {
    entries: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
            .map_err(|msg| CliError::Input(format!("config {}: {msg}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (index, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {}: expected `key = value`", index + 1));
            };
            let key = key.trim();
            let value = value.trim();
            if !CONFIG_KEYS.contains(&key) {
                return Err(format!("line {}: unknown key `{key}`", index + 1));
            }
            if entries.insert(key.to_string(), value.to_string()).is_some() {
                return Err(format!("line {}: key `{key}` set twice", index + 1));
            }
        }
        Ok(Self { entries })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn get_f64(&self, key: &str) -> Result<Option<f64>, CliError> {
        self.get(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::Input(format!("config key `{key}`: `{v}` is not a number"))
                })
            })
            .transpose()
    }

    fn get_u32(&self, key: &str) -> Result<Option<u32>, CliError> {
        self.get(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::Input(format!("config key `{key}`: `{v}` is not an integer"))
                })
            })
            .transpose()
    }

    fn get_usize(&self, key: &str) -> Result<Option<usize>, CliError> {
        self.get(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::Input(format!("config key `{key}`: `{v}` is not an integer"))
                })
            })
            .transpose()
    }

    fn get_bool(&self, key: &str) -> Result<Option<bool>, CliError> {
        self.get(key)
            .map(|v| match v {
                "true" => Ok(true),
                "false" => Ok(false),
                _ => Err(CliError::Input(format!(
                    "config key `{key}`: `{v}` is not `true` or `false`"
                ))),
            })
            .transpose()
    }

    fn get_format(&self, key: &str) -> Result<Option<OutputFormat>, CliError> {
        self.get(key)
            .map(|v| match v {
                "table" => Ok(OutputFormat::Table),
                "csv" => Ok(OutputFormat::Csv),
                "json" => Ok(OutputFormat::Json),
                _ => Err(CliError::Input(format!(
                    "config key `{key}`: `{v}` is not one of table, csv, json"
                ))),
            })
            .transpose()
    }
}

fn load_file(common: &CommonArgs) -> Result<FileConfig, CliError> {
    match &common.config {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::default()),
    }
}

fn resolve_input(common: &CommonArgs, file: &FileConfig) -> Result<PathBuf, CliError> {
    common
        .input
        .clone()
        .or_else(|| file.get("input").map(PathBuf::from))
        .ok_or_else(|| CliError::Input("no input path given (use --input)".to_string()))
}

fn resolve_output(common: &CommonArgs, file: &FileConfig) -> Option<PathBuf> {
    common
        .output
        .clone()
        .or_else(|| file.get("output").map(PathBuf::from))
}

fn resolve_membership(
    args: &MembershipArgs,
    file: &FileConfig,
) -> Result<MembershipSpec, CliError> {
    let zero = match args.zero {
        Some(v) => v,
        None => file.get_f64("zero")?.unwrap_or(0.0),
    };
    let saturation = match args.saturation {
        Some(v) => v,
        None => file.get_f64("saturation")?.unwrap_or(10.0),
    };
    let round = match args.round {
        Some(v) => Some(v),
        None => file.get_u32("round")?,
    };
    MembershipSpec::new(zero, saturation, round).map_err(|e| CliError::Input(e.to_string()))
}

fn resolve_miner_config(args: &ThresholdArgs, file: &FileConfig) -> Result<MinerConfig, CliError> {
    let required = |flag: Option<f64>, key: &str| -> Result<f64, CliError> {
        match flag {
            Some(v) => Ok(v),
            None => file.get_f64(key)?.ok_or_else(|| {
                CliError::Input(format!("missing threshold `{key}` (flag or config file)"))
            }),
        }
    };
    let mut config = MinerConfig::new(
        required(args.min_support, "min-support")?,
        required(args.min_confidence, "min-confidence")?,
        required(args.min_correlation, "min-correlation")?,
    );
    if let Some(name) = args
        .target
        .clone()
        .or_else(|| file.get("target").map(str::to_string))
    {
        config = config.with_target(name);
    }
    if let Some(level) = match args.max_level {
        Some(v) => Some(v),
        None => file.get_usize("max-level")?,
    } {
        config = config.with_max_level(level);
    }
    config
        .validate()
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(config)
}

/// Fully resolved `fuzzify` invocation.
#[derive(Debug)]
pub struct FuzzifyOptions {
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub spec: MembershipSpec,
}

/// Fully resolved `mine` invocation.
#[derive(Debug)]
pub struct MineOptions {
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub raw: bool,
    pub spec: MembershipSpec,
    pub miner: MinerConfig,
}

/// Fully resolved `check` invocation.
#[derive(Debug)]
pub struct CheckOptions {
    pub input: PathBuf,
    pub raw: bool,
    pub spec: MembershipSpec,
    pub miner: MinerConfig,
}

impl FuzzifyArgs {
    pub fn resolve(&self) -> Result<FuzzifyOptions, CliError> {
        let file = load_file(&self.common)?;
        Ok(FuzzifyOptions {
            input: resolve_input(&self.common, &file)?,
            output: resolve_output(&self.common, &file),
            spec: resolve_membership(&self.membership, &file)?,
        })
    }
}

impl MineArgs {
    pub fn resolve(&self) -> Result<MineOptions, CliError> {
        let file = load_file(&self.common)?;
        let raw = self.raw || file.get_bool("raw")?.unwrap_or(false);
        Ok(MineOptions {
            input: resolve_input(&self.common, &file)?,
            output: resolve_output(&self.common, &file),
            format: match self.format {
                Some(f) => f,
                None => file.get_format("format")?.unwrap_or(OutputFormat::Table),
            },
            raw,
            spec: resolve_membership(&self.membership, &file)?,
            miner: resolve_miner_config(&self.thresholds, &file)?,
        })
    }
}

impl CheckArgs {
    pub fn resolve(&self) -> Result<CheckOptions, CliError> {
        let file = load_file(&self.common)?;
        let raw = self.raw || file.get_bool("raw")?.unwrap_or(false);
        Ok(CheckOptions {
            input: resolve_input(&self.common, &file)?,
            raw,
            spec: resolve_membership(&self.membership, &file)?,
            miner: resolve_miner_config(&self.thresholds, &file)?,
        })
    }
}
