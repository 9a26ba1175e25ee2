//! Target-oriented fuzzy correlation rule mining.
//!
//! The crate turns quantitative usage records (how often each of `m` items
//! was used by each of `n` record holders) into fuzzy membership degrees,
//! then searches level-wise for itemset bipartitions that are both frequent
//! and positively correlated with a designated target item, and finally
//! extracts directed rules that clear a confidence threshold.
//!
//! Modules:
//!
//! - [`dataset`] — raw usage matrices, membership specs, and fuzzification.
//! - [`stats`] — the fuzzy statistics kernel: itemset membership, fuzzy
//!   support/confidence, and the sample correlation of a bipartition.
//! - [`miner`] — target selection, candidate generation, level filtering,
//!   and rule extraction.
//! - [`oracle`] — a deliberately naive exhaustive reference implementation
//!   for cross-checking the miner on small instances.
//! - [`verify`] — structural diffing of miner output against oracle output.
//!
//! The crate is `no_std`-compatible (`alloc` required); disable the default
//! `std` feature and enable `libm` to build for targets without std.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("building without `std` requires the `libm` feature");

pub mod dataset;
pub mod miner;
pub mod oracle;
pub mod stats;
pub mod verify;

mod fmath;

pub use dataset::{fuzzify_matrix, fuzzify_value, FuzzyDataset, MembershipSpec, UsageMatrix};
pub use miner::{
    mine, FuzzyCorrelationRule, Level, LevelSets, MinerConfig, MiningReport, RuleCandidate,
    ScoredCandidate, TargetPolicy,
};
pub use oracle::{naive_stats, oracle_levels, oracle_mine};
pub use stats::{Bipartition, Itemset, PartitionStats};
