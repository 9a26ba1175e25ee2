//! Shared fixtures for the integration tests: the 16x5 telecom sample, its
//! raw counterpart, and random dataset generators.

#![allow(dead_code)]

use fuzzcorr_core::stats::{Bipartition, Itemset};
use fuzzcorr_core::{FuzzyDataset, UsageMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Raw monthly usage counts (16 customers x 5 services).
pub const RAW_USAGE: [[f64; 5]; 16] = [
    [1.7, 0.8, 0.9, 0.6, 0.2],
    [1.2, 8.0, 1.3, 0.3, 1.4],
    [0.8, 0.8, 0.4, 0.1, 0.6],
    [3.9, 4.8, 23.5, 0.1, 28.6],
    [3.6, 0.8, 51.4, 6.3, 0.8],
    [6.2, 2.1, 1.8, 3.8, 3.0],
    [1.3, 3.7, 1.6, 0.6, 17.6],
    [33.2, 20.2, 14.4, 2.4, 4.3],
    [11.7, 17.7, 14.8, 7.5, 3.8],
    [2.8, 16.8, 10.7, 2.4, 0.2],
    [1.3, 42.3, 5.4, 3.5, 39.1],
    [8.8, 4.4, 5.4, 2.4, 0.3],
    [3.6, 0.5, 5.1, 50.7, 1.5],
    [30.7, 34.7, 1.6, 0.8, 0.2],
    [0.4, 12.4, 0.9, 1.2, 9.1],
    [2.5, 7.4, 0.8, 42.9, 0.4],
];

/// The matching membership degrees. Rows CID_15 and CID_16 intentionally
/// repeat rows CID_1 and CID_2 instead of the fuzzified raw rows; all
/// bundled expected mining numbers were derived from this grid as is.
pub const DEGREES: [[f64; 5]; 16] = [
    [0.2, 0.1, 0.1, 0.1, 0.0],
    [0.1, 0.8, 0.1, 0.0, 0.1],
    [0.1, 0.1, 0.0, 0.0, 0.1],
    [0.4, 0.5, 1.0, 0.0, 1.0],
    [0.4, 0.1, 1.0, 0.6, 0.1],
    [0.6, 0.2, 0.2, 0.4, 0.3],
    [0.1, 0.4, 0.2, 0.1, 1.0],
    [1.0, 1.0, 1.0, 0.2, 0.4],
    [1.0, 1.0, 1.0, 0.8, 0.4],
    [0.3, 1.0, 1.0, 0.2, 0.0],
    [0.1, 1.0, 0.5, 0.4, 1.0],
    [0.9, 0.4, 0.5, 0.2, 0.0],
    [0.4, 0.1, 0.5, 1.0, 0.2],
    [1.0, 1.0, 0.2, 0.1, 0.0],
    [0.2, 0.1, 0.1, 0.1, 0.0],
    [0.1, 0.8, 0.1, 0.0, 0.1],
];

pub fn service_names() -> Vec<String> {
    (1..=5).map(|j| format!("S_{j}")).collect()
}

pub fn customer_ids() -> Vec<String> {
    (1..=16).map(|i| format!("CID_{i}")).collect()
}

/// The 16x5 membership fixture.
pub fn sample_degrees() -> FuzzyDataset {
    let values = DEGREES.iter().flatten().copied().collect();
    FuzzyDataset::new(service_names(), customer_ids(), values).unwrap()
}

/// The 16x5 raw usage fixture.
pub fn sample_usage() -> UsageMatrix {
    let values = RAW_USAGE.iter().flatten().copied().collect();
    UsageMatrix::new(service_names(), customer_ids(), values).unwrap()
}

pub fn itemset(indices: &[usize]) -> Itemset {
    Itemset::new(indices.to_vec()).unwrap()
}

pub fn bipart(a: &[usize], b: &[usize]) -> Bipartition {
    Bipartition::new(itemset(a), itemset(b)).unwrap()
}

/// Random dataset with memberships drawn from the 0.1 grid.
pub fn random_grid_dataset(rng: &mut ChaCha8Rng, n: usize, m: usize) -> FuzzyDataset {
    let item_names = (1..=m).map(|j| format!("f{j}")).collect();
    let record_ids = (1..=n).map(|i| format!("t{i}")).collect();
    let values = (0..n * m)
        .map(|_| rng.random_range(0..=10) as f64 / 10.0)
        .collect();
    FuzzyDataset::new(item_names, record_ids, values).unwrap()
}

/// Random dataset with continuous memberships in [0, 1].
pub fn random_dense_dataset(rng: &mut ChaCha8Rng, n: usize, m: usize) -> FuzzyDataset {
    let item_names = (1..=m).map(|j| format!("f{j}")).collect();
    let record_ids = (1..=n).map(|i| format!("t{i}")).collect();
    let values = (0..n * m).map(|_| rng.random_range(0.0..=1.0)).collect();
    FuzzyDataset::new(item_names, record_ids, values).unwrap()
}

/// Random non-trivial bipartition over `m` items.
pub fn random_bipartition(rng: &mut ChaCha8Rng, m: usize) -> Bipartition {
    loop {
        let size = rng.random_range(2..=m.min(5));
        let mut pool: Vec<usize> = (0..m).collect();
        for i in (1..pool.len()).rev() {
            let j = rng.random_range(0..=i);
            pool.swap(i, j);
        }
        let chosen = &pool[..size];
        let cut = rng.random_range(1..size);
        let a = Itemset::new(chosen[..cut].to_vec()).unwrap();
        let b = Itemset::new(chosen[cut..].to_vec()).unwrap();
        if let Ok(p) = Bipartition::new(a, b) {
            return p;
        }
    }
}
