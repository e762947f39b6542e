//! Finding itemsets that recur at regular intervals in an ordered
//! transaction database.
//!
//! Transactions are ordered in time and the distance between two
//! occurrences of a pattern is the number of transactions strictly in
//! between. A pattern is *balanced* when
//!
//! 1. some distance up to `ell` occurs at least `minnumber` times among all
//!    pairs of its occurrences,
//! 2. the distances between successive occurrences have a standard deviation
//!    of at most `maxstdev`, and
//! 3. their average is at least `minavg`.
//!
//! [`mine_balanced`] finds all balanced patterns with a depth-first tidset
//! search that prunes on the first condition. The older triple-based
//! *stable pattern* measure is available as [`mine_stable`] for comparison.
//!
//! ```
//! use balanceclat::{datagen, mine_balanced, GeneratorConfig, MiningParams};
//!
//! // five items planted together at every fourth transaction
//! let db = datagen::generate(&GeneratorConfig::default()).unwrap();
//! let params = MiningParams::new(150, 2.5, 2.0);
//! let found = mine_balanced(&db, &params).unwrap();
//! assert_eq!(found.len(), 31);
//! assert_eq!(found[0].stats.stdev, 0.0);
//! ```
//!
//! Runnable programs live in `examples/`: `worked_examples`,
//! `planted_pattern`, `noise_sweep`, `stable_vs_balanced`,
//! `web_log_bucketing`, `oracle_check` and `runtime_sweep`.

pub mod bench;
pub mod cli;
pub mod datagen;
pub mod error;
pub mod fixtures;
pub mod histogram;
pub mod ingest;
pub mod miner;
pub mod names;
pub mod oracle;
pub mod report;
mod search;
pub mod stability;
pub mod transactions;

pub use datagen::GeneratorConfig;
pub use error::{Error, Result};
pub use histogram::{
    balance_value, build_histograms, stats_plain, stats_restricted, AllPairsHistogram,
    DistanceStats, PatternStats, SuccessiveHistogram,
};
pub use ingest::{bucket, BucketConfig, Event};
pub use miner::{mine_balanced, mine_balanced_with_stats, BalancedPatternResult, MiningParams};
pub use names::ItemNames;
pub use report::RunReport;
pub use search::SearchStats;
pub use stability::{mine_stable, stability_value, StabilityParams, StabilityScore, StablePatternResult};
pub use transactions::{distance, parse_database, tidset_of, Item, Tidset, Transaction, TransactionDatabase};
