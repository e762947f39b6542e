//! The balanced-pattern miner.
//!
//! A pattern is *balanced* when
//!
//! * some distance `d <= ell` occurs at least `minnumber` times among all
//!   pairs of its occurrences (the balance value `t`),
//! * the distances between successive occurrences have a standard deviation
//!   of at most `maxstdev`, and
//! * their average is at least `minavg`.
//!
//! Only the first condition is anti-monotone, so only it prunes the search.
//! The other two are checked when a surviving pattern is reported. With
//! `mindistfreq > 1` the successive statistics are computed over the bins
//! holding at least `mindistfreq` distances, which damps short noisy stretches.

use crate::error::{Error, Result};
use crate::histogram::{
    all_pairs_histogram, balance_value, frequent_stats, successive_histogram, undefined_stats,
    PatternStats, SuccessiveHistogram,
};
use crate::search::{self, Measure, SearchOptions, SearchStats};
use crate::transactions::{Item, Tidset, TransactionDatabase};

#[derive(Debug, Clone, PartialEq)]
pub struct MiningParams {
    /// Prune threshold on the balance value. At least 1.
    pub minnumber: usize,
    pub maxstdev: f64,
    pub minavg: f64,
    /// Largest all-pairs distance tracked; there are `ell + 1` bins.
    pub ell: usize,
    /// Minimum count for a successive-distance bin to enter the statistics.
    /// 1 uses every bin.
    pub mindistfreq: usize,
    pub max_pattern_size: Option<usize>,
    /// Worker threads for first-level branches. 1 is single-threaded, 0 uses all cores.
    pub threads: usize,
}

impl MiningParams {
    pub fn new(minnumber: usize, maxstdev: f64, minavg: f64) -> Self {
        MiningParams {
            minnumber,
            maxstdev,
            minavg,
            ell: 10,
            mindistfreq: 1,
            max_pattern_size: None,
            threads: 1,
        }
    }

    pub fn with_ell(mut self, ell: usize) -> Self {
        self.ell = ell;
        self
    }

    pub fn with_mindistfreq(mut self, mindistfreq: usize) -> Self {
        self.mindistfreq = mindistfreq;
        self
    }

    pub fn with_max_pattern_size(mut self, max: Option<usize>) -> Self {
        self.max_pattern_size = max;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.minnumber < 1 {
            return Err(Error::param("minnumber must be at least 1"));
        }
        if !(self.maxstdev.is_finite() && self.maxstdev >= 0.0) {
            return Err(Error::param(format!(
                "maxstdev must be a finite non-negative number (got {})",
                self.maxstdev
            )));
        }
        if !(self.minavg.is_finite() && self.minavg >= 0.0) {
            return Err(Error::param(format!(
                "minavg must be a finite non-negative number (got {})",
                self.minavg
            )));
        }
        if self.mindistfreq < 1 {
            return Err(Error::param("mindistfreq must be at least 1"));
        }
        Ok(())
    }
}

/// A reported pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct BalancedPatternResult {
    /// Ascending item ids.
    pub items: Vec<Item>,
    pub stats: PatternStats,
    pub succ_histogram: SuccessiveHistogram,
}

/// Scores one tidset: balance value, successive histogram and the statistics
/// used by the display filters. Also reports whether the pattern qualifies.
pub fn score_pattern(tids: &Tidset, params: &MiningParams) -> (PatternStats, SuccessiveHistogram, bool) {
    let t = balance_value(&all_pairs_histogram(tids, params.ell));
    let succ = successive_histogram(tids);
    let (stats, qualifies) = display_stats(t, &succ, params);
    let stats = PatternStats {
        balance_value: t,
        avgdist: stats.avgdist,
        stdev: stats.stdev,
        support: tids.support(),
    };
    (stats, succ, qualifies)
}

fn display_stats(
    t: usize,
    succ: &SuccessiveHistogram,
    params: &MiningParams,
) -> (crate::histogram::DistanceStats, bool) {
    match frequent_stats(succ, params.mindistfreq) {
        Some(s) => {
            let ok = t >= params.minnumber && s.stdev <= params.maxstdev && s.avgdist >= params.minavg;
            (s, ok)
        }
        None => (undefined_stats(params.maxstdev), false),
    }
}

struct Balanced<'a> {
    params: &'a MiningParams,
}

impl Measure for Balanced<'_> {
    type Node = usize;
    type Output = BalancedPatternResult;

    fn evaluate(&self, tids: &Tidset) -> Option<usize> {
        let t = balance_value(&all_pairs_histogram(tids, self.params.ell));
        (t >= self.params.minnumber).then_some(t)
    }

    fn report(&self, items: &[Item], tids: &Tidset, &t: &usize) -> Option<BalancedPatternResult> {
        let succ = successive_histogram(tids);
        let (s, qualifies) = display_stats(t, &succ, self.params);
        qualifies.then(|| BalancedPatternResult {
            items: items.to_vec(),
            stats: PatternStats {
                balance_value: t,
                avgdist: s.avgdist,
                stdev: s.stdev,
                support: tids.support(),
            },
            succ_histogram: succ,
        })
    }
}

/// Mines every balanced pattern, ordered by descending balance value and
/// then by ascending item sequence.
pub fn mine_balanced(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<BalancedPatternResult>> {
    mine_balanced_with_stats(db, params).map(|(results, _)| results)
}

pub fn mine_balanced_with_stats(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<(Vec<BalancedPatternResult>, SearchStats)> {
    params.validate()?;
    let options = SearchOptions {
        max_pattern_size: params.max_pattern_size,
        threads: params.threads,
    };
    let (mut results, stats) = search::run(db, &Balanced { params }, &options)?;
    sort_results(&mut results);
    Ok((results, stats))
}

pub(crate) fn sort_results(results: &mut [BalancedPatternResult]) {
    results.sort_by(|a, b| {
        b.stats
            .balance_value
            .cmp(&a.stats.balance_value)
            .then_with(|| a.items.cmp(&b.items))
    });
}
