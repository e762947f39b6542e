//! Stable patterns, the triple-based regularity measure used as a baseline.
//!
//! A `w`-good triple is three occurrences `L < M < R` whose gaps differ by at
//! most `2w`: `|distance(L, M) - distance(M, R)| <= 2w`. The stability value
//! of a pattern is the number of such triples plus the number of distinct
//! occurrences that serve as a left endpoint plus the number that serve as a
//! right endpoint. Both the value and the support are anti-monotone.

use crate::error::{Error, Result};
use crate::search::{self, Measure, SearchOptions, SearchStats};
use crate::transactions::{Item, Tidset, TransactionDatabase};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityParams {
    pub w: usize,
    pub minstable: usize,
    pub minsup: usize,
    pub max_pattern_size: Option<usize>,
    pub threads: usize,
}

impl StabilityParams {
    pub fn new(w: usize, minstable: usize, minsup: usize) -> Self {
        StabilityParams {
            w,
            minstable,
            minsup,
            max_pattern_size: None,
            threads: 1,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_max_pattern_size(mut self, max: Option<usize>) -> Self {
        self.max_pattern_size = max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.minsup < 1 {
            return Err(Error::param("minsup must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StabilityScore {
    pub triples: usize,
    pub left_endpoints: usize,
    pub right_endpoints: usize,
    pub value: usize,
}

impl StabilityScore {
    pub fn new(triples: usize, left_endpoints: usize, right_endpoints: usize) -> Self {
        StabilityScore {
            triples,
            left_endpoints,
            right_endpoints,
            value: triples + left_endpoints + right_endpoints,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StablePatternResult {
    pub items: Vec<Item>,
    pub score: StabilityScore,
    pub support: usize,
}

/// Counts `w`-good triples and their distinct endpoints.
///
/// For a fixed pair `(L, R)` the admissible middles form the interval
/// `2M in [L + R - 2w, L + R + 2w]`, so each pair needs two binary searches
/// over the occurrences strictly between them: O(m^2 log m) for support m.
pub fn stability_value(tids: &Tidset, w: usize) -> StabilityScore {
    let pos = tids.positions();
    let m = pos.len();
    if m < 3 {
        return StabilityScore::default();
    }
    let mut is_left = vec![false; m];
    let mut is_right = vec![false; m];
    let mut triples = 0;
    for a in 0..m {
        for b in a + 2..m {
            let (l, r) = (pos[a], pos[b]);
            let sum = l + r;
            // smallest M with 2M >= sum - 2w, largest with 2M <= sum + 2w
            let lo = sum.saturating_sub(2 * w).div_ceil(2);
            let hi = (sum + 2 * w) / 2;
            let inner = &pos[a + 1..b];
            let start = inner.partition_point(|&p| p < lo);
            let end = inner.partition_point(|&p| p <= hi);
            if end > start {
                triples += end - start;
                is_left[a] = true;
                is_right[b] = true;
            }
        }
    }
    let count = |flags: &[bool]| flags.iter().filter(|&&f| f).count();
    StabilityScore::new(triples, count(&is_left), count(&is_right))
}

struct Stable<'a> {
    params: &'a StabilityParams,
}

impl Measure for Stable<'_> {
    type Node = StabilityScore;
    type Output = StablePatternResult;

    fn evaluate(&self, tids: &Tidset) -> Option<StabilityScore> {
        if tids.support() < self.params.minsup {
            return None;
        }
        let score = stability_value(tids, self.params.w);
        (score.value >= self.params.minstable).then_some(score)
    }

    fn report(&self, items: &[Item], tids: &Tidset, score: &StabilityScore) -> Option<StablePatternResult> {
        Some(StablePatternResult {
            items: items.to_vec(),
            score: *score,
            support: tids.support(),
        })
    }
}

/// Mines itemsets with support `>= minsup` and stability value `>= minstable`,
/// ordered by descending value, then ascending item sequence.
pub fn mine_stable(db: &TransactionDatabase, params: &StabilityParams) -> Result<Vec<StablePatternResult>> {
    mine_stable_with_stats(db, params).map(|(r, _)| r)
}

pub fn mine_stable_with_stats(
    db: &TransactionDatabase,
    params: &StabilityParams,
) -> Result<(Vec<StablePatternResult>, SearchStats)> {
    params.validate()?;
    let options = SearchOptions {
        max_pattern_size: params.max_pattern_size,
        threads: params.threads,
    };
    let (mut results, stats) = search::run(db, &Stable { params }, &options)?;
    sort_stable(&mut results);
    Ok((results, stats))
}

pub(crate) fn sort_stable(results: &mut [StablePatternResult]) {
    results.sort_by(|a, b| {
        b.score
            .value
            .cmp(&a.score.value)
            .then_with(|| a.items.cmp(&b.items))
    });
}
