//! Distance histograms of a tidset and the statistics derived from them.
//!
//! Two histograms are kept per pattern:
//!
//! * the all-pairs histogram counts every occurrence pair whose distance is
//!   at most `ell`. Its largest count is the *balance value*, which never
//!   grows when the pattern is extended and therefore drives pruning;
//! * the successive histogram counts only consecutive occurrence pairs,
//!   with no cap on the distance. Average and standard deviation of these
//!   distances decide whether a surviving pattern is reported.

use std::collections::BTreeMap;

use crate::transactions::Tidset;

/// Counts of distances `0..=ell` over all occurrence pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairsHistogram {
    counts: Vec<usize>,
}

impl AllPairsHistogram {
    pub fn zeroed(ell: usize) -> Self {
        AllPairsHistogram {
            counts: vec![0; ell + 1],
        }
    }

    /// Builds a histogram from explicit counts; the cap is `counts.len() - 1`.
    ///
    /// # Panics
    /// If `counts` is empty.
    pub fn from_counts(counts: Vec<usize>) -> Self {
        assert!(!counts.is_empty(), "an all-pairs histogram has at least one bin");
        AllPairsHistogram { counts }
    }

    pub fn ell(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, distance: usize) -> usize {
        self.counts.get(distance).copied().unwrap_or(0)
    }
}

/// Sparse counts of distances between consecutive occurrences.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuccessiveHistogram {
    counts: BTreeMap<usize, usize>,
}

impl SuccessiveHistogram {
    /// Zero counts are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut counts = BTreeMap::new();
        for (d, c) in pairs {
            if c > 0 {
                *counts.entry(d).or_insert(0) += c;
            }
        }
        SuccessiveHistogram { counts }
    }

    fn add(&mut self, distance: usize) {
        *self.counts.entry(distance).or_insert(0) += 1;
    }

    /// `(distance, count)` in ascending distance order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn count(&self, distance: usize) -> usize {
        self.counts.get(&distance).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Bins whose count reaches `min_count`.
    pub fn restricted(&self, min_count: usize) -> SuccessiveHistogram {
        SuccessiveHistogram {
            counts: self
                .counts
                .iter()
                .filter(|(_, &c)| c >= min_count)
                .map(|(&d, &c)| (d, c))
                .collect(),
        }
    }
}

/// Average and population standard deviation of a set of distances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceStats {
    pub avgdist: f64,
    pub stdev: f64,
}

/// Everything the miner reports about one pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternStats {
    pub balance_value: usize,
    pub avgdist: f64,
    pub stdev: f64,
    pub support: usize,
}

/// Accumulates both histograms for `tids` in a single pass over the positions.
///
/// Positions are strictly increasing, so the inner scan stops at the first
/// earlier occurrence farther away than `ell`.
pub fn build_histograms(tids: &Tidset, ell: usize) -> (AllPairsHistogram, SuccessiveHistogram) {
    let all = all_pairs_histogram(tids, ell);
    let succ = successive_histogram(tids);
    (all, succ)
}

pub fn all_pairs_histogram(tids: &Tidset, ell: usize) -> AllPairsHistogram {
    let pos = tids.positions();
    let mut hist = AllPairsHistogram::zeroed(ell);
    for j in 1..pos.len() {
        for i in (0..j).rev() {
            let d = pos[j] - pos[i] - 1;
            if d > ell {
                break;
            }
            hist.counts[d] += 1;
        }
    }
    hist
}

pub fn successive_histogram(tids: &Tidset) -> SuccessiveHistogram {
    let mut hist = SuccessiveHistogram::default();
    for w in tids.positions().windows(2) {
        hist.add(w[1] - w[0] - 1);
    }
    hist
}

/// Largest bin of the all-pairs histogram, 0 when every bin is empty.
pub fn balance_value(hist: &AllPairsHistogram) -> usize {
    hist.counts.iter().copied().max().unwrap_or(0)
}

/// Weighted mean and population standard deviation over the bins of `hist`.
/// `None` when the histogram holds no distances.
pub fn stats_plain(hist: &SuccessiveHistogram) -> Option<DistanceStats> {
    let total = hist.total();
    if total == 0 {
        return None;
    }
    let total = total as f64;
    let avg = hist.iter().map(|(d, c)| d as f64 * c as f64).sum::<f64>() / total;
    let var = hist
        .iter()
        .map(|(d, c)| {
            let dev = avg - d as f64;
            dev * dev * c as f64
        })
        .sum::<f64>()
        / total;
    Some(DistanceStats {
        avgdist: avg,
        stdev: var.sqrt(),
    })
}

/// Statistics over the frequent bins only (count `>= mindistfreq`), or `None`
/// when no bin is frequent.
pub fn frequent_stats(hist: &SuccessiveHistogram, mindistfreq: usize) -> Option<DistanceStats> {
    if mindistfreq <= 1 {
        return stats_plain(hist);
    }
    stats_plain(&hist.restricted(mindistfreq))
}

/// [`frequent_stats`] with the undefined case encoded as
/// `stdev = maxstdev + 1, avgdist = 0`, which fails every display filter.
pub fn stats_restricted(
    hist: &SuccessiveHistogram,
    mindistfreq: usize,
    maxstdev: f64,
) -> DistanceStats {
    frequent_stats(hist, mindistfreq).unwrap_or(undefined_stats(maxstdev))
}

pub(crate) fn undefined_stats(maxstdev: f64) -> DistanceStats {
    DistanceStats {
        avgdist: 0.0,
        stdev: maxstdev + 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist(pairs: &[(usize, usize)]) -> SuccessiveHistogram {
        SuccessiveHistogram::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn item_a_of_example_two() {
        let (all, succ) = build_histograms(&Tidset::new(vec![0, 3, 6, 9]), 10);
        assert_eq!(all.ell(), 10);
        assert_eq!(all.count(2), 3);
        assert_eq!(all.count(5), 2);
        assert_eq!(all.count(8), 1);
        assert_eq!(all.counts().iter().sum::<usize>(), 6);
        assert_eq!(succ, hist(&[(2, 3)]));
        assert_eq!(balance_value(&all), 3);
    }

    #[test]
    fn intersected_pattern_of_example_two() {
        let (all, succ) = build_histograms(&Tidset::new(vec![3, 6, 9]), 10);
        assert_eq!(all.count(2), 2);
        assert_eq!(all.count(5), 1);
        assert_eq!(all.counts().iter().sum::<usize>(), 3);
        assert_eq!(succ, hist(&[(2, 2)]));
    }

    #[test]
    fn cap_excludes_long_pairs() {
        let all = all_pairs_histogram(&Tidset::new(vec![0, 3, 6, 9]), 4);
        assert_eq!(all.counts(), &[0, 0, 3, 0, 0]);
        let zero = all_pairs_histogram(&Tidset::new(vec![0, 1, 2]), 0);
        assert_eq!(zero.counts(), &[2]);
    }

    #[test]
    fn singleton_has_no_pairs() {
        let (all, succ) = build_histograms(&Tidset::new(vec![5]), 10);
        assert_eq!(balance_value(&all), 0);
        assert!(succ.is_empty());
        assert!(stats_plain(&succ).is_none());
    }

    #[test]
    fn balance_value_is_largest_count() {
        let h = AllPairsHistogram::from_counts(vec![0, 5, 200, 30, 199]);
        assert_eq!(h.ell(), 4);
        assert_eq!(balance_value(&h), 200);
        assert_eq!(balance_value(&AllPairsHistogram::zeroed(10)), 0);
    }

    #[test]
    fn plain_stats() {
        let s = stats_plain(&hist(&[(3, 4)])).unwrap();
        assert_eq!((s.avgdist, s.stdev), (3.0, 0.0));

        // distances 2,2,4,4: mean 3, squared deviations all 1
        let s = stats_plain(&hist(&[(2, 2), (4, 2)])).unwrap();
        assert_eq!((s.avgdist, s.stdev), (3.0, 1.0));

        let s = stats_plain(&hist(&[(1, 4)])).unwrap();
        assert_eq!((s.avgdist, s.stdev), (1.0, 0.0));
    }

    #[test]
    fn restricted_stats() {
        let s = stats_restricted(&hist(&[(3, 100), (9, 1)]), 50, 1.0);
        assert_eq!((s.avgdist, s.stdev), (3.0, 0.0));

        let s = stats_restricted(&hist(&[(3, 10)]), 50, 1.0);
        assert_eq!((s.avgdist, s.stdev), (0.0, 2.0));

        let s = stats_restricted(&hist(&[(2, 60), (4, 60), (9, 5)]), 50, 1.0);
        assert_eq!((s.avgdist, s.stdev), (3.0, 1.0));

        let s = stats_restricted(&SuccessiveHistogram::default(), 1, 2.5);
        assert_eq!((s.avgdist, s.stdev), (0.0, 3.5));
    }

    #[test]
    fn from_pairs_merges_and_drops_zeros() {
        let h = SuccessiveHistogram::from_pairs([(1, 2), (1, 3), (4, 0)]);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(1, 5)]);
    }
}
