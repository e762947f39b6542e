//! Brute-force reference miners for testing.
//!
//! Every non-empty subset of the observed items is scored straight from the
//! definitions, with no pruning and no shared code on the scoring path:
//! tidsets come from a transaction scan, pair distances are enumerated in
//! full, and statistics are taken over the expanded list of raw distances
//! rather than over histogram bins. Exponential in the number of items.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::histogram::{PatternStats, SuccessiveHistogram};
use crate::miner::{BalancedPatternResult, MiningParams};
use crate::stability::{StabilityParams, StabilityScore, StablePatternResult};
use crate::transactions::{Item, TransactionDatabase};

/// Largest item universe the oracles will enumerate.
pub const MAX_UNIVERSE: usize = 20;

fn subsets(db: &TransactionDatabase, max_size: Option<usize>) -> Result<Vec<Vec<Item>>> {
    let universe = db.item_universe();
    if universe.len() > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            limit: MAX_UNIVERSE,
        });
    }
    let max_size = max_size.unwrap_or(usize::MAX);
    Ok((1u32..1 << universe.len())
        .filter(|mask| (mask.count_ones() as usize) <= max_size)
        .map(|mask| {
            universe
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &item)| item)
                .collect()
        })
        .collect())
}

fn occurrences(db: &TransactionDatabase, pattern: &[Item]) -> Vec<usize> {
    let mut out = Vec::new();
    for (pos, t) in db.transactions().iter().enumerate() {
        if pattern.iter().all(|item| t.items().contains(item)) {
            out.push(pos);
        }
    }
    out
}

/// Count of pairs at each distance `0..=ell`, over every pair of occurrences.
pub fn naive_all_pairs(positions: &[usize], ell: usize) -> Vec<usize> {
    let mut counts = vec![0; ell + 1];
    for i in 0..positions.len() {
        for j in 0..positions.len() {
            if positions[i] < positions[j] {
                let d = positions[j] - positions[i] - 1;
                if d <= ell {
                    counts[d] += 1;
                }
            }
        }
    }
    counts
}

fn successive_distances(positions: &[usize]) -> Vec<usize> {
    positions.windows(2).map(|w| w[1] - w[0] - 1).collect()
}

/// Mean and population standard deviation of the distances whose value
/// occurs at least `min_freq` times in `distances`.
pub fn naive_stats(distances: &[usize], min_freq: usize) -> Option<(f64, f64)> {
    let kept: Vec<f64> = distances
        .iter()
        .filter(|&&d| distances.iter().filter(|&&e| e == d).count() >= min_freq)
        .map(|&d| d as f64)
        .collect();
    if kept.is_empty() {
        return None;
    }
    let n = kept.len() as f64;
    let mean = kept.iter().sum::<f64>() / n;
    let var = kept.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    Some((mean, var.sqrt()))
}

/// Exhaustive O(m^3) scan of all ordered triples.
pub fn naive_stability_value(positions: &[usize], w: usize) -> StabilityScore {
    let m = positions.len();
    let mut triples = 0;
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let left_gap = (positions[j] - positions[i] - 1) as i64;
                let right_gap = (positions[k] - positions[j] - 1) as i64;
                if (left_gap - right_gap).unsigned_abs() as usize <= 2 * w {
                    triples += 1;
                    lefts.push(positions[i]);
                    rights.push(positions[k]);
                }
            }
        }
    }
    lefts.sort_unstable();
    lefts.dedup();
    rights.sort_unstable();
    rights.dedup();
    StabilityScore::new(triples, lefts.len(), rights.len())
}

pub fn oracle_balanced(db: &TransactionDatabase, params: &MiningParams) -> Result<Vec<BalancedPatternResult>> {
    params.validate()?;
    let mut results = Vec::new();
    for pattern in subsets(db, params.max_pattern_size)? {
        let positions = occurrences(db, &pattern);
        let t = naive_all_pairs(&positions, params.ell).into_iter().max().unwrap_or(0);
        if t < params.minnumber {
            continue;
        }
        let distances = successive_distances(&positions);
        let Some((avg, stdev)) = naive_stats(&distances, params.mindistfreq) else {
            continue;
        };
        if stdev > params.maxstdev || avg < params.minavg {
            continue;
        }
        let mut bins: BTreeMap<usize, usize> = BTreeMap::new();
        for d in distances {
            *bins.entry(d).or_default() += 1;
        }
        results.push(BalancedPatternResult {
            items: pattern,
            stats: PatternStats {
                balance_value: t,
                avgdist: avg,
                stdev,
                support: positions.len(),
            },
            succ_histogram: SuccessiveHistogram::from_pairs(bins),
        });
    }
    crate::miner::sort_results(&mut results);
    Ok(results)
}

pub fn oracle_stable(db: &TransactionDatabase, params: &StabilityParams) -> Result<Vec<StablePatternResult>> {
    params.validate()?;
    let mut results = Vec::new();
    for pattern in subsets(db, params.max_pattern_size)? {
        let positions = occurrences(db, &pattern);
        if positions.len() < params.minsup {
            continue;
        }
        let score = naive_stability_value(&positions, params.w);
        if score.value >= params.minstable {
            results.push(StablePatternResult {
                items: pattern,
                score,
                support: positions.len(),
            });
        }
    }
    crate::stability::sort_stable(&mut results);
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn worked_stability_values() {
        let db = fixtures::stability_example();
        let found = oracle_stable(&db, &StabilityParams::new(0, 10, 1)).unwrap();
        let ab = found.iter().find(|r| r.items == [Item(1), Item(2)]).unwrap();
        assert_eq!(ab.score, StabilityScore::new(4, 3, 3));

        let db = fixtures::stability_example_stretched();
        let found = oracle_stable(&db, &StabilityParams::new(0, 8, 1)).unwrap();
        let ab = found.iter().find(|r| r.items == [Item(1), Item(2)]).unwrap();
        assert_eq!(ab.score, StabilityScore::new(4, 2, 2));
    }

    #[test]
    fn distinct_singletons_are_not_stable() {
        let db = TransactionDatabase::from_id_lists((1..10).map(|i| vec![i]));
        assert!(oracle_stable(&db, &StabilityParams::new(0, 0, 2)).unwrap().is_empty());
    }

    #[test]
    fn worked_balanced_set() {
        let db = fixtures::stability_example();
        let found = oracle_balanced(&db, &MiningParams::new(3, 0.5, 0.5)).unwrap();
        let items: Vec<Vec<Item>> = found.iter().map(|r| r.items.clone()).collect();
        assert_eq!(items, vec![vec![Item(1)], vec![Item(1), Item(2)], vec![Item(2)]]);
    }

    #[test]
    fn vacuous_filters_keep_every_repeated_itemset() {
        let db = TransactionDatabase::from_id_lists([vec![1, 2], vec![1], vec![2, 3], vec![1, 2]]);
        let params = MiningParams::new(1, 1e12, 0.0).with_ell(100);
        let found = oracle_balanced(&db, &params).unwrap();
        let mut items: Vec<Vec<u32>> = found.iter().map(|r| r.items.iter().map(|i| i.0).collect()).collect();
        items.sort();
        assert_eq!(items, vec![vec![1], vec![1, 2], vec![2]]);
    }

    #[test]
    fn empty_database() {
        let db = TransactionDatabase::default();
        assert!(oracle_balanced(&db, &MiningParams::new(1, 1.0, 0.0)).unwrap().is_empty());
        assert!(oracle_stable(&db, &StabilityParams::new(0, 0, 1)).unwrap().is_empty());
    }

    #[test]
    fn refuses_large_universes() {
        let db = TransactionDatabase::from_id_lists([(1..=21).collect::<Vec<u32>>()]);
        let err = oracle_balanced(&db, &MiningParams::new(1, 1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::UniverseTooLarge { size: 21, .. }));
    }

    #[test]
    fn naive_stats_expand_the_multiset() {
        assert_eq!(naive_stats(&[2, 4, 2, 4], 1), Some((3.0, 1.0)));
        assert_eq!(naive_stats(&[3, 3, 9], 2), Some((3.0, 0.0)));
        assert_eq!(naive_stats(&[3, 9], 2), None);
        assert_eq!(naive_stats(&[], 1), None);
    }
}
