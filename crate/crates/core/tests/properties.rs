//! Property tests for the data model, histograms, stability and bucketing.

use balanceclat::histogram::{all_pairs_histogram, frequent_stats, successive_histogram};
use balanceclat::ingest::{bucket, BucketConfig, Event};
use balanceclat::oracle::{naive_all_pairs, naive_stability_value, naive_stats};
use balanceclat::transactions::parse_database_str;
use balanceclat::{
    distance, mine_balanced, mine_stable, stability_value, stats_plain, stats_restricted, tidset_of, Item,
    MiningParams, StabilityParams, SuccessiveHistogram, Tidset, TransactionDatabase,
};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn database(max_items: u32, max_len: usize) -> impl Strategy<Value = TransactionDatabase> {
    vec(btree_set(1..=max_items, 0..=max_items as usize), 0..=max_len)
        .prop_map(TransactionDatabase::from_id_lists)
}

fn pattern(max_items: u32) -> impl Strategy<Value = Vec<Item>> {
    btree_set(1..=max_items, 0..4).prop_map(|s| s.into_iter().map(Item).collect())
}

fn positions(max_pos: usize, max_len: usize) -> impl Strategy<Value = Tidset> {
    btree_set(0..max_pos, 0..max_len).prop_map(|s| Tidset::new(s.into_iter().collect()))
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn text_format_round_trips(db in database(30, 40)) {
        let text = db.to_text();
        prop_assert_eq!(parse_database_str(&text).unwrap(), db);
    }

    #[test]
    fn superset_tidsets_are_contained(db in database(8, 30), p in pattern(8), q in pattern(8)) {
        let mut pq = p.clone();
        pq.extend(&q);
        let small = tidset_of(&db, &p);
        let big = tidset_of(&db, &pq);
        prop_assert!(big.positions().iter().all(|&x| small.contains(x)));
    }

    #[test]
    fn distances_add_up(xs in btree_set(0usize..1000, 3)) {
        let v: Vec<usize> = xs.into_iter().collect();
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(distance(a, b).unwrap() + distance(b, c).unwrap() + 1, distance(a, c).unwrap());
    }

    #[test]
    fn all_pairs_matches_quadratic_count(tids in positions(120, 40), ell in 0usize..25) {
        let hist = all_pairs_histogram(&tids, ell);
        let expected = naive_all_pairs(tids.positions(), ell);
        prop_assert_eq!(hist.counts(), expected.as_slice());
        let m = tids.support();
        let pairs = m * m.saturating_sub(1) / 2;
        prop_assert!(hist.counts().iter().all(|&c| c <= pairs));
    }

    #[test]
    fn successive_total_is_support_minus_one(tids in positions(200, 50)) {
        prop_assert_eq!(successive_histogram(&tids).total(), tids.support().saturating_sub(1));
    }

    #[test]
    fn binned_stats_match_expanded_multiset(raw in vec(0usize..30, 1..60)) {
        let hist = SuccessiveHistogram::from_pairs(raw.iter().map(|&d| (d, 1)));
        let s = stats_plain(&hist).unwrap();
        let (mean, stdev) = naive_stats(&raw, 1).unwrap();
        prop_assert!(close(s.avgdist, mean), "{} vs {}", s.avgdist, mean);
        prop_assert!(close(s.stdev, stdev), "{} vs {}", s.stdev, stdev);
    }

    #[test]
    fn restricted_stats_match_filtered_multiset(raw in vec(0usize..8, 0..60), freq in 1usize..8, maxstdev in 0.0f64..5.0) {
        let hist = SuccessiveHistogram::from_pairs(raw.iter().map(|&d| (d, 1)));
        let s = stats_restricted(&hist, freq, maxstdev);
        match naive_stats(&raw, freq) {
            Some((mean, stdev)) => {
                prop_assert!(close(s.avgdist, mean));
                prop_assert!(close(s.stdev, stdev));
            }
            None => {
                prop_assert_eq!(s.avgdist, 0.0);
                prop_assert_eq!(s.stdev, maxstdev + 1.0);
            }
        }
    }

    #[test]
    fn mindistfreq_one_is_plain(bins in vec((0usize..40, 1usize..20), 1..10)) {
        let hist = SuccessiveHistogram::from_pairs(bins);
        let plain = stats_plain(&hist).unwrap();
        prop_assert_eq!(stats_restricted(&hist, 1, 1.0), plain);
        prop_assert_eq!(frequent_stats(&hist, 1), Some(plain));
    }

    #[test]
    fn per_distance_counts_never_grow(db in database(6, 40), p in pattern(6), extra in 1u32..=6, ell in 0usize..12) {
        let mut q = p.clone();
        q.push(Item(extra));
        let hp = all_pairs_histogram(&tidset_of(&db, &p), ell);
        let hq = all_pairs_histogram(&tidset_of(&db, &q), ell);
        for d in 0..=ell {
            prop_assert!(hq.count(d) <= hp.count(d));
        }
    }

    #[test]
    fn fast_stability_matches_triple_scan(tids in positions(80, 25), w in 0usize..4) {
        prop_assert_eq!(stability_value(&tids, w), naive_stability_value(tids.positions(), w));
    }

    #[test]
    fn stability_bounds(tids in positions(80, 25), w in 0usize..4) {
        let s = stability_value(&tids, w);
        let m = tids.support();
        prop_assert_eq!(s.value, s.triples + s.left_endpoints + s.right_endpoints);
        prop_assert!(s.left_endpoints <= m && s.right_endpoints <= m);
        let triples = if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
        prop_assert!(s.value <= triples + 2 * m);
    }

    #[test]
    fn stability_never_grows_for_supersets(db in database(6, 40), p in pattern(6), extra in 1u32..=6, w in 0usize..3) {
        let mut q = p.clone();
        q.push(Item(extra));
        let vp = stability_value(&tidset_of(&db, &p), w).value;
        let vq = stability_value(&tidset_of(&db, &q), w).value;
        prop_assert!(vq <= vp);
    }

    #[test]
    fn stability_is_reversal_invariant(tids in positions(80, 25), w in 0usize..3) {
        let n = 80;
        let reversed = Tidset::new(tids.positions().iter().map(|&p| n - 1 - p).collect());
        prop_assert_eq!(stability_value(&tids, w).value, stability_value(&reversed, w).value);
    }

    #[test]
    fn mining_is_reversal_invariant(db in database(6, 40), minnumber in 1usize..4, maxstdev in 0.0f64..3.0, minavg in 0.0f64..2.0) {
        let params = MiningParams::new(minnumber, maxstdev, minavg);
        let fwd = mine_balanced(&db, &params).unwrap();
        let rev = mine_balanced(&db.reversed(), &params).unwrap();
        prop_assert_eq!(fwd.len(), rev.len());
        for (a, b) in fwd.iter().zip(&rev) {
            prop_assert_eq!(&a.items, &b.items);
            prop_assert_eq!(a.stats.balance_value, b.stats.balance_value);
            prop_assert!(close(a.stats.avgdist, b.stats.avgdist));
            prop_assert!(close(a.stats.stdev, b.stats.stdev));
        }
        let sp = StabilityParams::new(0, 1, 1);
        let sf: Vec<_> = mine_stable(&db, &sp).unwrap().into_iter().map(|r| (r.items, r.score.value)).collect();
        let sr: Vec<_> = mine_stable(&db.reversed(), &sp).unwrap().into_iter().map(|r| (r.items, r.score.value)).collect();
        prop_assert_eq!(sf, sr);
    }

    #[test]
    fn mining_is_deterministic(db in database(8, 40), threads in 0usize..4) {
        let params = MiningParams::new(2, 2.0, 0.5).with_threads(threads);
        let a = mine_balanced(&db, &params).unwrap();
        let b = mine_balanced(&db, &params.clone().with_threads(1)).unwrap();
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn bucketing_ignores_event_order(mut events in vec((0u64..20_000, 1u32..10), 0..60), window in 1u64..4000, seed in any::<u64>()) {
        let evs: Vec<Event> = events.iter().map(|&(t, i)| Event::new(t, i)).collect();
        let cfg = BucketConfig::with_window(window);
        let db = bucket(&evs, &cfg).unwrap();
        // cheap deterministic shuffle
        let k = events.len().max(1);
        events.rotate_left((seed as usize) % k);
        events.reverse();
        let shuffled: Vec<Event> = events.iter().map(|&(t, i)| Event::new(t, i)).collect();
        prop_assert_eq!(&bucket(&shuffled, &cfg).unwrap(), &db);

        let mut pairs: Vec<(u64, u32)> = evs.iter().map(|e| {
            let start = evs.iter().map(|e| e.timestamp).min().unwrap() / window * window;
            ((e.timestamp - start) / window, e.item.0)
        }).collect();
        pairs.sort_unstable();
        pairs.dedup();
        let sizes: usize = db.transactions().iter().map(|t| t.len()).sum();
        prop_assert_eq!(sizes, pairs.len());

        let doubled = bucket(&evs, &BucketConfig::with_window(window * 2)).unwrap();
        prop_assert!(doubled.len() <= db.len());
    }
}
