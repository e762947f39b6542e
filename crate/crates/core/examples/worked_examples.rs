//! The small hand-made databases: distance histograms, the balance value,
//! and stability values of an evenly and an unevenly spaced pattern.
//!
//! ```bash
//! cargo run -p balanceclat --example worked_examples
//! ```

use balanceclat::fixtures::{self, A, B};
use balanceclat::{
    balance_value, build_histograms, stability_value, stats_plain, tidset_of, AllPairsHistogram, Item,
};

fn main() {
    let db = fixtures::distance_example();
    for pattern in [vec![Item(A)], vec![Item(A), Item(B)]] {
        let tids = tidset_of(&db, &pattern);
        let (all, succ) = build_histograms(&tids, 10);
        let bins: Vec<String> = all
            .counts()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        let stats = stats_plain(&succ).expect("at least two occurrences");
        println!(
            "pattern {pattern:?} at {:?}: all-pairs [{}], t = {}, avg = {:.2}, stdev = {:.2}",
            tids.positions(),
            bins.join(" "),
            balance_value(&all),
            stats.avgdist,
            stats.stdev,
        );
    }

    let table = AllPairsHistogram::from_counts(vec![0, 5, 200, 30, 199]);
    println!("balance value of {:?} = {}", table.counts(), balance_value(&table));

    let ab = [Item(A), Item(B)];
    for (name, db) in [
        ("evenly spaced", fixtures::stability_example()),
        ("stretched", fixtures::stability_example_stretched()),
    ] {
        let tids = tidset_of(&db, &ab);
        let s = stability_value(&tids, 0);
        println!(
            "{name}: {{A,B}} at {:?} -> {} triples + {} left + {} right = {}",
            tids.positions(),
            s.triples,
            s.left_endpoints,
            s.right_endpoints,
            s.value
        );
    }
}
