//! Stable and balanced patterns on the same data. An item present in almost
//! every transaction is perfectly regular, but a minimum average distance
//! keeps it out of the balanced result while the stability measure ranks it
//! first.
//!
//! ```bash
//! cargo run -p balanceclat --example stable_vs_balanced
//! ```

use balanceclat::{
    mine_balanced, mine_stable, MiningParams, StabilityParams, Transaction, TransactionDatabase,
};

fn main() -> balanceclat::Result<()> {
    // item 1 everywhere, items 2 and 3 every third transaction, item 4 at random-ish spots
    let transactions: Vec<Transaction> = (0..60usize)
        .map(|pos| {
            let mut ids = vec![1];
            if pos % 3 == 2 {
                ids.extend([2, 3]);
            }
            if pos * 7 % 11 < 3 {
                ids.push(4);
            }
            Transaction::from_ids(ids)
        })
        .collect();
    let db = TransactionDatabase::new(transactions);

    println!("stable patterns (w = 0, minsup = 10, minstable = 50):");
    for r in mine_stable(&db, &StabilityParams::new(0, 50, 10))?.iter().take(6) {
        println!("  {:?} value {} support {}", ids(&r.items), r.score.value, r.support);
    }

    println!("balanced patterns (minnumber = 10, maxstdev = 0.5, minavg = 1.0):");
    for r in mine_balanced(&db, &MiningParams::new(10, 0.5, 1.0))? {
        println!(
            "  {:?} t {} avg {:.2} stdev {:.2}",
            ids(&r.items),
            r.stats.balance_value,
            r.stats.avgdist,
            r.stats.stdev
        );
    }
    Ok(())
}

fn ids(items: &[balanceclat::Item]) -> Vec<u32> {
    items.iter().map(|i| i.id()).collect()
}
