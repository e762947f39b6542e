//! Small hand-written databases used throughout the tests and examples.
//!
//! Letters map to ids `A = 1, B = 2, ..., F = 6`.

use crate::transactions::TransactionDatabase;

pub const A: u32 = 1;
pub const B: u32 = 2;
pub const C: u32 = 3;
pub const D: u32 = 4;
pub const E: u32 = 5;
pub const F: u32 = 6;

/// Nine transactions where `{A, B}` occurs at every second position.
pub fn stability_example() -> TransactionDatabase {
    TransactionDatabase::from_id_lists([
        vec![A, B, C],
        vec![D, C],
        vec![A, B, E],
        vec![E, F],
        vec![A, B, F],
        vec![E, F],
        vec![A, B, F],
        vec![E, F],
        vec![A, B, C],
    ])
}

/// [`stability_example`] with two `{E, F}` transactions inserted after the
/// first and two more before the last, so `{A, B}` sits at 0, 4, 6, 8, 12.
pub fn stability_example_stretched() -> TransactionDatabase {
    let base = stability_example();
    let t = base.transactions();
    let ef = t[3].clone();
    let mut out = vec![t[0].clone(), ef.clone(), ef.clone()];
    out.extend(t[1..8].iter().cloned());
    out.extend([ef.clone(), ef, t[8].clone()]);
    TransactionDatabase::new(out)
}

/// Thirteen transactions: `A` at 0, 3, 6, 9 and `B` at 3, 6, 9, 12.
pub fn distance_example() -> TransactionDatabase {
    let mut lists = vec![Vec::new(); 13];
    for p in [0, 3, 6, 9] {
        lists[p].push(A);
    }
    for p in [3, 6, 9, 12] {
        lists[p].push(B);
    }
    TransactionDatabase::from_id_lists(lists)
}
