//! Cross-check the depth-first miners against brute-force enumeration on
//! random small databases.
//!
//! ```bash
//! cargo run --release -p balanceclat --example oracle_check -- 500
//! ```

use balanceclat::datagen::generate_random;
use balanceclat::oracle::{oracle_balanced, oracle_stable};
use balanceclat::{mine_balanced, mine_stable, MiningParams, StabilityParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let cases: u64 = std::env::args().nth(1).map_or(200, |s| s.parse().expect("case count"));
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut patterns = 0;
    for seed in 0..cases {
        let db = generate_random(rng.random_range(5..=60), rng.random_range(2..=12), rng.random_range(0.1..0.6), seed);
        let params = MiningParams::new(rng.random_range(1..=5), rng.random_range(0.0..3.0), rng.random_range(0.0..3.0))
            .with_ell(rng.random_range(0..=12))
            .with_mindistfreq(rng.random_range(1..=3));
        let fast = mine_balanced(&db, &params).unwrap();
        let slow = oracle_balanced(&db, &params).unwrap();
        assert_eq!(fast.len(), slow.len(), "seed {seed}");
        for (a, b) in fast.iter().zip(&slow) {
            assert_eq!(a.items, b.items, "seed {seed}");
            assert!((a.stats.stdev - b.stats.stdev).abs() <= 1e-9, "seed {seed}");
        }

        let sparams = StabilityParams::new(rng.random_range(0..=2), rng.random_range(0..=25), rng.random_range(1..=6));
        assert_eq!(mine_stable(&db, &sparams).unwrap(), oracle_stable(&db, &sparams).unwrap(), "seed {seed}");
        patterns += fast.len();
    }
    println!("{cases} databases agree ({patterns} balanced patterns)");
}
