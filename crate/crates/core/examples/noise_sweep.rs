//! How many subsets of the planted pattern survive as noise grows, with and
//! without restricting the statistics to frequent distances.
//!
//! ```bash
//! cargo run --release -p balanceclat --example noise_sweep
//! ```

use balanceclat::datagen::generate;
use balanceclat::{mine_balanced, GeneratorConfig, MiningParams};

const SEEDS: u64 = 20;

fn mean_found(noise: f64, mindistfreq: usize) -> f64 {
    let params = MiningParams::new(150, 2.5, 2.0).with_mindistfreq(mindistfreq);
    let total: usize = (0..SEEDS)
        .map(|seed| {
            let config = GeneratorConfig::default().with_noise(noise).with_seed(seed);
            let planted = config.planted_items();
            let db = generate(&config).unwrap();
            mine_balanced(&db, &params)
                .unwrap()
                .iter()
                .filter(|r| r.items.iter().all(|i| planted.contains(i)))
                .count()
        })
        .sum();
    total as f64 / SEEDS as f64
}

fn main() {
    println!("noise_percent,found_mindistfreq_1,found_mindistfreq_50");
    for noise in [0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0] {
        println!("{noise},{:.2},{:.2}", mean_found(noise, 1), mean_found(noise, 50));
    }
}
