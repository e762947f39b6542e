//! Generate a database with a five-item pattern planted at every fourth
//! transaction and mine it back.
//!
//! ```bash
//! cargo run -p balanceclat --example planted_pattern
//! cargo run -p balanceclat --example planted_pattern -- 10   # 10% noise
//! ```

use balanceclat::datagen::generate;
use balanceclat::{mine_balanced_with_stats, GeneratorConfig, MiningParams, RunReport};

fn main() -> balanceclat::Result<()> {
    let noise: f64 = std::env::args().nth(1).map_or(0.0, |s| s.parse().expect("noise percent"));
    let config = GeneratorConfig::default().with_noise(noise).with_seed(7);
    let db = generate(&config)?;

    let params = MiningParams::new(150, 2.5, 2.0);
    let start = std::time::Instant::now();
    let (results, stats) = mine_balanced_with_stats(&db, &params)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;

    RunReport::balanced(&params, db.len(), &results, 20, None, wall_ms).write_text(std::io::stdout())?;
    println!(
        "# searched {} candidates, pruned {}",
        stats.evaluated, stats.pruned
    );
    Ok(())
}
