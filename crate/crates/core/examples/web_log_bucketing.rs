//! From page-view events to a half-hourly transaction database, then a
//! balanced-pattern report with page names.
//!
//! The events here are synthetic. For a real access log, reduce each line to
//! `epoch_seconds url` first (see the README for an awk recipe) and use
//! `balanceclat bucket --keyed`.
//!
//! ```bash
//! cargo run -p balanceclat --example web_log_bucketing
//! ```

use balanceclat::ingest::{bucket, parse_keyed_events, BucketConfig};
use balanceclat::{mine_balanced, MiningParams, RunReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> balanceclat::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2006);
    let mut log = String::new();
    for window in 0..31 * 48u64 {
        let base = window * 1800;
        // two course pages and the front page, visited together every two hours
        if window % 4 == 1 && rng.random_bool(0.9) {
            for page in ["/", "/staff/prof-a.html", "/staff/prof-b.html"] {
                log.push_str(&format!("{} {page}\n", base + rng.random_range(0..1800)));
            }
        }
        // a weekly newsletter page
        if window % (7 * 48) == 20 {
            log.push_str(&format!("{} /news/weekly.html\n", base + 60));
        }
        for _ in 0..rng.random_range(0..4) {
            let page = rng.random_range(0..40);
            log.push_str(&format!("{} /misc/{page}.html\n", base + rng.random_range(0..1800)));
        }
    }

    let (events, names) = parse_keyed_events(log.as_bytes())?;
    let db = bucket(&events, &BucketConfig::default())?;
    println!("# {} events over 31 days -> {} transactions", events.len(), db.len());

    let params = MiningParams::new(200, 2.0, 2.0);
    let start = std::time::Instant::now();
    let results = mine_balanced(&db, &params)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    RunReport::balanced(&params, db.len(), &results, 20, Some(&names), wall_ms).write_text(std::io::stdout())?;
    Ok(())
}
