//! Runtime against dataset size (minnumber at 10% of the size) and against
//! minnumber on a fixed database, as CSV on stdout.
//!
//! ```bash
//! cargo run --release -p balanceclat --example runtime_sweep
//! ```

use balanceclat::bench::{minnumber_sweep, size_sweep, write_csv};
use balanceclat::datagen::generate;
use balanceclat::{GeneratorConfig, MiningParams};

fn main() -> balanceclat::Result<()> {
    let template = MiningParams::new(1, 2.5, 2.0).with_ell(10);
    let base = GeneratorConfig::default().with_noise(10.0).with_background(0.05);

    println!("# size sweep");
    let rows = size_sweep(&base, &[100, 250, 500, 1000, 2000, 4000], &template, 3)?;
    write_csv(&rows, std::io::stdout())?;

    println!("# minnumber sweep, 1488 transactions");
    let db = generate(&base.clone().with_transactions(1488))?;
    let rows = minnumber_sweep(&db, &[1, 2, 5, 10, 20, 50, 100, 150, 200], &template.with_threads(0), 3)?;
    write_csv(&rows, std::io::stdout())?;
    Ok(())
}
