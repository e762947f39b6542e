//! Runtime sweeps over dataset size and over `minnumber`.

use std::io::Write;
use std::time::Instant;

use crate::datagen::{generate, GeneratorConfig};
use crate::error::{Error, Result};
use crate::miner::{mine_balanced, MiningParams};
use crate::transactions::TransactionDatabase;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub sweep_value: usize,
    /// Median over the repeats.
    pub wall_ms: f64,
    pub n_patterns: usize,
}

/// Runs `f` `repeat` times and returns the median wall time in milliseconds
/// together with the value returned by the last run.
pub fn time_median<F: FnMut() -> Result<usize>>(repeat: usize, mut f: F) -> Result<(f64, usize)> {
    if repeat == 0 {
        return Err(Error::param("repeat must be at least 1"));
    }
    let mut times = Vec::with_capacity(repeat);
    let mut last = 0;
    for _ in 0..repeat {
        let start = Instant::now();
        last = f()?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok((median(&mut times), last))
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// `minnumber` used for a dataset of `size` transactions: 10% of the size, at least 1.
pub fn size_sweep_minnumber(size: usize) -> usize {
    ((size as f64 * 0.1).round() as usize).max(1)
}

/// Mines `db` once per `minnumber`, keeping the other thresholds of `template`.
pub fn minnumber_sweep(
    db: &TransactionDatabase,
    minnumbers: &[usize],
    template: &MiningParams,
    repeat: usize,
) -> Result<Vec<BenchRow>> {
    if minnumbers.is_empty() {
        return Err(Error::param("the minnumber sweep is empty"));
    }
    minnumbers
        .iter()
        .map(|&minnumber| {
            let params = MiningParams {
                minnumber,
                ..template.clone()
            };
            let (wall_ms, n_patterns) = time_median(repeat, || Ok(mine_balanced(db, &params)?.len()))?;
            Ok(BenchRow {
                sweep_value: minnumber,
                wall_ms,
                n_patterns,
            })
        })
        .collect()
}

/// Generates one database per size from `base` and mines it with
/// `minnumber` set to 10% of the size. Generation is not timed.
pub fn size_sweep(
    base: &GeneratorConfig,
    sizes: &[usize],
    template: &MiningParams,
    repeat: usize,
) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(Error::param("the size sweep is empty"));
    }
    sizes
        .iter()
        .map(|&size| {
            let db = generate(&base.clone().with_transactions(size))?;
            let params = MiningParams {
                minnumber: size_sweep_minnumber(size),
                ..template.clone()
            };
            let (wall_ms, n_patterns) = time_median(repeat, || Ok(mine_balanced(&db, &params)?.len()))?;
            Ok(BenchRow {
                sweep_value: size,
                wall_ms,
                n_patterns,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["sweep_value", "wall_ms", "n_patterns"])?;
    for row in rows {
        writer.write_record([
            row.sweep_value.to_string(),
            format!("{:.3}", row.wall_ms),
            row.n_patterns.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}
