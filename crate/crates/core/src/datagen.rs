//! Synthetic databases.
//!
//! [`generate`] plants one pattern of items `1..=pattern_size` at every
//! `period`-th transaction (positions `period - 1, 2 * period - 1, ...`).
//! Each planted item independently drops out of a scheduled occurrence with
//! probability `noise_percent / 100`. The remaining items
//! `pattern_size + 1..=n_items` appear in any transaction independently with
//! probability `background_density`.
//!
//! Randomness comes from ChaCha8 seeded with [`SeedableRng::seed_from_u64`],
//! so a config always produces the same database on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::transactions::{Item, Transaction, TransactionDatabase};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n_transactions: usize,
    pub n_items: u32,
    pub pattern_size: u32,
    pub period: usize,
    pub noise_percent: f64,
    pub background_density: f64,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    /// 2000 transactions over 200 items, a 5-item pattern every 4th
    /// transaction, no noise and an empty background.
    fn default() -> Self {
        GeneratorConfig {
            n_transactions: 2000,
            n_items: 200,
            pattern_size: 5,
            period: 4,
            noise_percent: 0.0,
            background_density: 0.0,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    pub fn with_noise(mut self, noise_percent: f64) -> Self {
        self.noise_percent = noise_percent;
        self
    }

    pub fn with_background(mut self, density: f64) -> Self {
        self.background_density = density;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_transactions(mut self, n: usize) -> Self {
        self.n_transactions = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.pattern_size > self.n_items {
            return Err(Error::param(format!(
                "pattern size {} exceeds the number of items {}",
                self.pattern_size, self.n_items
            )));
        }
        if self.period < 1 {
            return Err(Error::param("period must be at least 1"));
        }
        if !(0.0..=100.0).contains(&self.noise_percent) {
            return Err(Error::param(format!(
                "noise must lie in [0, 100] percent (got {})",
                self.noise_percent
            )));
        }
        check_probability("background density", self.background_density)
    }

    /// The planted pattern, ascending.
    pub fn planted_items(&self) -> Vec<Item> {
        (1..=self.pattern_size).map(Item).collect()
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::param(format!("{name} must lie in [0, 1] (got {p})")))
    }
}

pub fn generate(config: &GeneratorConfig) -> Result<TransactionDatabase> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let keep = 1.0 - config.noise_percent / 100.0;
    let mut transactions = Vec::with_capacity(config.n_transactions);
    for pos in 0..config.n_transactions {
        let mut items = Vec::new();
        if (pos + 1) % config.period == 0 {
            for id in 1..=config.pattern_size {
                if rng.random::<f64>() < keep {
                    items.push(Item(id));
                }
            }
        }
        if config.background_density > 0.0 {
            for id in config.pattern_size + 1..=config.n_items {
                if rng.random::<f64>() < config.background_density {
                    items.push(Item(id));
                }
            }
        }
        transactions.push(Transaction::new(items));
    }
    Ok(TransactionDatabase::new(transactions))
}

/// Items `1..=n_items`, each present in each transaction with probability `density`.
///
/// # Panics
/// If `density` is outside `[0, 1]`.
pub fn generate_random(n_transactions: usize, n_items: u32, density: f64, seed: u64) -> TransactionDatabase {
    check_probability("density", density).expect("invalid density");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let transactions = (0..n_transactions)
        .map(|_| {
            (1..=n_items)
                .filter(|_| rng.random::<f64>() < density)
                .map(Item)
                .collect()
        })
        .collect();
    TransactionDatabase::new(transactions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::histogram::{all_pairs_histogram, successive_histogram};
    use crate::transactions::tidset_of;

    #[test]
    fn noiseless_pattern_sits_on_schedule() {
        let db = generate(&GeneratorConfig::default()).unwrap();
        assert_eq!(db.len(), 2000);
        let tids = tidset_of(&db, &[Item(1), Item(2), Item(3), Item(4), Item(5)]);
        let expected: Vec<usize> = (3..2000).step_by(4).collect();
        assert_eq!(tids.positions(), expected.as_slice());
        assert_eq!(tids.support(), 500);
        assert_eq!(successive_histogram(&tids).iter().collect::<Vec<_>>(), vec![(3, 499)]);
        assert_eq!(db.item_universe().len(), 5);
    }

    #[test]
    fn noiseless_all_pairs_closed_form() {
        let db = generate(&GeneratorConfig::default()).unwrap();
        let tids = tidset_of(&db, &[Item(1), Item(2), Item(3), Item(4), Item(5)]);
        for ell in [0, 3, 7, 10, 20] {
            let all = all_pairs_histogram(&tids, ell);
            for d in 0..=ell {
                let expected = if d % 4 == 3 { 500 - (d + 1) / 4 } else { 0 };
                assert_eq!(all.count(d), expected, "ell {ell} distance {d}");
            }
        }
    }

    #[test]
    fn full_noise_removes_pattern() {
        let db = generate(&GeneratorConfig::default().with_noise(100.0)).unwrap();
        assert!(db.transactions().iter().all(Transaction::is_empty));
    }

    #[test]
    fn same_seed_same_bytes() {
        let cfg = GeneratorConfig::default().with_noise(20.0).with_background(0.02).with_seed(9);
        assert_eq!(generate(&cfg).unwrap().to_text(), generate(&cfg).unwrap().to_text());
        let other = generate(&cfg.clone().with_seed(10)).unwrap();
        assert_ne!(generate(&cfg).unwrap(), other);
    }

    #[test]
    fn rejects_bad_configs() {
        let base = GeneratorConfig::default();
        assert!(generate(&GeneratorConfig { pattern_size: 300, ..base.clone() }).is_err());
        assert!(generate(&GeneratorConfig { period: 0, ..base.clone() }).is_err());
        assert!(generate(&base.clone().with_noise(101.0)).is_err());
        assert!(generate(&base.clone().with_background(-0.1)).is_err());
    }

    #[test]
    fn random_density_extremes() {
        let empty = generate_random(30, 8, 0.0, 1);
        assert!(empty.transactions().iter().all(Transaction::is_empty));
        let full = generate_random(30, 8, 1.0, 1);
        assert!(full.transactions().iter().all(|t| t.len() == 8));
        assert_eq!(generate_random(60, 12, 0.3, 5), generate_random(60, 12, 0.3, 5));
    }
}
