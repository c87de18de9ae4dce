//! Shuffle surrogates and seeded synthetic series.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Result;
use crate::series::TimeSeries;

/// Name of the generator behind every seeded routine in this module.
pub const GENERATOR: &str = "ChaCha20 (rand_chacha 0.9, seed_from_u64)";

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniformly random reordering of the values (Fisher-Yates). Date labels are
/// dropped since they no longer describe the rows.
pub fn shuffle_surrogate(series: &TimeSeries, seed: u64) -> TimeSeries {
    let mut values = series.values().to_vec();
    let mut rng = rng(seed);
    for i in (1..values.len()).rev() {
        let j = rng.random_range(0..=i);
        values.swap(i, j);
    }
    TimeSeries::from_parts_unchecked(series.name().to_string(), values, None)
}

/// i.i.d. draws from `U[0, 1)`.
pub fn white_noise(name: &str, len: usize, seed: u64) -> Result<TimeSeries> {
    let mut rng = rng(seed);
    TimeSeries::new(name, (0..len).map(|_| rng.random::<f64>()).collect())
}

/// `x[t] = φ x[t-1] + ε[t]` with standard normal innovations, started at 0.
pub fn ar1(name: &str, len: usize, phi: f64, seed: u64) -> Result<TimeSeries> {
    let mut rng = rng(seed);
    let mut x = 0.0;
    let values = (0..len)
        .map(|_| {
            let eps: f64 = StandardNormal.sample(&mut rng);
            x = phi * x + eps;
            x
        })
        .collect();
    TimeSeries::new(name, values)
}
