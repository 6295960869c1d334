//! Seeded synthetic matrices for benchmarking.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tribic::NumericalDataset;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyntheticSpec {
    pub rows: usize,
    pub cols: usize,
    /// Values are integers in `[0, vmax]`.
    pub vmax: u32,
    /// Rectangles overwritten with a narrow value band.
    pub planted: usize,
    pub seed: u64,
}

/// Uniform integer matrix with optional planted biclusters. The seed fully
/// determines the result.
pub fn generate(spec: &SyntheticSpec) -> Result<NumericalDataset> {
    if spec.rows == 0 || spec.cols == 0 {
        return Err(CliError::Usage("--rows and --cols must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows: Vec<Vec<f64>> = (0..spec.rows)
        .map(|_| {
            (0..spec.cols)
                .map(|_| f64::from(rng.gen_range(0..=spec.vmax)))
                .collect()
        })
        .collect();

    let band = (spec.vmax / 100).max(1).min(spec.vmax);
    for _ in 0..spec.planted {
        let n_rows = rng.gen_range(1..=(spec.rows / 10).max(1));
        let n_cols = rng.gen_range(1..=(spec.cols / 3).max(1));
        let base = rng.gen_range(0..=spec.vmax - band);
        for g in sample(&mut rng, spec.rows, n_rows) {
            for m in sample(&mut rng, spec.cols, n_cols) {
                rows[g][m] = f64::from(base + rng.gen_range(0..=band));
            }
        }
    }
    Ok(NumericalDataset::from_rows(rows)?)
}
