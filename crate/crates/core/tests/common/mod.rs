//! Shared helpers for integration tests.
#![allow(dead_code)]

pub mod zeta_oracle;

use paircorr_core::{Zero, ZeroDataset, ZeroSource};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` on-line ordinates above `lo` with gaps uniform in `[0.05, 3)`.
pub fn random_ordinates(rng: &mut ChaCha8Rng, n: usize, lo: f64) -> Vec<f64> {
    let mut g = lo;
    (0..n)
        .map(|_| {
            g += rng.gen_range(0.05..3.0);
            g
        })
        .collect()
}

pub fn on_line(gs: &[f64], lo: f64, hi: f64) -> ZeroDataset {
    ZeroDataset::from_ordinates(gs, lo, hi, ZeroSource::Synthetic).unwrap()
}

/// `n` zeros above `lo`; about a third of the ordinates carry a symmetric
/// off-line pair `1/2 ± δ`, `δ < max_offset`, counting as two zeros.
pub fn random_mixed(rng: &mut ChaCha8Rng, n: usize, lo: f64, max_offset: f64) -> ZeroDataset {
    let gs = random_ordinates(rng, n, lo);
    let mut zs = Vec::new();
    for &g in &gs {
        if zs.len() + 2 <= n && rng.gen_bool(1.0 / 3.0) {
            let d = rng.gen_range(0.01 * max_offset..max_offset);
            zs.push(Zero::new(0.5 - d, g, 1));
            zs.push(Zero::new(0.5 + d, g, 1));
        } else if zs.len() < n {
            zs.push(Zero::on_line(g));
        }
    }
    let hi = gs[gs.len() - 1] + 1.0;
    ZeroDataset::new(zs, lo, hi, ZeroSource::Synthetic).unwrap()
}
