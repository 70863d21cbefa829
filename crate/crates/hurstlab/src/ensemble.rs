//! Seeded Monte Carlo ensembles of Hurst estimates.
//!
//! Members generate independently from split seeds and are collected in
//! member order, so the result is identical for any worker count and member
//! k can be regenerated alone via [`member_seed`](crate::synth::member_seed).

use rayon::prelude::*;

use crate::dfa;
use crate::error::Result;
use crate::synth::{self, FbmGenerator, LevySpec};

/// Hurst estimates over `members` independent fBm paths of the given length.
pub fn fbm_hurst_samples(
    hurst: f64,
    length: usize,
    members: usize,
    base_seed: u64,
    degree: usize,
) -> Result<Vec<f64>> {
    let generator = FbmGenerator::new(hurst, length)?;
    (0..members)
        .into_par_iter()
        .map(|k| {
            let path = generator.sample(synth::member_seed(base_seed, k as u64));
            Ok(dfa::estimate_hurst(&path, degree)?.hurst)
        })
        .collect()
}

/// Hurst estimates over `members` independent symmetric alpha-stable walks.
pub fn levy_hurst_samples(
    alpha: f64,
    length: usize,
    members: usize,
    base_seed: u64,
    degree: usize,
) -> Result<Vec<f64>> {
    (0..members)
        .into_par_iter()
        .map(|k| {
            let path = synth::generate_levy(&LevySpec {
                alpha,
                length,
                seed: synth::member_seed(base_seed, k as u64),
            })?;
            Ok(dfa::estimate_hurst(&path, degree)?.hurst)
        })
        .collect()
}
