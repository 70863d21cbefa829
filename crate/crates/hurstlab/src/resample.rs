//! Perturbation protocols: increment shuffling, sign-preserving Gaussian
//! surrogates, and removal of day-crossing returns.
//!
//! Shuffling destroys serial order while preserving the marginal increment
//! distribution exactly; the surrogate preserves the sign process while
//! replacing fat-tailed magnitudes with half-normal ones. Together they
//! separate the two contributions to an elevated Hurst estimate: genuine
//! temporal correlation and self-similar heavy tails.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::series::{ReturnObs, ReturnSeries};
use crate::synth::member_seed;

/// Shuffle protocol: number of independent permutations and base seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShuffleSpec {
    pub repeats: usize,
    pub seed: u64,
}

impl ShuffleSpec {
    /// Five independent permutations by default.
    pub fn new(seed: u64) -> Self {
        Self { repeats: 5, seed }
    }

    pub fn with_repeats(mut self, repeats: usize) -> Self {
        self.repeats = repeats;
        self
    }
}

/// Independent uniform permutations of the return values (Fisher-Yates).
///
/// Timestamps keep their original positions; day-crossing flags are
/// meaningless after reordering and are set to false. Repeat k draws from
/// [`member_seed`]`(seed, k)`, so repeats are reproducible in isolation.
pub fn shuffle_returns(returns: &ReturnSeries, spec: &ShuffleSpec) -> Result<Vec<ReturnSeries>> {
    if returns.is_empty() {
        return Err(Error::NoSamples);
    }
    if spec.repeats == 0 {
        return Err(Error::ZeroRepeats);
    }
    let mut out = Vec::with_capacity(spec.repeats);
    for k in 0..spec.repeats {
        let mut rng = ChaCha8Rng::seed_from_u64(member_seed(spec.seed, k as u64));
        let mut values: Vec<f64> = returns.values().iter().map(|o| o.value).collect();
        values.shuffle(&mut rng);
        let obs = returns
            .values()
            .iter()
            .zip(values)
            .map(|(orig, value)| ReturnObs {
                timestamp: orig.timestamp,
                value,
                crosses_day: false,
            })
            .collect();
        out.push(ReturnSeries::new(obs)?);
    }
    Ok(out)
}

/// Sign-preserving Gaussian surrogate.
///
/// Each return keeps its sign and takes the magnitude of a fresh standard
/// normal draw; zero returns stay zero. One draw is consumed per element
/// whether or not it is used, so element k's replacement depends only on the
/// seed and k.
pub fn gaussian_surrogate(returns: &ReturnSeries, seed: u64) -> Result<ReturnSeries> {
    if returns.is_empty() {
        return Err(Error::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let obs = returns
        .values()
        .iter()
        .map(|orig| {
            let g: f64 = rng.sample(StandardNormal);
            let value = if orig.value > 0.0 {
                g.abs()
            } else if orig.value < 0.0 {
                -g.abs()
            } else {
                0.0
            };
            ReturnObs { value, ..*orig }
        })
        .collect();
    ReturnSeries::new(obs)
}

/// Drops every return that crosses a day boundary; the remainder keeps its
/// order, so a rebuilt profile is continuous by construction.
pub fn remove_eod_returns(returns: &ReturnSeries) -> ReturnSeries {
    let obs: Vec<ReturnObs> = returns
        .values()
        .iter()
        .filter(|o| !o.crosses_day)
        .copied()
        .collect();
    ReturnSeries::new(obs).expect("filtering cannot introduce non-finite values")
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn ts(day: u32, min: u32) -> chrono::NaiveDateTime {
        NaiveDate::from_ymd_opt(2003, 1, day)
            .unwrap()
            .and_hms_opt(9, 0, 0)
            .unwrap()
            + chrono::Duration::minutes(i64::from(min))
    }

    fn returns_from(values: &[f64]) -> ReturnSeries {
        ReturnSeries::new(
            values
                .iter()
                .enumerate()
                .map(|(i, &value)| ReturnObs {
                    timestamp: ts(1, i as u32),
                    value,
                    crosses_day: false,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_element_shuffle_is_identity() {
        let r = returns_from(&[0.25]);
        let out = shuffle_returns(&r, &ShuffleSpec::new(7)).unwrap();
        assert_eq!(out.len(), 5);
        for s in out {
            assert_eq!(s.values(), r.values());
        }
    }

    #[test]
    fn shuffle_preserves_multiset() {
        let r = returns_from(&[0.1, -0.2, 0.3, 0.0, -0.5, 0.7, 0.2]);
        let out = shuffle_returns(&r, &ShuffleSpec::new(11).with_repeats(3)).unwrap();
        let mut original: Vec<f64> = r.values().iter().map(|o| o.value).collect();
        original.sort_by(f64::total_cmp);
        for s in out {
            let mut got: Vec<f64> = s.values().iter().map(|o| o.value).collect();
            got.sort_by(f64::total_cmp);
            assert_eq!(got, original);
        }
    }

    #[test]
    fn shuffle_repeats_differ_and_are_stable() {
        let r = returns_from(&(0..100).map(|i| i as f64 / 100.0).collect::<Vec<_>>());
        let spec = ShuffleSpec::new(3);
        let a = shuffle_returns(&r, &spec).unwrap();
        let b = shuffle_returns(&r, &spec).unwrap();
        assert_eq!(a, b);
        assert_ne!(a[0].values(), a[1].values());
    }

    #[test]
    fn surrogate_preserves_signs_exactly() {
        let r = returns_from(&[0.4, -0.1, 0.0, 2.5, -3.0, 0.0, 0.0001]);
        let s = gaussian_surrogate(&r, 21).unwrap();
        assert_eq!(s.len(), r.len());
        for (orig, sur) in r.values().iter().zip(s.values()) {
            assert_eq!(orig.value.signum(), sur.value.signum());
            if orig.value == 0.0 {
                assert_eq!(sur.value, 0.0);
            }
        }
    }

    #[test]
    fn all_zero_returns_stay_zero() {
        let r = returns_from(&[0.0; 16]);
        let s = gaussian_surrogate(&r, 5).unwrap();
        assert!(s.values().iter().all(|o| o.value == 0.0));
    }

    #[test]
    fn eod_removal_drops_flagged_only() {
        let obs = vec![
            ReturnObs { timestamp: ts(1, 0), value: 0.1, crosses_day: false },
            ReturnObs { timestamp: ts(2, 0), value: 9.0, crosses_day: true },
            ReturnObs { timestamp: ts(2, 1), value: 0.2, crosses_day: false },
        ];
        let r = ReturnSeries::new(obs).unwrap();
        let filtered = remove_eod_returns(&r);
        assert_eq!(filtered.len(), 2);
        assert_eq!(filtered.values()[0].value, 0.1);
        assert_eq!(filtered.values()[1].value, 0.2);
        // Idempotent.
        assert_eq!(remove_eod_returns(&filtered), filtered);
    }

    #[test]
    fn no_boundaries_is_identity() {
        let r = returns_from(&[0.1, 0.2, 0.3]);
        assert_eq!(remove_eod_returns(&r), r);
    }
}
