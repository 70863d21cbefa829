//! Rolling backward-window Hurst exponent series H_L(t).
//!
//! A window of L samples ending at index t slides over the profile in steps
//! of `shift`; each position yields one local estimate. Windows are
//! independent and are computed in parallel, assembled in t order, so results
//! are identical to serial execution regardless of thread count.

use rayon::prelude::*;

use crate::dfa::{self, DfaConfig};
use crate::error::{Error, Result};
use crate::series::Profile;

/// Shorter windows are dominated by estimator noise.
pub const MIN_WINDOW: usize = 512;

/// Rolling-estimate configuration. The per-window scale grid is the default
/// geometric grid for a series of length `window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RollingConfig {
    pub window: usize,
    pub shift: usize,
    pub degree: usize,
}

impl RollingConfig {
    pub fn new(window: usize, shift: usize, degree: usize) -> Result<Self> {
        if window < MIN_WINDOW {
            return Err(Error::WindowTooSmall {
                window,
                min: MIN_WINDOW,
            });
        }
        if shift == 0 {
            return Err(Error::ZeroShift);
        }
        Ok(Self {
            window,
            shift,
            degree,
        })
    }
}

/// One local estimate: the window ends at profile index `t_index`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurstSample {
    pub t_index: usize,
    pub timestamp: Option<chrono::NaiveDateTime>,
    pub h: f64,
    /// Slope standard error of this window's log-log fit.
    pub stderr: f64,
}

/// Local Hurst exponent series for a fixed window and shift.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalHurstSeries {
    pub samples: Vec<HurstSample>,
    pub window: usize,
    pub shift: usize,
}

impl LocalHurstSeries {
    /// Hurst values in t order.
    pub fn h_values(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.h).collect()
    }

    /// Attaches per-sample timestamps from a profile-aligned timeline
    /// (`timeline[k]` is the time of profile index k).
    pub fn with_timestamps(mut self, timeline: &[chrono::NaiveDateTime]) -> Self {
        for s in &mut self.samples {
            s.timestamp = timeline.get(s.t_index).copied();
        }
        self
    }
}

/// Local Hurst exponents at every window position.
///
/// Window end indices run t = L-1, L-1+shift, ... up to N-1, giving
/// `floor((N - L) / shift) + 1` samples.
pub fn rolling_hurst(profile: &Profile, config: &RollingConfig) -> Result<LocalHurstSeries> {
    let n = profile.len();
    let l = config.window;
    if n < l {
        return Err(Error::WindowExceedsSeries { window: l, len: n });
    }
    // The scale grid depends only on the window length; build it once.
    let dfa_config = DfaConfig::geometric(l, config.degree)?;
    let values = profile.values();

    let count = (n - l) / config.shift + 1;
    let samples: Result<Vec<HurstSample>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let t_index = l - 1 + i * config.shift;
            let slice = &values[t_index + 1 - l..=t_index];
            let curve = dfa::fluctuation_curve_values(slice, &dfa_config)?;
            Ok(HurstSample {
                t_index,
                timestamp: None,
                h: curve.hurst,
                stderr: curve.fit_stderr,
            })
        })
        .collect();

    Ok(LocalHurstSeries {
        samples: samples?,
        window: l,
        shift: config.shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn noisy_profile(n: usize, seed: u64) -> Profile {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = 0.0;
        let values = (0..n)
            .map(|_| {
                x += rng.random::<f64>() - 0.5;
                x
            })
            .collect();
        Profile::new(values).unwrap()
    }

    #[test]
    fn single_window_when_lengths_match() {
        let p = noisy_profile(512, 1);
        let cfg = RollingConfig::new(512, 10, 2).unwrap();
        let series = rolling_hurst(&p, &cfg).unwrap();
        assert_eq!(series.samples.len(), 1);
        assert_eq!(series.samples[0].t_index, 511);
    }

    #[test]
    fn sample_count_follows_index_grid() {
        let shift = 100;
        let p = noisy_profile(512 + 3 * shift, 2);
        let cfg = RollingConfig::new(512, shift, 2).unwrap();
        let series = rolling_hurst(&p, &cfg).unwrap();
        assert_eq!(series.samples.len(), 4);
        let idx: Vec<usize> = series.samples.iter().map(|s| s.t_index).collect();
        assert_eq!(idx, vec![511, 611, 711, 811]);
    }

    #[test]
    fn window_shorter_than_floor_rejected() {
        assert!(matches!(
            RollingConfig::new(256, 10, 2),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn profile_shorter_than_window_rejected() {
        let p = noisy_profile(400, 3);
        let cfg = RollingConfig::new(512, 10, 2).unwrap();
        assert!(matches!(
            rolling_hurst(&p, &cfg),
            Err(Error::WindowExceedsSeries { .. })
        ));
    }

    #[test]
    fn each_sample_depends_only_on_its_window() {
        let p = noisy_profile(2048, 4);
        let cfg = RollingConfig::new(512, 300, 1).unwrap();
        let series = rolling_hurst(&p, &cfg).unwrap();
        for s in &series.samples {
            let slice = p.values()[s.t_index + 1 - 512..=s.t_index].to_vec();
            let sub = Profile::new(slice).unwrap();
            let curve = crate::dfa::estimate_hurst(&sub, 1).unwrap();
            assert_eq!(curve.hurst, s.h);
            assert_eq!(curve.fit_stderr, s.stderr);
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let p = noisy_profile(4096, 5);
        let cfg = RollingConfig::new(1024, 64, 2).unwrap();
        let a = rolling_hurst(&p, &cfg).unwrap();
        let b = rolling_hurst(&p, &cfg).unwrap();
        assert_eq!(a, b);
    }
}
