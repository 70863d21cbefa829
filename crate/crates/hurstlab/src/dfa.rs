//! Detrended fluctuation analysis.
//!
//! The profile is divided into `M = floor(N / tau)` non-overlapping boxes of
//! length `tau` (trailing samples are discarded). In each box a least-squares
//! polynomial of degree `p` approximates the local trend, and the box
//! fluctuation is the RMS residual around it:
//!
//! ```text
//! F_i(tau, p) = sqrt( (1/tau) * sum_{t in box i} (x(t) - y_i(t))^2 )
//! ```
//!
//! Averaging over boxes gives `<F(tau, p)>_M`, which for a self-affine series
//! scales as `tau^H`; the Hurst exponent is the slope of an unweighted OLS
//! line through `(log tau, log <F>)`.
//!
//! Box fits use coordinates centered on the box midpoint and scaled to
//! `[-1, 1]`; the fitted trend is mathematically identical to a raw-coordinate
//! fit but stays well conditioned for quadratic detrending at large `tau`.

use crate::error::{Error, Result};
use crate::linfit;
use crate::series::Profile;

/// Scales must give at least four boxes; the fit needs that much averaging.
const MAX_TAU_FRACTION: usize = 4;

/// Smallest default box size for the automatic scale grid.
const DEFAULT_TAU_MIN: usize = 8;

/// Shortest series the automatic grid accepts.
pub const MIN_SERIES_LEN: usize = 64;

/// Estimator configuration: detrending degree, box-size grid and an optional
/// restriction of the scales entering the log-log fit.
#[derive(Debug, Clone, PartialEq)]
pub struct DfaConfig {
    degree: usize,
    taus: Vec<usize>,
    fit_range: Option<(usize, usize)>,
}

impl DfaConfig {
    /// Validates a box-size grid: strictly increasing, each at least
    /// `degree + 2` (one more sample than the polynomial needs, so the
    /// residual is not trivially zero).
    pub fn new(degree: usize, taus: Vec<usize>) -> Result<Self> {
        if taus.is_empty() {
            return Err(Error::EmptyTaus);
        }
        let min_tau = degree + 2;
        for (i, &tau) in taus.iter().enumerate() {
            if tau < min_tau {
                return Err(Error::TauTooSmall {
                    tau,
                    degree,
                    min: min_tau,
                });
            }
            if i > 0 && taus[i - 1] >= tau {
                return Err(Error::UnorderedTaus);
            }
        }
        Ok(Self {
            degree,
            taus,
            fit_range: None,
        })
    }

    /// Default grid for a series of length `len`: geometrically spaced box
    /// sizes with ratio 2^(1/4) from `max(8, degree + 2)` up to `len / 4`,
    /// rounded to integers and deduplicated.
    pub fn geometric(len: usize, degree: usize) -> Result<Self> {
        if len < MIN_SERIES_LEN {
            return Err(Error::TooShort {
                what: "series",
                min: MIN_SERIES_LEN,
                len,
            });
        }
        let tau_min = DEFAULT_TAU_MIN.max(degree + 2);
        let tau_max = len / MAX_TAU_FRACTION;
        let taus = geometric_taus(tau_min, tau_max);
        if taus.is_empty() {
            return Err(Error::TauTooLarge {
                tau: tau_min,
                max: tau_max,
                len,
            });
        }
        Self::new(degree, taus)
    }

    /// Restricts the log-log fit to scales within `[tau_min, tau_max]`.
    /// Scales outside the range are still computed and reported.
    pub fn with_fit_range(mut self, tau_min: usize, tau_max: usize) -> Self {
        self.fit_range = Some((tau_min, tau_max));
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn taus(&self) -> &[usize] {
        &self.taus
    }

    pub fn fit_range(&self) -> Option<(usize, usize)> {
        self.fit_range
    }

    fn validate_for_len(&self, len: usize) -> Result<()> {
        let max = len / MAX_TAU_FRACTION;
        let largest = *self.taus.last().expect("taus nonempty");
        if largest > max {
            return Err(Error::TauTooLarge {
                tau: largest,
                max,
                len,
            });
        }
        Ok(())
    }
}

/// Geometric grid with ratio 2^(1/4), rounded and deduplicated.
pub fn geometric_taus(tau_min: usize, tau_max: usize) -> Vec<usize> {
    let mut taus = Vec::new();
    let mut k = 0u32;
    loop {
        let v = tau_min as f64 * 2f64.powf(f64::from(k) * 0.25);
        let tau = v.round() as usize;
        if tau > tau_max {
            break;
        }
        if taus.last() != Some(&tau) {
            taus.push(tau);
        }
        k += 1;
    }
    taus
}

/// One scale of a fluctuation curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub tau: usize,
    /// Mean box fluctuation `<F(tau, p)>_M`.
    pub mean_fluct: f64,
    /// Number of boxes averaged, `floor(N / tau)`.
    pub boxes_used: usize,
}

/// Fluctuation curve with its fitted scaling exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct FluctuationCurve {
    pub points: Vec<CurvePoint>,
    /// Slope of the log-log fit: the Hurst exponent estimate.
    pub hurst: f64,
    /// Standard error of that slope.
    pub fit_stderr: f64,
    pub fit_r2: f64,
}

/// Per-box detrending machinery for one (tau, degree) pair.
///
/// The local abscissa u_j = 2j/(tau-1) - 1 and the Gram matrix of its power
/// basis depend only on tau and degree, so they are computed once and reused
/// across boxes.
struct BoxDetrender {
    tau: usize,
    degree: usize,
    u: Vec<f64>,
    gram: Vec<f64>, // (degree+1) x (degree+1), row-major
}

impl BoxDetrender {
    fn new(tau: usize, degree: usize) -> Self {
        let u: Vec<f64> = (0..tau)
            .map(|j| 2.0 * j as f64 / (tau - 1) as f64 - 1.0)
            .collect();
        // Moments m_k = sum_j u_j^k up to k = 2*degree fill the Gram matrix.
        let mut moments = vec![0.0; 2 * degree + 1];
        for &uj in &u {
            let mut pw = 1.0;
            for m in moments.iter_mut() {
                *m += pw;
                pw *= uj;
            }
        }
        let dim = degree + 1;
        let mut gram = vec![0.0; dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                gram[a * dim + b] = moments[a + b];
            }
        }
        Self {
            tau,
            degree,
            u,
            gram,
        }
    }

    /// RMS residual of the degree-p least-squares fit over one box.
    fn rms_residual(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.tau);
        let dim = self.degree + 1;

        let mut rhs = vec![0.0; dim];
        for (j, &xj) in x.iter().enumerate() {
            let mut pw = 1.0;
            for r in rhs.iter_mut() {
                *r += pw * xj;
                pw *= self.u[j];
            }
        }
        let coeffs = solve_symmetric(&self.gram, &rhs, dim);

        let mut ss = 0.0;
        for (j, &xj) in x.iter().enumerate() {
            let mut trend = coeffs[dim - 1];
            for a in (0..dim - 1).rev() {
                trend = trend * self.u[j] + coeffs[a];
            }
            let r = xj - trend;
            ss += r * r;
        }
        (ss / self.tau as f64).sqrt()
    }
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve_symmetric(matrix: &[f64], rhs: &[f64], dim: usize) -> Vec<f64> {
    let mut a = matrix.to_vec();
    let mut b = rhs.to_vec();
    for col in 0..dim {
        let pivot = (col..dim)
            .max_by(|&i, &j| {
                a[i * dim + col]
                    .abs()
                    .total_cmp(&a[j * dim + col].abs())
            })
            .expect("nonempty pivot range");
        if pivot != col {
            for k in 0..dim {
                a.swap(col * dim + k, pivot * dim + k);
            }
            b.swap(col, pivot);
        }
        let diag = a[col * dim + col];
        for row in col + 1..dim {
            let factor = a[row * dim + col] / diag;
            for k in col..dim {
                a[row * dim + k] -= factor * a[col * dim + k];
            }
            b[row] -= factor * b[col];
        }
    }
    for col in (0..dim).rev() {
        let mut acc = b[col];
        for k in col + 1..dim {
            acc -= a[col * dim + k] * b[k];
        }
        b[col] = acc / a[col * dim + col];
    }
    b
}

/// Fluctuations of every box at a single scale, in box order.
///
/// Returns `floor(N / tau)` values; trailing samples beyond the last full box
/// are discarded.
pub fn box_fluctuation(profile: &Profile, tau: usize, degree: usize) -> Result<Vec<f64>> {
    box_fluctuation_values(profile.values(), tau, degree)
}

pub(crate) fn box_fluctuation_values(x: &[f64], tau: usize, degree: usize) -> Result<Vec<f64>> {
    let n = x.len();
    if tau < degree + 2 {
        return Err(Error::TauTooSmall {
            tau,
            degree,
            min: degree + 2,
        });
    }
    if tau > n {
        return Err(Error::TauTooLarge { tau, max: n, len: n });
    }
    let boxes = n / tau;
    let detrender = BoxDetrender::new(tau, degree);
    Ok((0..boxes)
        .map(|i| detrender.rms_residual(&x[i * tau..(i + 1) * tau]))
        .collect())
}

/// Full fluctuation curve and fitted Hurst exponent for a configured grid.
///
/// Scales whose mean fluctuation is exactly zero are reported in the curve
/// but excluded from the log-log fit; fewer than three usable scales is an
/// error.
pub fn fluctuation_curve(profile: &Profile, config: &DfaConfig) -> Result<FluctuationCurve> {
    fluctuation_curve_values(profile.values(), config)
}

pub(crate) fn fluctuation_curve_values(x: &[f64], config: &DfaConfig) -> Result<FluctuationCurve> {
    config.validate_for_len(x.len())?;

    let mut points = Vec::with_capacity(config.taus.len());
    for &tau in &config.taus {
        let flucts = box_fluctuation_values(x, tau, config.degree)?;
        let boxes_used = flucts.len();
        // Accumulated in box index order: results do not depend on how the
        // caller distributes work.
        let mean_fluct = flucts.iter().sum::<f64>() / boxes_used as f64;
        points.push(CurvePoint {
            tau,
            mean_fluct,
            boxes_used,
        });
    }

    let in_fit = |tau: usize| match config.fit_range {
        Some((lo, hi)) => tau >= lo && tau <= hi,
        None => true,
    };
    let fit_points: Vec<(f64, f64)> = points
        .iter()
        .filter(|pt| pt.mean_fluct > 0.0 && in_fit(pt.tau))
        .map(|pt| ((pt.tau as f64).ln(), pt.mean_fluct.ln()))
        .collect();
    if fit_points.len() < 3 {
        return Err(Error::InsufficientScalingRange {
            usable: fit_points.len(),
        });
    }

    let fit = linfit::line_fit(&fit_points);
    Ok(FluctuationCurve {
        points,
        hurst: fit.slope,
        fit_stderr: fit.slope_stderr,
        fit_r2: fit.r2,
    })
}

/// Hurst exponent with the default geometric scale grid for the series
/// length; requires at least 64 samples.
pub fn estimate_hurst(profile: &Profile, degree: usize) -> Result<FluctuationCurve> {
    estimate_hurst_values(profile.values(), degree)
}

pub(crate) fn estimate_hurst_values(x: &[f64], degree: usize) -> Result<FluctuationCurve> {
    let config = DfaConfig::geometric(x.len(), degree)?;
    fluctuation_curve_values(x, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile_from(values: Vec<f64>) -> Profile {
        Profile::new(values).unwrap()
    }

    #[test]
    fn polynomial_profiles_are_annihilated() {
        for degree in 0..=2usize {
            let values: Vec<f64> = (0..64)
                .map(|t| {
                    let t = t as f64;
                    match degree {
                        0 => 3.5,
                        1 => 1.0 + 0.5 * t,
                        _ => 2.0 - 0.3 * t + 0.01 * t * t,
                    }
                })
                .collect();
            let p = profile_from(values);
            for tau in [4, 8, 16] {
                if tau < degree + 2 {
                    continue;
                }
                for f in box_fluctuation(&p, tau, degree).unwrap() {
                    assert!(f < 1e-9, "degree {degree} tau {tau} left residual {f}");
                }
            }
        }
    }

    #[test]
    fn alternating_profile_matches_closed_form() {
        // Line fit to [0,1,0,1] leaves residuals [-0.2, 0.6, -0.6, 0.2],
        // so F = sqrt(0.8 / 4) = sqrt(0.2) in both boxes.
        let p = profile_from(vec![0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]);
        let f = box_fluctuation(&p, 4, 1).unwrap();
        assert_eq!(f.len(), 2);
        for v in f {
            assert!((v - 0.2f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn trailing_samples_discarded() {
        let p = profile_from((0..10).map(|t| (t as f64).sin()).collect());
        let f = box_fluctuation(&p, 4, 1).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn tau_bounds_enforced() {
        let p = profile_from((0..32).map(|t| t as f64).collect());
        assert!(matches!(
            box_fluctuation(&p, 3, 2),
            Err(Error::TauTooSmall { .. })
        ));
        assert!(matches!(
            box_fluctuation(&p, 33, 1),
            Err(Error::TauTooLarge { .. })
        ));
    }

    #[test]
    fn geometric_grid_for_512() {
        let cfg = DfaConfig::geometric(512, 2).unwrap();
        assert_eq!(
            cfg.taus(),
            &[8, 10, 11, 13, 16, 19, 23, 27, 32, 38, 45, 54, 64, 76, 91, 108, 128]
        );
    }

    #[test]
    fn short_series_rejected() {
        let p = profile_from((0..63).map(|t| t as f64).collect());
        assert!(matches!(
            estimate_hurst(&p, 2),
            Err(Error::TooShort { .. })
        ));
    }

    #[test]
    fn exact_power_law_recovered() {
        // Feed the fit synthetic mean fluctuations c * tau^0.7 by building a
        // curve directly through the fit path: use a profile whose box
        // fluctuations we cannot control analytically, so instead check the
        // fit machinery through fluctuation_curve on a crafted config is not
        // possible; validate the OLS path on exact log-log points instead.
        let pts: Vec<(f64, f64)> = [8.0f64, 16.0, 32.0, 64.0, 128.0]
            .iter()
            .map(|&t| (t.ln(), (3.0 * t.powf(0.7)).ln()))
            .collect();
        let fit = crate::linfit::line_fit(&pts);
        assert!((fit.slope - 0.7).abs() < 1e-10);
        assert!(fit.slope_stderr < 1e-10);
    }

    #[test]
    fn ramp_with_tiny_noise_survives_fit() {
        // Quadratic detrending nearly annihilates a linear ramp; the tiny
        // noise keeps mean fluctuations positive so the fit must not panic.
        let values: Vec<f64> = (0..256)
            .map(|t| t as f64 * 2.0 + 1e-9 * ((t * 2654435761usize) % 97) as f64)
            .collect();
        let p = profile_from(values);
        let curve = estimate_hurst(&p, 2).unwrap();
        assert!(curve.hurst.is_finite());
    }

    #[test]
    fn shift_invariance_is_exact() {
        let values: Vec<f64> = (0..256)
            .map(|t| ((t * 48271 + 11) % 1000) as f64 / 1000.0)
            .collect();
        let shifted: Vec<f64> = values.iter().map(|v| v + 7.25).collect();
        let cfg = DfaConfig::geometric(256, 2).unwrap();
        let a = fluctuation_curve(&profile_from(values), &cfg).unwrap();
        let b = fluctuation_curve(&profile_from(shifted), &cfg).unwrap();
        for (pa, pb) in a.points.iter().zip(&b.points) {
            assert!((pa.mean_fluct - pb.mean_fluct).abs() <= 1e-10 * pa.mean_fluct.abs());
        }
        assert!((a.hurst - b.hurst).abs() < 1e-10);
    }

    #[test]
    fn boxes_used_is_floor_n_over_tau() {
        let p = profile_from((0..200).map(|t| (t as f64 * 0.37).sin()).collect());
        let cfg = DfaConfig::new(1, vec![8, 11, 16, 23, 32, 45]).unwrap();
        let curve = fluctuation_curve(&p, &cfg).unwrap();
        for pt in &curve.points {
            assert_eq!(pt.boxes_used, 200 / pt.tau);
        }
    }
}
