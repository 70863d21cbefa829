//! Distributional and scaling summaries of local Hurst exponent samples:
//! normalized histograms over [0, 1], the sigma_H versus L power-law fit,
//! mean-H-versus-L curves, and contiguous subperiod splits.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linfit;
use crate::rolling::LocalHurstSeries;

/// Histogram bin width used when none is requested.
pub const DEFAULT_BIN_WIDTH: f64 = 0.02;

const MIN_SAMPLES_PER_SCALE: usize = 30;
const MIN_SAMPLES_PER_SUBPERIOD: usize = 30;

/// Normalized histogram of Hurst samples on a uniform grid over [0, 1],
/// with summary moments.
#[derive(Debug, Clone, PartialEq)]
pub struct HurstDistribution {
    bin_edges: Vec<f64>,
    density: Vec<f64>,
    n: usize,
    /// Samples outside [0, 1]; they are clipped into the boundary bins but
    /// tallied here.
    overflow: usize,
    mean: f64,
    std: f64,
    mode_bin: f64,
}

impl HurstDistribution {
    pub fn bin_edges(&self) -> &[f64] {
        &self.bin_edges
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn bin_centers(&self) -> Vec<f64> {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn overflow(&self) -> usize {
        self.overflow
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn std(&self) -> f64 {
        self.std
    }

    /// Center of the highest-density bin (lowest such bin on ties).
    pub fn mode_bin(&self) -> f64 {
        self.mode_bin
    }
}

/// Histogram with the default 0.02 bin width (50 bins).
pub fn hurst_pdf(samples: &[f64]) -> Result<HurstDistribution> {
    hurst_pdf_binned(samples, (1.0 / DEFAULT_BIN_WIDTH).round() as usize)
}

/// Histogram with an explicit bin count over [0, 1].
pub fn hurst_pdf_binned(samples: &[f64], bins: usize) -> Result<HurstDistribution> {
    if bins == 0 {
        return Err(Error::NoBins);
    }
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }

    let width = 1.0 / bins as f64;
    let mut counts = vec![0usize; bins];
    let mut overflow = 0usize;
    for &s in samples {
        let idx = if s < 0.0 {
            overflow += 1;
            0
        } else if s > 1.0 {
            overflow += 1;
            bins - 1
        } else {
            ((s / width) as usize).min(bins - 1)
        };
        counts[idx] += 1;
    }

    let n = samples.len();
    let density: Vec<f64> = counts
        .iter()
        .map(|&c| c as f64 / (n as f64 * width))
        .collect();
    let bin_edges: Vec<f64> = (0..=bins).map(|i| i as f64 * width).collect();

    // Moments are taken over the raw (unclipped) samples.
    let mean = samples.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        (samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };

    let mode_idx = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .expect("bins nonempty");
    let mode_bin = (mode_idx as f64 + 0.5) * width;

    Ok(HurstDistribution {
        bin_edges,
        density,
        n,
        overflow,
        mean,
        std,
        mode_bin,
    })
}

/// A value per scale plus the fitted power-law exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingFit {
    /// (L, value) pairs that entered the fit, in ascending L.
    pub points: Vec<(usize, f64)>,
    /// Gamma in value ~ L^(-gamma): the negated log-log slope.
    pub exponent: f64,
    pub stderr: f64,
    /// Scales dropped because their sample spread was degenerate.
    pub excluded_scales: Vec<usize>,
}

fn sample_std(samples: &[f64]) -> f64 {
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    (samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / (n - 1) as f64).sqrt()
}

/// Fits sigma_H ~ L^(-gamma) across a family of per-scale sample sets.
///
/// Needs at least three scales with at least 30 samples each; scales with
/// zero spread are excluded and reported.
pub fn sigma_vs_l(family: &BTreeMap<usize, Vec<f64>>) -> Result<ScalingFit> {
    if family.len() < 3 {
        return Err(Error::TooFewScales {
            min: 3,
            got: family.len(),
        });
    }
    let mut points = Vec::with_capacity(family.len());
    let mut excluded_scales = Vec::new();
    for (&scale, samples) in family {
        if samples.len() < MIN_SAMPLES_PER_SCALE {
            return Err(Error::TooFewSamplesAtScale {
                scale,
                len: samples.len(),
                min: MIN_SAMPLES_PER_SCALE,
            });
        }
        let std = sample_std(samples);
        if std > 0.0 {
            points.push((scale, std));
        } else {
            excluded_scales.push(scale);
        }
    }
    if points.len() < 3 {
        return Err(Error::TooFewScales {
            min: 3,
            got: points.len(),
        });
    }

    let log_points: Vec<(f64, f64)> = points
        .iter()
        .map(|&(l, v)| ((l as f64).ln(), v.ln()))
        .collect();
    let fit = linfit::line_fit(&log_points);
    Ok(ScalingFit {
        points,
        exponent: -fit.slope,
        stderr: fit.slope_stderr,
        excluded_scales,
    })
}

/// Mean local Hurst exponent per scale.
///
/// The family is keyed by each series' own window; at least two distinct
/// scales are required. The exponent is fitted with the same L^(-gamma)
/// convention as [`sigma_vs_l`] but is advisory for this curve.
pub fn mean_h_vs_l(family: &[LocalHurstSeries]) -> Result<ScalingFit> {
    if family.len() < 2 {
        return Err(Error::TooFewScales {
            min: 2,
            got: family.len(),
        });
    }
    let mut points: Vec<(usize, f64)> = Vec::with_capacity(family.len());
    for series in family {
        if series.samples.is_empty() {
            return Err(Error::NoSamples);
        }
        if points.iter().any(|&(l, _)| l == series.window) {
            return Err(Error::DuplicateScale {
                scale: series.window,
            });
        }
        let mean = series.samples.iter().map(|s| s.h).sum::<f64>() / series.samples.len() as f64;
        points.push((series.window, mean));
    }
    points.sort_unstable_by_key(|&(l, _)| l);

    let log_points: Vec<(f64, f64)> = points
        .iter()
        .map(|&(l, v)| ((l as f64).ln(), v.ln()))
        .collect();
    let fit = linfit::line_fit(&log_points);
    Ok(ScalingFit {
        points,
        exponent: -fit.slope,
        stderr: fit.slope_stderr,
        excluded_scales: Vec::new(),
    })
}

/// Splits a local-Hurst series into k contiguous blocks of equal length
/// (first `n mod k` blocks one sample longer) and histograms each.
pub fn split_subperiods(series: &LocalHurstSeries, k: usize) -> Result<Vec<HurstDistribution>> {
    if k < 2 {
        return Err(Error::TooFewSubperiods { parts: k });
    }
    let n = series.samples.len();
    if n < k * MIN_SAMPLES_PER_SUBPERIOD {
        return Err(Error::TooFewSamplesForSplit {
            parts: k,
            required: k * MIN_SAMPLES_PER_SUBPERIOD,
            len: n,
        });
    }
    let h = series.h_values();
    let base = n / k;
    let extra = n % k;
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let len = base + usize::from(i < extra);
        out.push(hurst_pdf(&h[start..start + len])?);
        start += len;
    }
    debug_assert_eq!(start, n);
    Ok(out)
}

/// Raw per-subperiod sample blocks, for test statistics that need the
/// samples rather than the histogram.
pub fn subperiod_samples(series: &LocalHurstSeries, k: usize) -> Result<Vec<Vec<f64>>> {
    if k < 2 {
        return Err(Error::TooFewSubperiods { parts: k });
    }
    let n = series.samples.len();
    if n < k * MIN_SAMPLES_PER_SUBPERIOD {
        return Err(Error::TooFewSamplesForSplit {
            parts: k,
            required: k * MIN_SAMPLES_PER_SUBPERIOD,
            len: n,
        });
    }
    let h = series.h_values();
    let base = n / k;
    let extra = n % k;
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let len = base + usize::from(i < extra);
        out.push(h[start..start + len].to_vec());
        start += len;
    }
    Ok(out)
}
