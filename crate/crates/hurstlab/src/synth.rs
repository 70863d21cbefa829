//! Seeded generators for calibration series.
//!
//! Two families: fractional Brownian motion with prescribed Hurst index,
//! sampled exactly in distribution by circulant embedding of the fractional
//! Gaussian noise covariance (Davies-Harte), and random walks with symmetric
//! alpha-stable increments from the Chambers-Mallows-Stuck transform.
//!
//! All generators are deterministic functions of a 64-bit seed. Ensemble
//! member k derives its seed with [`member_seed`], so any member is
//! reproducible in isolation.

use std::f64::consts::PI;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Exp1, StandardNormal};
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::series::{Profile, Provenance};

/// Relative tolerance for spurious negative embedding eigenvalues.
const EIGENVALUE_TOL: f64 = 1e-8;

/// Fractional Brownian motion request: Hurst index in (0, 1), path length,
/// seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FbmSpec {
    pub hurst: f64,
    pub length: usize,
    pub seed: u64,
}

/// Symmetric alpha-stable random walk request: stability index in (0, 2],
/// path length, seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevySpec {
    pub alpha: f64,
    pub length: usize,
    pub seed: u64,
}

/// Derives the seed of ensemble member `member` from a base seed.
///
/// SplitMix64 finalizer over `base + (member + 1) * golden`; documented so
/// that external tooling can regenerate any single member.
pub fn member_seed(base: u64, member: u64) -> u64 {
    let mut z = base.wrapping_add((member.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Autocovariance of unit-variance fractional Gaussian noise at lag k:
/// (1/2) (|k+1|^2H - 2|k|^2H + |k-1|^2H).
pub fn fgn_autocovariance(hurst: f64, k: usize) -> f64 {
    let k = k as f64;
    let e = 2.0 * hurst;
    0.5 * ((k + 1.0).powf(e) - 2.0 * k.powf(e) + (k - 1.0).abs().powf(e))
}

/// Reusable fractional Brownian motion sampler for one (hurst, length) pair.
///
/// The circulant embedding eigenvalues depend only on the covariance, so
/// ensemble generation pays the setup FFT once. `sample` takes `&self` and
/// is safe to call from parallel workers.
pub struct FbmGenerator {
    hurst: f64,
    length: usize,
    m: usize,
    sqrt_eigs: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
}

impl FbmGenerator {
    pub fn new(hurst: f64, length: usize) -> Result<Self> {
        if !(hurst > 0.0 && hurst < 1.0) || !hurst.is_finite() {
            return Err(Error::HurstOutOfRange { value: hurst });
        }
        if length < 2 {
            return Err(Error::TooShort {
                what: "fbm path",
                min: 2,
                len: length,
            });
        }
        // Embed N-1 noise samples in a circulant of size 2m, m a power of two.
        let m = (length - 1).next_power_of_two();
        let mut row: Vec<Complex<f64>> = Vec::with_capacity(2 * m);
        for k in 0..=m {
            row.push(Complex::new(fgn_autocovariance(hurst, k), 0.0));
        }
        for k in (1..m).rev() {
            row.push(Complex::new(fgn_autocovariance(hurst, k), 0.0));
        }

        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(2 * m);
        fft.process(&mut row);

        let max_eig = row.iter().map(|c| c.re).fold(0.0f64, f64::max);
        let mut sqrt_eigs = Vec::with_capacity(2 * m);
        for c in &row {
            if c.re < -EIGENVALUE_TOL * max_eig {
                return Err(Error::EmbeddingFailed { value: c.re });
            }
            sqrt_eigs.push(c.re.max(0.0).sqrt());
        }

        Ok(Self {
            hurst,
            length,
            m,
            sqrt_eigs,
            fft,
        })
    }

    pub fn hurst(&self) -> f64 {
        self.hurst
    }

    /// One path: x[0] = 0 followed by the cumulative sum of N-1 fractional
    /// Gaussian noise increments. Bitwise deterministic per seed.
    pub fn sample(&self, seed: u64) -> Profile {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let two_m = 2 * self.m;

        // Hermitian-symmetric Gaussian spectrum: indices 0 and m real, the
        // rest conjugate pairs at half variance.
        let mut v = vec![Complex::new(0.0, 0.0); two_m];
        let z0: f64 = rng.sample(StandardNormal);
        v[0] = Complex::new(self.sqrt_eigs[0] * z0, 0.0);
        for j in 1..self.m {
            let a: f64 = rng.sample(StandardNormal);
            let b: f64 = rng.sample(StandardNormal);
            let w = self.sqrt_eigs[j] * std::f64::consts::FRAC_1_SQRT_2;
            v[j] = Complex::new(w * a, w * b);
            v[two_m - j] = v[j].conj();
        }
        let zm: f64 = rng.sample(StandardNormal);
        v[self.m] = Complex::new(self.sqrt_eigs[self.m] * zm, 0.0);

        self.fft.process(&mut v);

        let norm = 1.0 / (two_m as f64).sqrt();
        let mut values = Vec::with_capacity(self.length);
        let mut acc = 0.0;
        values.push(acc);
        for item in v.iter().take(self.length - 1) {
            acc += item.re * norm;
            values.push(acc);
        }
        Profile::new(values)
            .expect("generated path is finite and long enough")
            .with_provenance(Provenance::SyntheticFbm)
    }
}

/// Fractional Brownian motion path for a one-off spec.
pub fn generate_fbm(spec: &FbmSpec) -> Result<Profile> {
    Ok(FbmGenerator::new(spec.hurst, spec.length)?.sample(spec.seed))
}

/// One symmetric standard alpha-stable increment.
///
/// Chambers-Mallows-Stuck transform: with phi uniform on (-pi/2, pi/2) and nu
/// exponential with mean 1,
///
/// ```text
/// y = sin(alpha phi) / cos(phi)^(1/alpha) * [cos((1 - alpha) phi) / nu]^((1 - alpha)/alpha)
/// ```
///
/// At alpha = 1 the second factor's exponent vanishes and y degenerates to
/// tan(phi), the Cauchy case, which is used directly. At alpha = 2 the
/// transform reduces to a Gaussian with variance 2.
pub fn stable_increment<R: Rng + ?Sized>(rng: &mut R, alpha: f64) -> f64 {
    let phi = (rng.random::<f64>() - 0.5) * PI;
    if alpha == 1.0 {
        return phi.tan();
    }
    let nu: f64 = rng.sample(Exp1);
    let lead = (alpha * phi).sin() / phi.cos().powf(1.0 / alpha);
    let tail = (((1.0 - alpha) * phi).cos() / nu).powf((1.0 - alpha) / alpha);
    lead * tail
}

/// Random walk with symmetric alpha-stable increments: x[0] = 0 followed by
/// the cumulative sum of N-1 increments. Bitwise deterministic per seed.
pub fn generate_levy(spec: &LevySpec) -> Result<Profile> {
    if !(spec.alpha > 0.0 && spec.alpha <= 2.0) || !spec.alpha.is_finite() {
        return Err(Error::AlphaOutOfRange { value: spec.alpha });
    }
    if spec.length < 2 {
        return Err(Error::TooShort {
            what: "levy path",
            min: 2,
            len: spec.length,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut values = Vec::with_capacity(spec.length);
    let mut acc = 0.0;
    values.push(acc);
    for _ in 1..spec.length {
        acc += stable_increment(&mut rng, spec.alpha);
        values.push(acc);
    }
    Ok(Profile::new(values)?.with_provenance(Provenance::SyntheticLevy))
}
