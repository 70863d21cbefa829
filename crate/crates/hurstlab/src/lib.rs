//! Time-scale-dependent Hurst exponent estimation for price series.
//!
//! The estimator is detrended fluctuation analysis (DFA): the log-price
//! profile is split into boxes, a local polynomial trend is removed from each
//! box, and the scaling of the RMS residual with box size gives the Hurst
//! exponent. Sliding a backward window over the profile turns this into a
//! *local* exponent H_L(t) whose distribution at each window length L
//! describes persistency at that time scale.
//!
//! Estimates on real high-frequency data are biased by heavy-tailed
//! increments, so the crate ships the calibration machinery needed to
//! quantify that bias: exact fractional Brownian motion and symmetric
//! alpha-stable generators ([`synth`]), increment shuffling and
//! sign-preserving Gaussian surrogates ([`resample`]), and the distributional
//! summaries that compare them ([`stats`]).
//!
//! ```
//! use hurstlab::{dfa, synth};
//!
//! let path = synth::generate_fbm(&synth::FbmSpec {
//!     hurst: 0.7,
//!     length: 4096,
//!     seed: 42,
//! })?;
//! let curve = dfa::estimate_hurst(&path, 2)?;
//! assert!((curve.hurst - 0.7).abs() < 0.1);
//! # Ok::<(), hurstlab::Error>(())
//! ```

pub mod dfa;
pub mod ensemble;
mod error;
pub mod ks;
pub mod linfit;
pub mod resample;
pub mod rolling;
pub mod series;
pub mod stats;
pub mod synth;

pub use error::{Error, Result};
pub use series::{PriceObs, PriceSeries, Profile, Provenance, ReturnObs, ReturnSeries};

/// Crate version, embedded in serialized outputs.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

// The user guide's code listings double as tests: each chapter is compiled
// and run by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/profiles.md")]
    mod profiles {}
    #[doc = include_str!("../../../book/src/dfa.md")]
    mod dfa {}
    #[doc = include_str!("../../../book/src/local-hurst.md")]
    mod local_hurst {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/resampling.md")]
    mod resampling {}
    #[doc = include_str!("../../../book/src/distributions.md")]
    mod distributions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
