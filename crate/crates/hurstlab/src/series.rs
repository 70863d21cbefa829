//! Domain types for price, return and profile series.
//!
//! A [`PriceSeries`] holds timestamped positive prices. Taking logarithmic
//! returns gives a [`ReturnSeries`], and cumulating returns back up from a
//! starting log-price gives a [`Profile`] — the uniform-step series the
//! fluctuation analysis operates on. Timestamps survive into the return
//! series (day-boundary filtering needs them) but are dropped at profile
//! level: the estimator is index-based and treats every bar as one unit step.

use chrono::{Duration, NaiveDateTime};

use crate::error::{Error, Result};

/// How a profile came to be; carried along for report labelling only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Ingested,
    SyntheticFbm,
    SyntheticLevy,
    Resampled,
}

/// A single price observation at minute resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceObs {
    pub timestamp: NaiveDateTime,
    pub price: f64,
}

/// Timestamped, strictly positive prices with strictly increasing timestamps.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceSeries {
    observations: Vec<PriceObs>,
}

impl PriceSeries {
    /// Validates and wraps a list of observations.
    ///
    /// Requires at least two observations, strictly increasing timestamps and
    /// strictly positive finite prices; the error names the offending index.
    pub fn new(observations: Vec<PriceObs>) -> Result<Self> {
        if observations.len() < 2 {
            return Err(Error::TooShort {
                what: "price series",
                min: 2,
                len: observations.len(),
            });
        }
        for (i, obs) in observations.iter().enumerate() {
            if !obs.price.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
            if obs.price <= 0.0 {
                return Err(Error::NonPositivePrice {
                    index: i,
                    value: obs.price,
                });
            }
            if i > 0 && observations[i - 1].timestamp >= obs.timestamp {
                return Err(Error::NonIncreasingTimestamp { index: i });
            }
        }
        Ok(Self { observations })
    }

    pub fn observations(&self) -> &[PriceObs] {
        &self.observations
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observations.is_empty()
    }
}

/// One logarithmic return, stamped with the time of its *end* observation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReturnObs {
    pub timestamp: NaiveDateTime,
    pub value: f64,
    /// True when the two bounding observations fall on different calendar
    /// dates (after any session offset applied at derivation).
    pub crosses_day: bool,
}

/// Ordered logarithmic returns.
///
/// May be empty (day-boundary filtering of a short series can consume every
/// return); downstream consumers that need length validate it themselves.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReturnSeries {
    values: Vec<ReturnObs>,
}

impl ReturnSeries {
    pub fn new(values: Vec<ReturnObs>) -> Result<Self> {
        for (i, obs) in values.iter().enumerate() {
            if !obs.value.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[ReturnObs] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Uniform-step series x(0..N) the fluctuation analysis runs on.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    values: Vec<f64>,
    provenance: Option<Provenance>,
}

impl Profile {
    /// Wraps a value series; at least two finite samples required.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort {
                what: "profile",
                min: 2,
                len: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index: i });
        }
        Ok(Self {
            values,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Calendar date used for day-boundary attribution: the timestamp shifted
/// back by `session_offset_minutes`. Markets whose sessions cross midnight
/// set a nonzero offset so that a whole session maps to one date.
pub fn session_date(ts: NaiveDateTime, session_offset_minutes: i64) -> chrono::NaiveDate {
    (ts - Duration::minutes(session_offset_minutes)).date()
}

/// Logarithmic returns r(k) = ln(P[k+1] / P[k]), stamped with the end
/// timestamp, with day-crossing flags from plain calendar-date comparison.
pub fn to_returns(prices: &PriceSeries) -> ReturnSeries {
    to_returns_with_session_offset(prices, 0)
}

/// Same as [`to_returns`] but attributing observations to sessions shifted
/// by `session_offset_minutes` when deciding the day-crossing flag.
pub fn to_returns_with_session_offset(
    prices: &PriceSeries,
    session_offset_minutes: i64,
) -> ReturnSeries {
    let obs = prices.observations();
    let values = obs
        .windows(2)
        .map(|w| ReturnObs {
            timestamp: w[1].timestamp,
            value: (w[1].price / w[0].price).ln(),
            crosses_day: session_date(w[0].timestamp, session_offset_minutes)
                != session_date(w[1].timestamp, session_offset_minutes),
        })
        .collect();
    // Prices are validated positive at construction, so every ratio is
    // positive and the log finite; no fallible path remains here.
    ReturnSeries { values }
}

/// Cumulates returns into a profile: x[0] = x0, x[k] = x0 + sum of the first
/// k returns. Length is returns.len() + 1.
pub fn to_profile(returns: &ReturnSeries, x0: f64) -> Result<Profile> {
    if returns.is_empty() {
        return Err(Error::TooShort {
            what: "profile",
            min: 2,
            len: 1,
        });
    }
    if !x0.is_finite() {
        return Err(Error::NonFinite { index: 0 });
    }
    let mut values = Vec::with_capacity(returns.len() + 1);
    let mut acc = x0;
    values.push(acc);
    for obs in returns.values() {
        acc += obs.value;
        values.push(acc);
    }
    Profile::new(values)
}
