use crate::{GrowthError, Result};

/// Provenance of a sampled solution: exact formula or numerical
/// integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Integrated,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::ClosedForm => write!(f, "closed_form"),
            Method::Integrated => write!(f, "integrated"),
        }
    }
}

/// A sampled time series of the model state: times `t`, ratio `k`, labor
/// `L`, and capital `K = k * L` at every sample.
///
/// Construction validates that all series have equal length, times are
/// strictly increasing, and every sample is finite and strictly positive.
/// The capital series is always derived from `k` and `L`, never supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    ratio: Vec<f64>,
    labor: Vec<f64>,
    capital: Vec<f64>,
    method: Method,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, ratio: Vec<f64>, labor: Vec<f64>, method: Method) -> Result<Self> {
        if times.len() != ratio.len() || times.len() != labor.len() {
            return Err(GrowthError::LengthMismatch {
                times: times.len(),
                k: ratio.len(),
                labor: labor.len(),
            });
        }
        for (i, w) in times.windows(2).enumerate() {
            // NaN comparisons land here too
            if w[1] <= w[0] || w[1].partial_cmp(&w[0]).is_none() {
                return Err(GrowthError::NonIncreasingTimes { index: i + 1 });
            }
        }
        for (i, &t) in times.iter().enumerate() {
            if !t.is_finite() {
                return Err(GrowthError::InvalidSample {
                    name: "t",
                    index: i,
                    value: t,
                });
            }
        }
        for (name, series) in [("k", &ratio), ("L", &labor)] {
            for (i, &v) in series.iter().enumerate() {
                if !v.is_finite() || v <= 0.0 {
                    return Err(GrowthError::InvalidSample {
                        name,
                        index: i,
                        value: v,
                    });
                }
            }
        }
        let capital = ratio.iter().zip(&labor).map(|(k, l)| k * l).collect();
        Ok(Self {
            times,
            ratio,
            labor,
            capital,
            method,
        })
    }

    /// An empty trajectory (zero samples) is valid; it arises from an
    /// empty sampling grid.
    pub fn empty(method: Method) -> Self {
        Self {
            times: Vec::new(),
            ratio: Vec::new(),
            labor: Vec::new(),
            capital: Vec::new(),
            method,
        }
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn ratio(&self) -> &[f64] {
        &self.ratio
    }

    pub fn labor(&self) -> &[f64] {
        &self.labor
    }

    pub fn capital(&self) -> &[f64] {
        &self.capital
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Iterates `(t, k, L, K)` tuples in time order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, f64, f64)> + '_ {
        (0..self.len()).map(move |i| (self.times[i], self.ratio[i], self.labor[i], self.capital[i]))
    }

    /// Largest relative deviation of the ratio series against another
    /// trajectory sampled on the same grid.
    pub fn max_relative_deviation(&self, other: &Trajectory) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        self.ratio
            .iter()
            .zip(&other.ratio)
            .map(|(a, b)| (a - b).abs() / b.abs().max(f64::MIN_POSITIVE))
            .fold(None, |acc: Option<f64>, d| Some(acc.map_or(d, |m| m.max(d))))
    }
}
