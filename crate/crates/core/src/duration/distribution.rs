//! The distribution of the search duration T and its summary statistics.

use serde::Serialize;

use crate::error::{Error, Result};

/// PMF of the number of interviews T over 1..=n.
///
/// The final entry is the combined atom at T = n: it contains both
/// "selected the n-th applicant" and any forced/failed terminal outcome.
/// Where the underlying model defines a separate no-choice event, its mass
/// is also reported in `no_choice_mass` (it remains included in `pmf[n-1]`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DurationDistribution {
    pub n: u64,
    pub pmf: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_choice_mass: Option<f64>,
}

impl DurationDistribution {
    pub fn new(n: u64, pmf: Vec<f64>, no_choice_mass: Option<f64>) -> Result<Self> {
        if pmf.len() != n as usize || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "pmf length {} does not match n = {n}",
                pmf.len()
            )));
        }
        Ok(Self {
            n,
            pmf,
            no_choice_mass,
        })
    }

    /// Total mass (compensated summation).
    pub fn total(&self) -> f64 {
        neumaier_sum(self.pmf.iter().copied())
    }

    /// PMF-weighted mean of T.
    pub fn mean(&self) -> f64 {
        neumaier_sum(
            self.pmf
                .iter()
                .enumerate()
                .map(|(i, &p)| (i as f64 + 1.0) * p),
        )
    }

    /// Smallest x with CDF(x) ≥ p.
    pub fn quantile(&self, p: f64) -> u64 {
        let mut cdf = 0.0;
        let mut comp = 0.0;
        for (i, &mass) in self.pmf.iter().enumerate() {
            let t = cdf + mass;
            comp += if cdf.abs() >= mass.abs() {
                (cdf - t) + mass
            } else {
                (mass - t) + cdf
            };
            cdf = t;
            if cdf + comp >= p {
                return i as u64 + 1;
            }
        }
        self.n
    }

    pub fn median(&self) -> u64 {
        self.quantile(0.5)
    }

    /// Running CDF, same length as the PMF.
    pub fn cdf(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.pmf.len());
        let mut acc = 0.0;
        for &p in &self.pmf {
            acc += p;
            out.push(acc.min(1.0));
        }
        out
    }

    /// Summary statistics with the requested extra quantiles.
    pub fn summarize(&self, quantile_ps: &[f64]) -> SummaryStats {
        let mean = self.mean();
        let median = self.median();
        let nf = self.n as f64;
        SummaryStats {
            mean,
            median,
            quantiles: quantile_ps
                .iter()
                .map(|&p| (p, self.quantile(p)))
                .collect(),
            mean_fraction: Some(mean / nf),
            median_fraction: Some(median as f64 / nf),
            success_prob: None,
            no_choice_prob: self.no_choice_mass,
        }
    }
}

/// Mean, median and quantiles of a duration distribution.
///
/// `median` is the smallest x with CDF(x) ≥ 1/2, and `quantiles` maps each
/// requested probability to the smallest x with CDF(x) ≥ p.  The fraction
/// fields are absent when there is no finite pool to normalize by.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub median: u64,
    pub quantiles: Vec<(f64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub success_prob: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_choice_prob: Option<f64>,
}

/// Compensated (Neumaier) summation.
pub(crate) fn neumaier_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() {
            (sum - t) + v
        } else {
            (v - t) + sum
        };
        sum = t;
    }
    sum + comp
}
