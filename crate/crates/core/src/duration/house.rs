//! Search-length statistics for the unbounded house-selling problem.
//!
//! With reservation value γ* = 1 − √(2c), the number of offers until the
//! first acceptable one is geometric with success probability √(2c).

use crate::duration::distribution::SummaryStats;
use crate::error::{Error, Result};

pub fn house_selling_stats(cost: f64) -> Result<SummaryStats> {
    if !(cost > 0.0) {
        return Err(Error::Domain(format!(
            "search cost must be positive, got {cost}"
        )));
    }
    let quantile_ps = [0.25, 0.75];
    if cost >= 0.5 {
        // first offer always accepted
        return Ok(SummaryStats {
            mean: 1.0,
            median: 1,
            quantiles: quantile_ps.iter().map(|&p| (p, 1)).collect(),
            mean_fraction: None,
            median_fraction: None,
            success_prob: None,
            no_choice_prob: None,
        });
    }
    let p = (2.0 * cost).sqrt();
    let q = 1.0 - p;
    let quantile = |prob: f64| -> u64 {
        // smallest k with 1 − q^k ≥ prob
        let k = ((1.0 - prob).ln() / q.ln()).ceil();
        (k as u64).max(1)
    };
    Ok(SummaryStats {
        mean: 1.0 / p,
        median: quantile(0.5),
        quantiles: quantile_ps.iter().map(|&pr| (pr, quantile(pr))).collect(),
        mean_fraction: None,
        median_fraction: None,
        success_prob: None,
        no_choice_prob: None,
    })
}
