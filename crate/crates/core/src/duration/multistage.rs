//! Asymptotic duration law for multi-stage rank rules (Gusein-Zade,
//! Lindley): CDF, quantiles and the mean fraction of interviewed
//! applicants, plus the series evaluation of the Lindley mean.

use crate::error::{Error, Result};
use crate::policies::lindley_v_infinity;

fn validate_stages(stages: &[f64]) -> Result<()> {
    if stages.is_empty() {
        return Err(Error::InvalidParameter("empty stage vector".into()));
    }
    let mut prev = 0.0;
    for &c in stages {
        if !(c > prev && c <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "stage thresholds must be strictly increasing in (0, 1], got {stages:?}"
            )));
        }
        prev = c;
    }
    Ok(())
}

/// Asymptotic CDF of the interviewed fraction:
/// F(m) = 1 − (Π_{i≤d} c_i)/m^d with d = #{thresholds below m}.
pub fn multi_stage_cdf(stages: &[f64], m: f64) -> Result<f64> {
    validate_stages(stages)?;
    if !(m > 0.0 && m <= 1.0) {
        return Err(Error::Domain(format!(
            "fraction must lie in (0, 1], got {m}"
        )));
    }
    if m <= stages[0] {
        return Ok(0.0);
    }
    let mut prod = 1.0;
    let mut d = 0u32;
    for &c in stages {
        if c < m {
            prod *= c;
            d += 1;
        } else {
            break;
        }
    }
    Ok(1.0 - prod / m.powi(d as i32))
}

/// Asymptotic quantile: the fraction m with F(m) = p.  Candidates
/// m_d = (Π_{i≤d} c_i / (1−p))^(1/d) are screened against their stage
/// bracket (c_d, c_{d+1}]; past the last stage the result is capped at 1.
pub fn multi_stage_quantile(stages: &[f64], p: f64) -> Result<f64> {
    validate_stages(stages)?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    let s = stages.len();
    let mut prod = 1.0;
    for d in 1..=s {
        prod *= stages[d - 1];
        let m = (prod / (1.0 - p)).powf(1.0 / d as f64);
        let upper = if d < s { stages[d] } else { 1.0 };
        if m > stages[d - 1] && m <= upper {
            return Ok(m);
        }
    }
    Ok(1.0)
}

/// Asymptotic mean fraction of interviewed applicants under stage
/// thresholds c_1 < … < c_S (with the closing convention c_{S+1} = 1):
/// c_1·ln(c_2/c_1) + Σ_{d=2}^{S} d/(d−1)·(Π_{i≤d} c_i)·(c_d^{1−d} − c_{d+1}^{1−d}) + Π_{i≤S} c_i.
pub fn multi_stage_mean(stages: &[f64]) -> Result<f64> {
    validate_stages(stages)?;
    let s = stages.len();
    let c = |d: usize| -> f64 {
        if d <= s {
            stages[d - 1]
        } else {
            1.0
        }
    };
    let mut total = c(1) * (c(2) / c(1)).ln();
    let mut prod = c(1);
    for d in 2..=s {
        prod *= c(d);
        let dm1 = (d - 1) as i32;
        total += d as f64 / (d as f64 - 1.0) * prod * (c(d).powi(-dm1) - c(d + 1).powi(-dm1));
    }
    Ok(total + prod)
}

/// Partial sum of the Lindley mean series:
/// Σ_{k=1}^{K} 1/(k(k+1)) · Π_{j=2}^{k+1} (1 + 2/j)^(−(j−1)/(j+1)).
pub fn lindley_series_partial(terms: usize) -> f64 {
    let mut log_prod = 0.0f64;
    let mut sum = 0.0f64;
    for k in 1..=terms {
        let j = (k + 1) as f64;
        log_prod += -(j - 1.0) / (j + 1.0) * (1.0 + 2.0 / j).ln();
        sum += log_prod.exp() / (k as f64 * (k as f64 + 1.0));
    }
    sum
}

/// Upper bound on the tail beyond 50 terms: 4.99106/70278 ≈ 7.1e-5.
pub fn lindley_series_tail_bound() -> f64 {
    4.99106 / 70278.0
}

/// Asymptotic mean fraction of interviewed applicants in the
/// minimum-expected-rank setting:
/// (1/V∞)·(½·ln 3 + 2 − Σ_{k≥1} …), series truncated at 50 terms.
pub fn lindley_asymptotic_mean() -> f64 {
    let sum = lindley_series_partial(50);
    (0.5 * 3.0f64.ln() + 2.0 - sum) / lindley_v_infinity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policies::{gusein_zade_stages, lindley_stages};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn single_stage_cdf_reduces_to_threshold_law() {
        let stages = [0.25];
        close(multi_stage_cdf(&stages, 0.5).unwrap(), 0.5, 1e-15);
        close(multi_stage_cdf(&stages, 1.0).unwrap(), 0.75, 1e-15);
        close(multi_stage_cdf(&stages, 0.2).unwrap(), 0.0, 0.0);
        assert!(multi_stage_cdf(&stages, 1.5).is_err());
    }

    #[test]
    fn cdf_is_continuous_and_nondecreasing() {
        let stages = gusein_zade_stages(5).unwrap();
        let mut prev = 0.0;
        for i in 1..=1000 {
            let m = i as f64 / 1000.0;
            let f = multi_stage_cdf(&stages, m).unwrap();
            assert!(f + 1e-12 >= prev, "CDF decreased at m = {m}");
            prev = f;
        }
        // continuity across each threshold
        for &c in &stages {
            if c < 1.0 {
                let below = multi_stage_cdf(&stages, c - 1e-9).unwrap();
                let above = multi_stage_cdf(&stages, c + 1e-9).unwrap();
                close(below, above, 1e-7);
            }
        }
    }

    #[test]
    fn lindley_median_reference() {
        let stages = lindley_stages(8);
        let m = multi_stage_quantile(&stages, 0.5).unwrap();
        close(m, 0.480_992_495_991, 1e-8);
        close(m, 0.48099, 5e-6);
        // consistency: F(m) = 1/2
        close(multi_stage_cdf(&stages, m).unwrap(), 0.5, 1e-10);
    }

    #[test]
    fn gusein_zade_median_references() {
        let m10 = multi_stage_quantile(&gusein_zade_stages(10).unwrap(), 0.5).unwrap();
        close(m10, 0.52276, 5e-5);
        let m25 = multi_stage_quantile(&gusein_zade_stages(25).unwrap(), 0.5).unwrap();
        close(m25, 0.45545, 5e-5);
    }

    #[test]
    fn single_stage_quantile_is_scaled_threshold() {
        close(multi_stage_quantile(&[0.25], 0.5).unwrap(), 0.5, 1e-12);
        close(multi_stage_quantile(&[0.3], 0.25).unwrap(), 0.4, 1e-12);
        // heavy terminal atom: quantile caps at 1
        close(multi_stage_quantile(&[0.75], 0.5).unwrap(), 1.0, 0.0);
    }

    #[test]
    fn quantiles_invert_the_cdf() {
        let stages = gusein_zade_stages(10).unwrap();
        for i in 1..20 {
            let p = i as f64 / 20.0;
            let m = multi_stage_quantile(&stages, p).unwrap();
            if m < 1.0 {
                close(multi_stage_cdf(&stages, m).unwrap(), p, 1e-10);
            }
        }
    }

    #[test]
    fn single_stage_mean_matches_threshold_formula() {
        use crate::duration::noinfo::asymptotic_fraction_single;
        for i in 1..=20 {
            let x = i as f64 / 21.0;
            let a = multi_stage_mean(&[x]).unwrap();
            let b = asymptotic_fraction_single(x).unwrap();
            close(a, b, 1e-12);
        }
    }

    #[test]
    fn gusein_zade_mean_references() {
        let mean = |s: u32| multi_stage_mean(&gusein_zade_stages(s).unwrap()).unwrap();
        close(mean(2), 0.6892, 5e-5);
        close(mean(3), 0.6564, 5e-5);
        close(mean(5), 0.6102, 5e-5);
        close(mean(10), 0.5450, 5e-5);
        close(mean(15), 0.5095, 5e-5);
        close(mean(25), 0.4700, 5e-5);
    }

    #[test]
    fn lindley_series_and_mean() {
        let partial = lindley_series_partial(50);
        close(partial, 0.589_456_522_291, 1e-9);
        close(partial, 0.5895, 5e-5);
        // true tail (extended partial sums) stays under the stated bound
        let tail = lindley_series_partial(5000) - partial;
        assert!(tail > 0.0 && tail < lindley_series_tail_bound());
        let mean = lindley_asymptotic_mean();
        close(mean, 0.506_484_009_971, 1e-9);
        close(mean, 0.5065, 5e-5);
    }
}
