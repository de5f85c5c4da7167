//! Duration law for unconditional value-cutoff rules (Moser and the
//! decaying-pool variant): Pr(T = x) = (1 − P_x)·Π_{i<x} P_i.

use crate::duration::distribution::{neumaier_sum, DurationDistribution, SummaryStats};
use crate::error::{Error, Result};
use crate::policy::Policy;

fn rejection_probs<'p>(n: u64, policy: &'p Policy) -> Result<&'p [f64]> {
    let (cutoffs, candidate_only) = policy.as_cutoffs()?;
    if candidate_only {
        return Err(Error::PolicyMismatch {
            operation: "cutoff_pmf (candidate-only policies use gm_pmf)",
        });
    }
    if cutoffs.len() != n as usize {
        return Err(Error::InvalidParameter(format!(
            "cutoff vector length {} does not match n = {n}",
            cutoffs.len()
        )));
    }
    Ok(cutoffs)
}

/// Exact PMF of T for an unconditional cutoff rule.  The running product of
/// rejection probabilities is kept in log space; any survival mass after the
/// last position (possible only when P_N > 0) is folded into pmf[N−1] and
/// reported as the no-choice mass.
pub fn cutoff_pmf(n: u64, policy: &Policy) -> Result<DurationDistribution> {
    let cutoffs = rejection_probs(n, policy)?;
    let mut pmf = vec![0.0; n as usize];
    let mut log_prod = 0.0f64; // ln Π_{i<x} P_i
    for (i, &p_reject) in cutoffs.iter().enumerate() {
        let survive = log_prod.exp();
        pmf[i] = (1.0 - p_reject) * survive;
        log_prod += if p_reject > 0.0 {
            p_reject.ln()
        } else {
            f64::NEG_INFINITY
        };
    }
    let residual = log_prod.exp();
    let last = pmf.len() - 1;
    pmf[last] += residual;
    let mut dist = DurationDistribution::new(n, pmf, Some(residual))?;
    // guard against drift on very long products
    let total = dist.total();
    debug_assert!((total - 1.0).abs() < 1e-9, "cutoff pmf total {total}");
    if (total - 1.0).abs() > 1e-9 {
        let scale = 1.0 / total;
        for p in &mut dist.pmf {
            *p *= scale;
        }
    }
    Ok(dist)
}

/// Streaming summary for an unconditional cutoff rule, O(1) memory beyond
/// the cutoff vector.  Used for pools too large to materialize a PMF.
pub fn cutoff_stats(cutoffs: &[f64], quantile_ps: &[f64]) -> SummaryStats {
    let n = cutoffs.len() as u64;
    let mut ps: Vec<f64> = quantile_ps.to_vec();
    ps.push(0.5);
    ps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ps.dedup();
    let mut hit: Vec<(f64, Option<u64>)> = ps.iter().map(|&p| (p, None)).collect();

    let mut log_prod = 0.0f64;
    let mut cdf = 0.0f64;
    let mut cdf_comp = 0.0f64;
    let mut mean = 0.0f64;
    let mut mean_comp = 0.0f64;
    let mut next = 0usize;
    for (i, &p_reject) in cutoffs.iter().enumerate() {
        let x = i as u64 + 1;
        let mut mass = (1.0 - p_reject) * log_prod.exp();
        if x == n {
            log_prod += if p_reject > 0.0 {
                p_reject.ln()
            } else {
                f64::NEG_INFINITY
            };
            mass += log_prod.exp();
        } else {
            log_prod += if p_reject > 0.0 {
                p_reject.ln()
            } else {
                f64::NEG_INFINITY
            };
        }
        let term = x as f64 * mass;
        let t = mean + term;
        mean_comp += if mean.abs() >= term.abs() {
            (mean - t) + term
        } else {
            (term - t) + mean
        };
        mean = t;
        let t = cdf + mass;
        cdf_comp += if cdf.abs() >= mass.abs() {
            (cdf - t) + mass
        } else {
            (mass - t) + cdf
        };
        cdf = t;
        while next < hit.len() && cdf + cdf_comp >= hit[next].0 {
            hit[next].1 = Some(x);
            next += 1;
        }
    }
    let mean = mean + mean_comp;
    let median = hit
        .iter()
        .find(|(p, _)| *p == 0.5)
        .and_then(|(_, x)| *x)
        .unwrap_or(n);
    let nf = n as f64;
    SummaryStats {
        mean,
        median,
        quantiles: quantile_ps
            .iter()
            .map(|&p| {
                let x = hit
                    .iter()
                    .find(|(q, _)| *q == p)
                    .and_then(|(_, x)| *x)
                    .unwrap_or(n);
                (p, x)
            })
            .collect(),
        mean_fraction: Some(mean / nf),
        median_fraction: Some(median as f64 / nf),
        success_prob: None,
        no_choice_prob: None,
    }
}

/// Telescoped law check helper: exact PMF mass at x for the cutoff family
/// P_i = 1 − 2/(N+2−i) is 2(N+1−x)/(N(N+1)).
#[cfg(test)]
pub(crate) fn triangular_reference(n: u64, x: u64) -> f64 {
    2.0 * (n + 1 - x) as f64 / (n as f64 * (n + 1) as f64)
}
