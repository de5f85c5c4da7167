//! Duration law for candidate-only cutoff rules (the Gilbert–Mosteller
//! family): the x-th applicant is taken when it is relatively best and
//! clears its decision value.
//!
//! Reaching position x+1 unselected has probability Σ_{i≤x} P_i^x / x, so
//! Pr(T = x) = Σ_{i≤x−1} P_i^{x−1}/(x−1) − Σ_{i≤x} P_i^x/x, and the chance
//! of finishing with no acceptable candidate at all is Σ_{i≤N} P_i^N / N.
//! The computation is quadratic in the pool size.

use rayon::prelude::*;

use crate::duration::distribution::{neumaier_sum, DurationDistribution};
use crate::error::{Error, Result};
use crate::policy::Policy;

/// Default pool-size cap for the quadratic exact computation.
pub const GM_EXACT_MODE_CAP: u64 = 20_000;

/// Exact PMF of T for a candidate-only cutoff rule, refusing pools larger
/// than [`GM_EXACT_MODE_CAP`].
pub fn gm_pmf(n: u64, policy: &Policy) -> Result<DurationDistribution> {
    gm_pmf_with_cap(n, policy, GM_EXACT_MODE_CAP)
}

/// Exact PMF of T with an explicit cap on the quadratic pass.
pub fn gm_pmf_with_cap(n: u64, policy: &Policy, cap: u64) -> Result<DurationDistribution> {
    let (cutoffs, candidate_only) = policy.as_cutoffs()?;
    if !candidate_only {
        return Err(Error::PolicyMismatch {
            operation: "gm_pmf (unconditional policies use cutoff_pmf)",
        });
    }
    if cutoffs.len() != n as usize {
        return Err(Error::InvalidParameter(format!(
            "cutoff vector length {} does not match n = {n}",
            cutoffs.len()
        )));
    }
    if n > cap {
        return Err(Error::ExactModeUnavailable { n, cap });
    }
    let nu = n as usize;
    let log_p: Vec<f64> = cutoffs
        .iter()
        .map(|&p| if p > 0.0 { p.ln() } else { f64::NEG_INFINITY })
        .collect();

    // survive[x−1] = Σ_{i≤x} P_i^x, each inner sum evaluated term by term in
    // log space; rows are independent, so the parallel split cannot change
    // any row's summation order.
    let survive: Vec<f64> = (1..=nu)
        .into_par_iter()
        .map(|x| {
            let xf = x as f64;
            neumaier_sum(log_p[..x].iter().map(|&lp| {
                if lp == f64::NEG_INFINITY {
                    0.0
                } else {
                    (xf * lp).exp()
                }
            }))
        })
        .collect();

    let mut pmf = vec![0.0; nu];
    pmf[0] = 1.0 - cutoffs[0];
    for x in 2..nu {
        let prev = survive[x - 2] / (x as f64 - 1.0);
        let cur = survive[x - 1] / x as f64;
        pmf[x - 1] = (prev - cur).max(0.0);
    }
    let no_choice = survive[nu - 1] / nu as f64;
    if nu >= 2 {
        // combined atom at N: everything that reaches the last position
        pmf[nu - 1] = survive[nu - 2] / (nu as f64 - 1.0);
    }
    DurationDistribution::new(n, pmf, Some(no_choice))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policies::{gm_best_choice_cutoffs, gm_decision_values};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn single_applicant_is_always_chosen() {
        let d = gm_pmf(1, &gm_best_choice_cutoffs(1)).unwrap();
        assert_eq!(d.pmf, vec![1.0]);
        assert_eq!(d.no_choice_mass, Some(0.0));
    }

    #[test]
    fn two_applicants_by_hand() {
        // P_1 = A_1 = 1/2, P_2 = A_0 = 0.
        // T=1 iff X_1 > 1/2.  Otherwise the search reaches position 2.
        let d = gm_pmf(2, &gm_best_choice_cutoffs(2)).unwrap();
        close(d.pmf[0], 0.5, 1e-15);
        close(d.pmf[1], 0.5, 1e-15);
        // no choice: X_1 ≤ 1/2 and X_2 below both its cutoff (0) — impossible
        // unless X_2 is not relatively best: Σ P_i²/2 = (1/4)/2
        close(d.no_choice_mass.unwrap(), 0.125, 1e-15);
        close(d.total(), 1.0, 1e-12);
    }

    #[test]
    fn cdf_matches_survival_form() {
        // partial sums of the pmf must equal 1 − Σ_{i≤x} P_i^x / x
        let n = 200u64;
        let policy = gm_best_choice_cutoffs(n);
        let (cutoffs, _) = policy.as_cutoffs().unwrap();
        let d = gm_pmf(n, &policy).unwrap();
        let cdf = d.cdf();
        for x in 1..(n as usize) {
            let xf = x as f64;
            let survive: f64 = cutoffs[..x].iter().map(|&p| p.powf(xf)).sum::<f64>() / xf;
            close(cdf[x - 1], 1.0 - survive, 1e-10);
        }
        close(cdf[n as usize - 1], 1.0, 1e-10);
    }

    #[test]
    fn reference_mean_and_median_at_n100() {
        let d = gm_pmf(100, &gm_best_choice_cutoffs(100)).unwrap();
        close(d.mean(), 58.293_598, 5e-6);
        assert_eq!(d.median(), 59); // published convention prints 58
        close(d.no_choice_mass.unwrap(), 0.198_047, 5e-6);
        close(d.total(), 1.0, 1e-10);
    }

    #[test]
    fn cap_is_enforced() {
        let policy = Policy::value_cutoffs(vec![0.0; 30], true).unwrap();
        assert!(matches!(
            gm_pmf_with_cap(30, &policy, 10),
            Err(Error::ExactModeUnavailable { n: 30, cap: 10 })
        ));
    }

    #[test]
    fn exact_values_feed_the_pmf() {
        // N=8 pmf normalizes and matches a direct O(N³) evaluation
        let n = 8usize;
        let a = gm_decision_values(7);
        let p: Vec<f64> = (1..=n).map(|i| a[n - i]).collect();
        let policy = Policy::value_cutoffs(p.clone(), true).unwrap();
        let d = gm_pmf(8, &policy).unwrap();
        close(d.total(), 1.0, 1e-12);
        for x in 2..n {
            let s1: f64 = p[..x - 1]
                .iter()
                .map(|&q| q.powi(x as i32 - 1))
                .sum::<f64>()
                / (x as f64 - 1.0);
            let s2: f64 = p[..x].iter().map(|&q| q.powi(x as i32)).sum::<f64>() / x as f64;
            close(d.pmf[x - 1], s1 - s2, 1e-13);
        }
    }
}
