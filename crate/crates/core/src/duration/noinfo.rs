//! Duration law for the no-information single-threshold rules.
//!
//! With stopping allowed from position f on (f = first eligible position),
//! the chance that position x stops the search is (f−1)/(x(x−1)) for
//! f ≤ x ≤ N−1; the remaining (f−1)/(N−1) sits on T = N, covering both
//! "accepted the last applicant" and the forced default.

use crate::duration::distribution::DurationDistribution;
use crate::error::{Error, Result};
use crate::policy::Policy;
use crate::specfun::{digamma, lambert_w, WBranch};

fn threshold_pair(n: u64, policy: &Policy) -> Result<(u64, u64)> {
    let (c, f) = policy.as_single_threshold()?;
    if c < 1 || c > n {
        return Err(Error::InvalidParameter(format!(
            "threshold c = {c} outside 1..={n}"
        )));
    }
    if f != c && f != c + 1 {
        return Err(Error::InvalidParameter(format!(
            "first_eligible must be c or c+1, got c = {c}, first_eligible = {f}"
        )));
    }
    Ok((c, f.min(n)))
}

/// Exact PMF of T under a single-threshold rule.
///
/// The separate no-choice mass is reported only for sample-then-stop rules
/// (first_eligible = c + 1), where it is the probability of reaching the
/// last applicant without an acceptable candidate among the first N − 1.
pub fn no_info_pmf(n: u64, policy: &Policy) -> Result<DurationDistribution> {
    let (c, f) = threshold_pair(n, policy)?;
    let mut pmf = vec![0.0; n as usize];
    if f <= 1 || n == 1 {
        pmf[0] = 1.0;
        return DurationDistribution::new(n, pmf, None);
    }
    let w = (f - 1) as f64;
    for x in f..n {
        let xf = x as f64;
        pmf[(x - 1) as usize] = w / (xf * (xf - 1.0));
    }
    let atom = w / (n - 1) as f64;
    pmf[(n - 1) as usize] = atom;
    let no_choice = if f == c + 1 { Some(atom) } else { None };
    DurationDistribution::new(n, pmf, no_choice)
}

/// Closed-form mean of T under a single-threshold rule:
/// (f−1)·[N/(N−1) + ψ(N−1) − ψ(f−1)].
pub fn no_info_mean(n: u64, policy: &Policy) -> Result<f64> {
    let (_, f) = threshold_pair(n, policy)?;
    if f <= 1 || n == 1 {
        return Ok(1.0);
    }
    if f == n {
        return Ok(n as f64);
    }
    let w = (f - 1) as f64;
    let nf = n as f64;
    Ok(w * (nf / (nf - 1.0) + digamma(nf - 1.0)? - digamma(w)?))
}

/// Continuous quantile of T: the smallest x with CDF ≥ p is (c−1)/(1−p)
/// before integer rounding and capping at the pool size.
pub fn no_info_quantile(c: u64, p: f64) -> Result<f64> {
    if c < 2 {
        return Err(Error::Domain(format!(
            "quantile formula requires c >= 2, got {c}"
        )));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    Ok((c - 1) as f64 / (1.0 - p))
}

/// Asymptotic mean fraction of interviewed applicants under a threshold
/// fraction x: x·[1 + ln(1/x)].
pub fn asymptotic_fraction_single(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain(format!(
            "threshold fraction must lie in (0, 1], got {x}"
        )));
    }
    Ok(x * (1.0 - x.ln()))
}

/// Threshold fraction that makes the asymptotic mean fraction equal p:
/// exp(1 + W₋₁(−p/e)).
pub fn inverse_threshold_for_mean(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    let w = lambert_w(-p / std::f64::consts::E, WBranch::Lower)?;
    Ok((1.0 + w).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policy::Policy;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn immediate_acceptance() {
        let d = no_info_pmf(5, &Policy::single_threshold(1, 1)).unwrap();
        assert_eq!(d.pmf, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        close(no_info_mean(5, &Policy::single_threshold(1, 1)).unwrap(), 1.0, 0.0);
    }

    #[test]
    fn secretary_small_cases() {
        // N=3, c=2: Pr(T=2) = 1/2, Pr(T=3) = 1/2
        let d = no_info_pmf(3, &Policy::single_threshold(2, 2)).unwrap();
        close(d.pmf[0], 0.0, 0.0);
        close(d.pmf[1], 0.5, 1e-15);
        close(d.pmf[2], 0.5, 1e-15);
        assert!(d.no_choice_mass.is_none());
        // N=9, c=4: median 2(c−1) = 6
        let d = no_info_pmf(9, &Policy::single_threshold(4, 4)).unwrap();
        assert_eq!(d.median(), 6);
        close(d.total(), 1.0, 1e-12);
    }

    #[test]
    fn postdoc_atom_is_reported_as_no_choice() {
        // N=10, c=5, first eligible 6: atom = 5/9
        let d = no_info_pmf(10, &Policy::single_threshold(5, 6)).unwrap();
        close(d.pmf[9], 5.0 / 9.0, 1e-15);
        assert_eq!(d.no_choice_mass, Some(d.pmf[9]));
        close(d.total(), 1.0, 1e-12);
        // odd pool: N=9, c=4, eligible from 5
        let d = no_info_pmf(9, &Policy::single_threshold(4, 5)).unwrap();
        close(d.pmf[8], 0.5, 1e-15);
        assert_eq!(d.median(), 8); // CDF hits exactly 1/2 at N−1
    }

    #[test]
    fn closed_form_mean_equals_pmf_mean() {
        for n in [5u64, 9, 25, 100] {
            for c in 1..=n {
                for f in [c, (c + 1).min(n)] {
                    let p = Policy::single_threshold(c, f);
                    let pmf_mean = no_info_pmf(n, &p).unwrap().mean();
                    let formula = no_info_mean(n, &p).unwrap();
                    close(formula, pmf_mean, 1e-9);
                }
            }
        }
    }

    #[test]
    fn known_means() {
        // exact process means (the published tables add the terminal atom)
        close(
            no_info_mean(100, &Policy::single_threshold(10, 10)).unwrap(),
            31.135_683_9,
            1e-6,
        );
        close(
            no_info_mean(100, &Policy::single_threshold(38, 38)).unwrap(),
            74.104_3,
            1e-4,
        );
    }

    #[test]
    fn quantile_formula() {
        close(no_info_quantile(4, 0.5).unwrap(), 6.0, 1e-12);
        close(no_info_quantile(4, 0.75).unwrap(), 12.0, 1e-12);
        close(no_info_quantile(4, 0.2).unwrap(), 3.75, 1e-12);
        close(no_info_quantile(5, 0.5).unwrap(), 8.0, 1e-12);
        assert!(no_info_quantile(1, 0.5).is_err());
        assert!(no_info_quantile(4, 1.0).is_err());
    }

    #[test]
    fn asymptotic_fraction_values() {
        let inv_e = (-1.0f64).exp();
        close(
            asymptotic_fraction_single(inv_e).unwrap(),
            2.0 * inv_e,
            1e-14,
        );
        close(asymptotic_fraction_single(1.0).unwrap(), 1.0, 0.0);
        close(
            asymptotic_fraction_single((-0.5f64).exp()).unwrap(),
            1.5 * (-0.5f64).exp(),
            1e-14,
        );
        assert!(asymptotic_fraction_single(0.0).is_err());
        assert!(asymptotic_fraction_single(1.5).is_err());
    }

    #[test]
    fn inverse_threshold_round_trips() {
        close(
            inverse_threshold_for_mean(0.5).unwrap(),
            0.186_682_308_851,
            1e-9,
        );
        let inv_e = (-1.0f64).exp();
        close(inverse_threshold_for_mean(2.0 * inv_e).unwrap(), inv_e, 1e-10);
        for i in 1..20 {
            let p = i as f64 / 20.0;
            let x = inverse_threshold_for_mean(p).unwrap();
            close(asymptotic_fraction_single(x).unwrap(), p, 1e-10);
        }
        close(inverse_threshold_for_mean(1.0 - 1e-9).unwrap(), 1.0, 1e-3);
        assert!(inverse_threshold_for_mean(1.0).is_err());
    }
}
