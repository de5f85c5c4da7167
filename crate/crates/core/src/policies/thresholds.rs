//! Single-threshold policies, their objective functions and the asymptotic
//! threshold fractions.

use crate::error::{Error, Result};
use crate::policy::Policy;
use crate::setting::{SettingSpec, Variant};
use crate::specfun::{digamma, lambert_w, solve_root, Bracket, WBranch};

/// Optimal integer threshold for the single-threshold settings.
///
/// Secretary: the smallest c with Σ_{k=c+1}^{N} 1/(k−1) ≤ 1, stopping
/// allowed from position c on.  Bearden: c = √N rounded to the nearest
/// integer, stopping from c.  Postdoc: c = ⌊N/2⌋ sampled outright, stopping
/// from c + 1 on.
pub fn single_threshold(setting: &SettingSpec) -> Result<Policy> {
    let n = setting.require_n()?;
    if n == 1 {
        return Ok(Policy::single_threshold(1, 1));
    }
    match setting.variant {
        Variant::Secretary => {
            let c = secretary_scan(n);
            Ok(Policy::single_threshold(c, c))
        }
        Variant::Bearden => {
            let c = (n as f64).sqrt().round() as u64;
            let c = c.clamp(1, n);
            Ok(Policy::single_threshold(c, c))
        }
        Variant::Postdoc => {
            let c = n / 2;
            Ok(Policy::single_threshold(c, c + 1))
        }
        v => Err(Error::UnsupportedVariant {
            operation: "single_threshold",
            variant: v,
        }),
    }
}

/// Smallest c with Σ_{k=c+1}^{N} 1/(k−1) ≤ 1 (compensated summation).
fn secretary_scan(n: u64) -> u64 {
    let mut c = n;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    while c > 1 {
        let term = 1.0 / (c - 1) as f64;
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        if t + comp > 1.0 {
            break;
        }
        sum = t;
        c -= 1;
    }
    c
}

/// Objective value of threshold `c` in the given setting: win probability
/// for secretary/postdoc, expected payoff for Bearden and the
/// interview-cost setting.
pub fn objective_value(setting: &SettingSpec, c: u64) -> Result<f64> {
    let n = setting.require_n()?;
    if c < 1 || c > n {
        return Err(Error::InvalidParameter(format!(
            "threshold must satisfy 1 <= c <= {n}, got {c}"
        )));
    }
    let nf = n as f64;
    let cf = c as f64;
    match setting.variant {
        Variant::Secretary => {
            if c == 1 {
                return Ok(1.0 / nf);
            }
            // (c−1)/N · Σ_{k=c}^{N} 1/(k−1)
            Ok((cf - 1.0) / nf * (digamma(nf)? - digamma(cf - 1.0)?))
        }
        Variant::Bearden => Ok((2.0 * nf * cf - cf * cf + cf - nf) / (2.0 * nf * cf)),
        Variant::Postdoc => {
            if n < 2 {
                return Err(Error::InvalidParameter(
                    "the postdoc objective needs n >= 2".into(),
                ));
            }
            Ok(cf * (nf - cf) / (nf * (nf - 1.0)))
        }
        Variant::InterviewCost => {
            if c == 1 {
                return Ok((1.0 / nf) * (1.0 - 1.0 / nf));
            }
            let hsum = digamma(nf)? - digamma(cf - 1.0)?;
            Ok((cf - 1.0) / nf * ((nf - 1.0) * hsum - (nf - cf + 1.0)) / nf)
        }
        v => Err(Error::UnsupportedVariant {
            operation: "objective_value",
            variant: v,
        }),
    }
}

/// Reservation value for the unbounded house-selling search with
/// per-offer cost: γ* = 1 − √(2·cost), degenerate above cost 1/2.
pub fn reservation_value(cost: f64) -> Result<Policy> {
    if !(cost > 0.0) {
        return Err(Error::Domain(format!(
            "search cost must be positive, got {cost}"
        )));
    }
    if cost > 0.5 {
        return Ok(Policy::ReservationValue {
            gamma: 0.0,
            degenerate: true,
        });
    }
    Ok(Policy::ReservationValue {
        gamma: 1.0 - (2.0 * cost).sqrt(),
        degenerate: false,
    })
}

/// Limiting threshold fraction c*/N for the settings whose optimal rule is
/// a single threshold.
pub fn asymptotic_threshold(setting: &SettingSpec) -> Result<f64> {
    match setting.variant {
        Variant::Secretary => Ok((-1.0f64).exp()),
        Variant::Sakaguchi => Ok((-0.5f64).exp()),
        Variant::Postdoc => Ok(0.5),
        Variant::PresmanSonin => Ok((-2.0f64).exp()),
        Variant::Smith => {
            let p = setting.require_p()?;
            if p >= 1.0 {
                return Ok((-1.0f64).exp());
            }
            Ok(p.powf(1.0 / (1.0 - p)))
        }
        Variant::NoInfoDuration => Ok((-2.0f64).exp()),
        Variant::NoInfoBestChoiceDuration | Variant::InterviewCost => {
            best_choice_duration_threshold()
        }
        Variant::SzajowskiCost => {
            let cost = setting.require_cost()?;
            szajowski_threshold(cost)
        }
        v => Err(Error::UnsupportedVariant {
            operation: "asymptotic_threshold",
            variant: v,
        }),
    }
}

/// −½·W₀(−2/e²) ≈ 0.20318787, the root of 2x − ln x = 2 in (0, 1).
pub(crate) fn best_choice_duration_threshold() -> Result<f64> {
    let z = -2.0 * (-2.0f64).exp();
    Ok(-0.5 * lambert_w(z, WBranch::Principal)?)
}

/// Unique root in (0, 1) of ln(c) = b(c − 1) with b = 1 + 1/(2·cost).
pub(crate) fn szajowski_threshold(cost: f64) -> Result<f64> {
    if !(cost > 0.0) {
        return Err(Error::Domain(format!(
            "cost coefficient must be positive, got {cost}"
        )));
    }
    let b = 1.0 + 1.0 / (2.0 * cost);
    let g = |c: f64| c.ln() - b * (c - 1.0);
    solve_root(g, Bracket::new(1e-12, 1.0 - 1e-9)?, 1e-14)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn threshold(setting: &SettingSpec) -> (u64, u64) {
        single_threshold(setting).unwrap().as_single_threshold().unwrap()
    }

    #[test]
    fn secretary_thresholds() {
        assert_eq!(threshold(&SettingSpec::secretary(3)), (2, 2));
        assert_eq!(threshold(&SettingSpec::secretary(9)), (4, 4));
        assert_eq!(threshold(&SettingSpec::secretary(100)), (38, 38));
        assert_eq!(threshold(&SettingSpec::secretary(1)), (1, 1));
    }

    #[test]
    fn bearden_threshold_rounds_to_nearest() {
        assert_eq!(threshold(&SettingSpec::bearden(100)), (10, 10));
        assert_eq!(threshold(&SettingSpec::bearden(9)), (3, 3));
        assert_eq!(threshold(&SettingSpec::bearden(10)), (3, 3)); // √10 = 3.16
    }

    #[test]
    fn postdoc_threshold_samples_first_half() {
        assert_eq!(threshold(&SettingSpec::postdoc(10)), (5, 6));
        assert_eq!(threshold(&SettingSpec::postdoc(9)), (4, 5));
    }

    #[test]
    fn secretary_objective_examples() {
        // N=3, c=2: (1/3)(1 + 1/2)
        close(
            objective_value(&SettingSpec::secretary(3), 2).unwrap(),
            0.5,
            1e-12,
        );
        // N=4, c=2: (1/4)(1 + 1/2 + 1/3) = 11/24
        close(
            objective_value(&SettingSpec::secretary(4), 2).unwrap(),
            11.0 / 24.0,
            1e-12,
        );
        close(
            objective_value(&SettingSpec::secretary(5), 1).unwrap(),
            0.2,
            1e-15,
        );
    }

    #[test]
    fn secretary_objective_matches_direct_sum() {
        for n in [5u64, 17, 60] {
            for c in 2..=n {
                let direct: f64 = (c..=n).map(|k| 1.0 / (k - 1) as f64).sum::<f64>()
                    * (c - 1) as f64
                    / n as f64;
                let v = objective_value(&SettingSpec::secretary(n), c).unwrap();
                close(v, direct, 1e-12);
            }
        }
    }

    #[test]
    fn secretary_scan_is_argmax() {
        for n in 3..=50u64 {
            let (c_star, _) = threshold(&SettingSpec::secretary(n));
            let best = objective_value(&SettingSpec::secretary(n), c_star).unwrap();
            for c in 1..=n {
                let v = objective_value(&SettingSpec::secretary(n), c).unwrap();
                assert!(
                    v <= best + 1e-12,
                    "secretary N={n}: objective at c={c} ({v}) beats c*={c_star} ({best})"
                );
            }
        }
    }

    #[test]
    fn bearden_objective_examples_and_argmax() {
        close(
            objective_value(&SettingSpec::bearden(4), 2).unwrap(),
            0.625,
            1e-12,
        );
        // EV(c*) = 1 − (2√N − 1)/(2N) at perfect squares
        let n = 4.0f64;
        close(
            objective_value(&SettingSpec::bearden(4), 2).unwrap(),
            1.0 - (2.0 * n.sqrt() - 1.0) / (2.0 * n),
            1e-12,
        );
        for n in 4..=400u64 {
            let (c_star, _) = threshold(&SettingSpec::bearden(n));
            let best = objective_value(&SettingSpec::bearden(n), c_star).unwrap();
            for c in 1..=n {
                let v = objective_value(&SettingSpec::bearden(n), c).unwrap();
                assert!(
                    v <= best + 1e-12,
                    "bearden N={n}: objective at c={c} beats round(sqrt(N))={c_star}"
                );
            }
        }
    }

    #[test]
    fn postdoc_objective_example() {
        close(
            objective_value(&SettingSpec::postdoc(4), 2).unwrap(),
            1.0 / 3.0,
            1e-12,
        );
    }

    #[test]
    fn interview_cost_objective_matches_direct_sum() {
        for n in [10u64, 40] {
            for c in 1..=n {
                let direct: f64 = (c.max(2)..=n)
                    .map(|k| (1.0 - k as f64 / n as f64) / (k - 1) as f64)
                    .sum::<f64>()
                    * (c as f64 - 1.0)
                    / n as f64
                    + if c == 1 {
                        (1.0 / n as f64) * (1.0 - 1.0 / n as f64)
                    } else {
                        0.0
                    };
                let v = objective_value(&SettingSpec::interview_cost(n), c).unwrap();
                close(v, direct, 1e-12);
            }
        }
    }

    #[test]
    fn reservation_values() {
        let g = |cost: f64| match reservation_value(cost).unwrap() {
            Policy::ReservationValue { gamma, degenerate } => (gamma, degenerate),
            _ => unreachable!(),
        };
        close(g(0.5).0, 0.0, 1e-15);
        assert!(!g(0.5).1);
        close(g(0.02).0, 0.8, 1e-12);
        close(g(0.01).0, 0.858_578_643_762_69, 1e-12);
        assert!(g(0.7).1);
        assert!(reservation_value(0.0).is_err());
        assert!(reservation_value(-0.1).is_err());
    }

    #[test]
    fn asymptotic_thresholds() {
        let t = |s: &SettingSpec| asymptotic_threshold(s).unwrap();
        close(t(&SettingSpec::secretary(10)), 0.367_879_441_171_44, 1e-12);
        close(t(&SettingSpec::with_n(Variant::Sakaguchi, 10)), 0.606_530_659_712_63, 1e-12);
        close(t(&SettingSpec::smith(10, 0.5)), 0.25, 1e-12);
        close(
            t(&SettingSpec::with_n(Variant::NoInfoBestChoiceDuration, 10)),
            0.203_187_869_979_98,
            1e-8,
        );
        close(t(&SettingSpec::presman_sonin(10)), 0.135_335_283_236_61, 1e-12);
        // cost coefficient 0.5 reproduces the best-choice duration constant
        let s = SettingSpec::szajowski_cost(None, 0.5);
        close(t(&s), 0.203_187_869_979_98, 1e-9);
        assert!(asymptotic_threshold(&SettingSpec::moser(5)).is_err());
    }

    #[test]
    fn szajowski_root_satisfies_equation() {
        for &cost in &[0.1, 0.25, 0.5, 1.0, 4.0] {
            let b = 1.0 + 1.0 / (2.0 * cost);
            let c = szajowski_threshold(cost).unwrap();
            assert!(c > 0.0 && c < 1.0);
            close(c.ln(), b * (c - 1.0), 1e-10);
        }
    }

    #[test]
    fn secretary_threshold_fraction_tends_to_inv_e() {
        let (c, _) = threshold(&SettingSpec::secretary(100_000));
        let frac = c as f64 / 100_000.0;
        assert!((frac - (-1.0f64).exp()).abs() < 0.01);
    }
}
