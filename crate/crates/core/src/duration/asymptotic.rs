//! Asymptotic (large-pool) mean/median fractions, success and no-choice
//! probabilities for every setting that has them.

use serde::Serialize;

use crate::duration::multistage::{lindley_asymptotic_mean, multi_stage_mean, multi_stage_quantile};
use crate::duration::noinfo::asymptotic_fraction_single;
use crate::error::{Error, Result};
use crate::policies::{
    gusein_zade_stages, lindley_stages, FI_BEST_CHOICE_DURATION_C, FI_DURATION_C, GM_BEST_CHOICE_C,
};
use crate::policies::{asymptotic_threshold, lindley_v_infinity};
use crate::setting::{SettingSpec, Variant};
use crate::specfun::{exp_integral_e1, integrate, lambert_w, solve_root, Bracket, WBranch};

/// Limiting fractions for a setting as the pool grows.
///
/// `threshold_fraction` is the sampling-phase length (0 for the
/// full-information settings, which need no sampling phase);
/// `constant_c` is the decision-value constant for the Gilbert–Mosteller
/// family.  Fields the underlying theory does not provide stay `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub mean_fraction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_choice_prob: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub success_prob: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditional_mean_fraction: Option<f64>,
    pub threshold_fraction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant_c: Option<f64>,
}

/// Mean fraction of interviewed applicants in the Gilbert–Mosteller family:
/// π(c) = (e^c − 1 − c)·E1(c) + e^(−c).
pub fn gm_mean_fraction(c: f64) -> Result<f64> {
    Ok((c.exp() - 1.0 - c) * exp_integral_e1(c)? + (-c).exp())
}

/// Probability of finishing with no acceptable candidate:
/// e^(−c) − c·E1(c).
pub fn gm_no_choice_fraction(c: f64) -> Result<f64> {
    Ok((-c).exp() - c * exp_integral_e1(c)?)
}

/// Median fraction m(c): the root of m = 2·∫₀^m exp(−c·m/(1−x)) dx.
pub fn gm_median_fraction(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Domain(format!("constant must be positive, got {c}")));
    }
    let g = |m: f64| -> f64 {
        let inner = integrate(|x| (-c * m / (1.0 - x)).exp(), 0.0, m, 1e-10)
            .expect("inner quadrature of a bounded smooth integrand");
        m - 2.0 * inner
    };
    solve_root(g, Bracket::new(0.01, 0.99)?, 1e-10)
}

fn gm_family_report(c: f64, success_is_mean: bool) -> Result<AsymptoticReport> {
    let mean = gm_mean_fraction(c)?;
    Ok(AsymptoticReport {
        mean_fraction: mean,
        median_fraction: Some(gm_median_fraction(c)?),
        no_choice_prob: Some(gm_no_choice_fraction(c)?),
        success_prob: success_is_mean.then_some(mean),
        conditional_mean_fraction: None,
        threshold_fraction: 0.0,
        constant_c: Some(c),
    })
}

fn single_threshold_report(x: f64) -> Result<AsymptoticReport> {
    Ok(AsymptoticReport {
        mean_fraction: asymptotic_fraction_single(x)?,
        median_fraction: Some((2.0 * x).min(1.0)),
        no_choice_prob: None,
        success_prob: None,
        conditional_mean_fraction: None,
        threshold_fraction: x,
        constant_c: None,
    })
}

/// Asymptotic report for the given setting.
pub fn asymptotic_report(setting: &SettingSpec) -> Result<AsymptoticReport> {
    let e = std::f64::consts::E;
    match setting.variant {
        Variant::Secretary => {
            let x = 1.0 / e;
            let mut r = single_threshold_report(x)?;
            r.success_prob = Some(x);
            Ok(r)
        }
        Variant::Sakaguchi => {
            let x = (-0.5f64).exp();
            let mut r = single_threshold_report(x)?;
            r.no_choice_prob = Some(x);
            r.conditional_mean_fraction = Some(1.0 / (2.0 * (0.5f64.exp() - 1.0)));
            Ok(r)
        }
        Variant::Postdoc => {
            let mut r = single_threshold_report(0.5)?;
            r.success_prob = Some(0.25);
            Ok(r)
        }
        Variant::Smith => {
            let p = setting.require_p()?;
            let x = asymptotic_threshold(setting)?;
            let mean = if p >= 1.0 {
                asymptotic_fraction_single(x)?
            } else {
                x * (1.0 - p.ln() / (1.0 - p))
            };
            Ok(AsymptoticReport {
                mean_fraction: mean,
                median_fraction: None,
                no_choice_prob: None,
                success_prob: Some(x),
                conditional_mean_fraction: None,
                threshold_fraction: x,
                constant_c: None,
            })
        }
        Variant::PresmanSonin => {
            let e2 = e * e;
            Ok(AsymptoticReport {
                // mean of T/n over the realized pool size n
                mean_fraction: (4.0 * e2 - 1.0) / (e2 * e2),
                median_fraction: None,
                no_choice_prob: None,
                success_prob: Some(2.0 / e2),
                conditional_mean_fraction: None,
                threshold_fraction: 1.0 / e2,
                constant_c: None,
            })
        }
        Variant::NoInfoDuration => single_threshold_report((-2.0f64).exp()),
        Variant::NoInfoBestChoiceDuration | Variant::InterviewCost => {
            let w = lambert_w(-2.0 * (-2.0f64).exp(), WBranch::Principal)?;
            let x = -0.5 * w;
            Ok(AsymptoticReport {
                mean_fraction: -0.5 * w * (3.0 + w),
                median_fraction: Some(-w),
                no_choice_prob: None,
                success_prob: None,
                conditional_mean_fraction: None,
                threshold_fraction: x,
                constant_c: None,
            })
        }
        Variant::SzajowskiCost => {
            let x = asymptotic_threshold(setting)?;
            single_threshold_report(x)
        }
        Variant::Moser => Ok(AsymptoticReport {
            mean_fraction: 1.0 / 3.0,
            median_fraction: Some(1.0 - 0.5f64.sqrt()),
            no_choice_prob: None,
            success_prob: None,
            conditional_mean_fraction: None,
            threshold_fraction: 0.0,
            constant_c: None,
        }),
        Variant::GmBestChoice => gm_family_report(GM_BEST_CHOICE_C, true),
        Variant::FiDuration => gm_family_report(FI_DURATION_C, false),
        Variant::FiBestChoiceDuration => gm_family_report(FI_BEST_CHOICE_DURATION_C, false),
        Variant::Lindley => {
            let stages = lindley_stages(8);
            Ok(AsymptoticReport {
                mean_fraction: lindley_asymptotic_mean(),
                median_fraction: Some(multi_stage_quantile(&stages, 0.5)?),
                no_choice_prob: None,
                success_prob: None,
                conditional_mean_fraction: None,
                threshold_fraction: 1.0 / lindley_v_infinity(),
                constant_c: None,
            })
        }
        Variant::GuseinZade => {
            let stages = gusein_zade_stages(setting.require_s()?)?;
            Ok(AsymptoticReport {
                mean_fraction: multi_stage_mean(&stages)?,
                median_fraction: Some(multi_stage_quantile(&stages, 0.5)?),
                no_choice_prob: None,
                success_prob: None,
                conditional_mean_fraction: None,
                threshold_fraction: stages[0],
                constant_c: None,
            })
        }
        v @ (Variant::Bearden | Variant::MoserDecaying | Variant::HouseSelling) => {
            Err(Error::UnsupportedVariant {
                operation: "asymptotic_report",
                variant: v,
            })
        }
    }
}
