//! Stage-threshold policies for the relative-rank problems: the Lindley
//! minimum-expected-rank stages and the Gusein-Zade best-S-or-better
//! stage constants.

use crate::error::{Error, Result};
use crate::policy::Policy;
use crate::setting::{SettingSpec, Variant};

/// Limiting proportion of interviewed applicants as the acceptable rank
/// S → ∞ (Frank–Samuels 1980).
pub const GUSEIN_ZADE_LIMIT_FRACTION: f64 = 0.2834;

/// Target ranks with built-in stage constants.
pub const GUSEIN_ZADE_BUILTIN_S: [u32; 6] = [2, 3, 5, 10, 15, 25];

// Stage constants for the Gusein-Zade problem.  Quoted from the classical
// sources where published (S = 3 and the leading S = 10 / S = 25 entries;
// S = 2 from Gilbert–Mosteller §2d with the exact 2/3 second stage); the
// remaining entries solve the asymptotic rank-selection dynamic program,
// carried at the precision of the quoted constants.  Each vector reproduces
// the published asymptotic mean and median fractions for its S.
const GZ_S2: [f64; 2] = [0.346982, 0.666_666_666_666_666_7];
const GZ_S3: [f64; 3] = [0.3367, 0.5868, 0.7746];
const GZ_S5: [f64; 5] = [0.3255, 0.5116, 0.6477, 0.7607, 0.8633];
const GZ_S10: [f64; 10] = [
    0.312850, 0.436676, 0.528886, 0.605096, 0.671230, 0.730373, 0.784448, 0.834882, 0.883042,
    0.931167,
];
const GZ_S15: [f64; 15] = [
    0.3068, 0.4034, 0.4765, 0.5376, 0.5909, 0.6386, 0.6821, 0.7223, 0.7598, 0.7951, 0.8287,
    0.8608, 0.8919, 0.9226, 0.9540,
];
const GZ_S25: [f64; 25] = [
    0.3008, 0.3702, 0.4242, 0.4699, 0.5102, 0.5466, 0.5799, 0.6108, 0.6397, 0.6670, 0.6927,
    0.7172, 0.7407, 0.7631, 0.7847, 0.8055, 0.8256, 0.8451, 0.8640, 0.8825, 0.9006, 0.9184,
    0.9360, 0.9538, 0.9724,
];

/// Built-in stage constants for target rank `s`.
pub fn gusein_zade_stages(s: u32) -> Result<Vec<f64>> {
    match s {
        1 => Ok(vec![(-1.0f64).exp()]),
        2 => Ok(GZ_S2.to_vec()),
        3 => Ok(GZ_S3.to_vec()),
        5 => Ok(GZ_S5.to_vec()),
        10 => Ok(GZ_S10.to_vec()),
        15 => Ok(GZ_S15.to_vec()),
        25 => Ok(GZ_S25.to_vec()),
        other => Err(Error::UnsupportedStageCount { s: other }),
    }
}

/// V∞ = Π_{j≥1} (1 + 2/j)^(1/(j+1)) ≈ 3.869519, the limiting optimal
/// expected rank in the minimum-rank problem.
///
/// The log-product tail decays like 2/j, far too slowly for bare
/// truncation, so the sum is cut at J = 10⁵ and closed with its
/// Euler–Maclaurin tail 2/J − 3/J² + 41/(9J³).
pub fn lindley_v_infinity() -> f64 {
    const J: usize = 100_000;
    let mut log_prod = 0.0f64;
    let mut comp = 0.0f64;
    for j in 1..=J {
        let jf = j as f64;
        let term = (1.0 + 2.0 / jf).ln() / (jf + 1.0);
        let t = log_prod + term;
        comp += if log_prod.abs() >= term.abs() {
            (log_prod - t) + term
        } else {
            (term - t) + log_prod
        };
        log_prod = t;
    }
    let jf = J as f64;
    let tail = 2.0 / jf - 3.0 / (jf * jf) + 41.0 / (9.0 * jf * jf * jf);
    (log_prod + comp + tail).exp()
}

/// Lindley stage fractions c(1..max_stages):
/// c(x) = (1/V∞) · Π_{j=1}^{x−1} (1 + 2/j)^(1/(j+1)).
pub fn lindley_stages(max_stages: usize) -> Vec<f64> {
    let v = lindley_v_infinity();
    let mut out = Vec::with_capacity(max_stages);
    let mut partial = 0.0f64; // log of the partial product
    for x in 1..=max_stages {
        out.push((partial - v.ln()).exp());
        let jf = x as f64;
        partial += (1.0 + 2.0 / jf).ln() / (jf + 1.0);
    }
    out
}

/// Stage-threshold policy for the multi-stage rank settings.
pub fn stage_thresholds(setting: &SettingSpec, max_stages: usize) -> Result<Policy> {
    match setting.variant {
        Variant::Lindley => {
            if max_stages == 0 {
                return Err(Error::InvalidParameter("max_stages must be >= 1".into()));
            }
            Policy::stage_thresholds(lindley_stages(max_stages))
        }
        Variant::GuseinZade => {
            let s = setting.require_s()?;
            Policy::stage_thresholds(gusein_zade_stages(s)?)
        }
        v => Err(Error::UnsupportedVariant {
            operation: "stage_thresholds",
            variant: v,
        }),
    }
}
