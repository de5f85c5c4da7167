//! Per-position value cutoffs for the full-information settings.

use crate::policy::Policy;

/// Decision-value constant for the full-information best-choice problem,
/// the root of Σ_j c^j/(j!·j) = 1.
pub const GM_BEST_CHOICE_C: f64 = 0.804352;
/// Decision-value constant for the full-information duration problem.
pub const FI_DURATION_C: f64 = 2.1198;
/// Decision-value constant for the full-information best-choice duration
/// problem, the root of e^c = 1 + 2c.
pub const FI_BEST_CHOICE_DURATION_C: f64 = 1.25643;

/// Default cap on the number of exact decision-value root solves.
pub const GM_DEFAULT_EXACT_M: u64 = 10_000;

/// Moser decision values A_m for m = 0..n−1: A_0 = 0, A_{m+1} = (A_m² + 1)/2.
///
/// A_m is the acceptance cutoff when m applicants remain.
pub fn moser_values(n: u64) -> Vec<f64> {
    let n = n as usize;
    let mut a = Vec::with_capacity(n);
    a.push(0.0);
    let mut v = 0.0f64;
    for _ in 1..n {
        v = (v * v + 1.0) / 2.0;
        a.push(v);
    }
    a
}

/// Cutoff policy for the Moser setting: position i uses A_{n−i}.
pub fn moser_cutoffs(n: u64) -> Policy {
    let values = moser_values(n);
    let cutoffs = values.into_iter().rev().collect();
    Policy::ValueCutoffs {
        cutoffs,
        candidate_only: false,
    }
}

/// Decaying-pool decision values B_m: B_0 = 0, B_m = (m + B²_{m−1}/m)/2.
///
/// The observation with m applicants remaining is uniform on [0, m+1] and
/// is accepted when it exceeds B_m.
pub fn decaying_values(n: u64) -> Vec<f64> {
    let n = n as usize;
    let mut b = Vec::with_capacity(n);
    b.push(0.0);
    let mut v = 0.0f64;
    for m in 1..n {
        let mf = m as f64;
        v = 0.5 * (mf + v * v / mf);
        b.push(v);
    }
    b
}

/// Cutoff policy for the decaying-pool setting: position i is rejected
/// with probability B_{n−i}/(n+1−i).
pub fn decaying_cutoffs(n: u64) -> Policy {
    let values = decaying_values(n);
    let cutoffs = (1..=n)
        .map(|i| {
            let m = (n - i) as usize;
            values[m] / (n + 1 - i) as f64
        })
        .collect();
    Policy::ValueCutoffs {
        cutoffs,
        candidate_only: false,
    }
}

/// Exact Gilbert–Mosteller decision values A_m for m = 0..=m_max, where A_m
/// solves Σ_{j=1}^{m} (A^{−j} − 1)/j = 1.
///
/// Newton iterations warm-started from the previous value; the residual of
/// the defining equation stays below 1e-12.
pub fn gm_decision_values(m_max: u64) -> Vec<f64> {
    let m_max = m_max as usize;
    let mut out = Vec::with_capacity(m_max + 1);
    out.push(0.0);
    if m_max == 0 {
        return out;
    }
    out.push(0.5);
    let mut a = 0.5f64;
    for m in 2..=m_max {
        for _ in 0..60 {
            let inv = 1.0 / a;
            let mut f = -1.0;
            let mut fp = 0.0;
            let mut t = 1.0;
            for j in 1..=m {
                t *= inv;
                f += (t - 1.0) / j as f64;
                fp += t;
            }
            fp *= -inv;
            let next = a - f / fp;
            // the root lies strictly between the previous value and 1
            let next = next.clamp(a, 1.0 - 1e-16);
            if (next - a).abs() <= 1e-16 {
                a = next;
                break;
            }
            a = next;
        }
        out.push(a);
    }
    out
}

/// First-order decision value m/(m + c) when m applicants remain.
fn asymptotic_value(m: u64, c_const: f64) -> f64 {
    if m == 0 {
        0.0
    } else {
        let mf = m as f64;
        mf / (mf + c_const)
    }
}

/// Candidate-only cutoff policy for the Gilbert–Mosteller family.
///
/// Positions with at most `m_exact` applicants remaining use the exact
/// decision values (only meaningful for the best-choice constant); the rest
/// use the first-order form 1/(1 + c/m).  `m_exact = 0` selects the
/// first-order form everywhere.
pub fn gm_cutoffs(n: u64, c_const: f64, m_exact: u64) -> Policy {
    let exact = if m_exact > 0 {
        gm_decision_values(m_exact.min(n.saturating_sub(1)))
    } else {
        vec![0.0]
    };
    let cutoffs = (1..=n)
        .map(|i| {
            let m = n - i;
            if m <= m_exact && (m as usize) < exact.len() {
                exact[m as usize]
            } else {
                asymptotic_value(m, c_const)
            }
        })
        .collect();
    Policy::ValueCutoffs {
        cutoffs,
        candidate_only: true,
    }
}

/// Best-choice cutoffs with the default exact cap.
pub fn gm_best_choice_cutoffs(n: u64) -> Policy {
    gm_cutoffs(n, GM_BEST_CHOICE_C, GM_DEFAULT_EXACT_M)
}

/// Full-information duration cutoffs (first-order values throughout).
pub fn fi_duration_cutoffs(n: u64) -> Policy {
    gm_cutoffs(n, FI_DURATION_C, 0)
}

/// Full-information best-choice duration cutoffs (first-order values).
pub fn fi_best_choice_duration_cutoffs(n: u64) -> Policy {
    gm_cutoffs(n, FI_BEST_CHOICE_DURATION_C, 0)
}
