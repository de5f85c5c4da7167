//! Special functions and numerical utilities: digamma, both real branches of
//! the Lambert W function, the exponential integral E1, bracketed root
//! finding and adaptive quadrature.
//!
//! Everything here is a pure function of its inputs.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A root-finding bracket with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Domain(format!(
                "bracket endpoints must be finite with lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Digamma function ψ(x) for x > 0.
///
/// Uses the recurrence ψ(x) = ψ(x+1) − 1/x to lift the argument above 10,
/// then the asymptotic series in the Bernoulli numbers.  Absolute error is
/// below 1e-13 for x ≥ 1.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0;
    let mut x = x;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // ln x − 1/(2x) − Σ B_{2n}/(2n x^{2n})
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2
                                * (1.0 / 240.0
                                    - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    Ok(shift + x.ln() - 0.5 * inv - series)
}

/// Real branch selector for the Lambert W function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WBranch {
    /// W₀, defined on [−1/e, ∞), with W₀ ≥ −1.
    Principal,
    /// W₋₁, defined on [−1/e, 0), with W₋₁ ≤ −1.
    Lower,
}

/// Lambert W: solves w·e^w = z on the requested branch to ~1e-14 relative.
pub fn lambert_w(z: f64, branch: WBranch) -> Result<f64> {
    let min_z = -(-1.0f64).exp(); // −1/e
    match branch {
        WBranch::Principal if z < min_z => {
            return Err(Error::Domain(format!(
                "principal branch requires z >= -1/e, got {z}"
            )));
        }
        WBranch::Lower if !(z >= min_z && z < 0.0) => {
            return Err(Error::Domain(format!(
                "lower branch requires -1/e <= z < 0, got {z}"
            )));
        }
        _ => {}
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    // Distance from the branch point; both branches meet at w = −1 there.
    let q = 2.0 * (std::f64::consts::E * z + 1.0);
    if q <= 1e-14 {
        return Ok(-1.0);
    }

    let mut w = match branch {
        WBranch::Principal => {
            if z < -0.25 {
                // series around the branch point
                let p = q.sqrt();
                -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
            } else if z < 2.0 {
                let w0 = z / (1.0 + z);
                if w0 > -1.0 {
                    w0
                } else {
                    0.0
                }
            } else {
                let l = z.ln();
                l - l.ln()
            }
        }
        WBranch::Lower => {
            if z < -0.25 {
                let p = q.sqrt();
                -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p
            } else {
                // z → 0⁻: W₋₁(z) ≈ ln(−z) − ln(−ln(−z))
                let l1 = (-z).ln();
                let l2 = (-l1).ln();
                l1 - l2 + l2 / l1
            }
        }
    };

    // Halley iteration.
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        let mut next = w - step;
        // keep the iterate on its branch
        match branch {
            WBranch::Principal => {
                if next < -1.0 {
                    next = 0.5 * (w - 1.0);
                }
            }
            WBranch::Lower => {
                if next > -1.0 {
                    next = 0.5 * (w - 1.0);
                }
            }
        }
        if (next - w).abs() <= 1e-15 * next.abs().max(1e-300) {
            w = next;
            break;
        }
        w = next;
    }
    Ok(w)
}

/// Exponential integral E1(c) = ∫₁^∞ e^(−c·x)/x dx for c > 0.
///
/// Power series below 1, Lentz-style continued fraction at or above 1.
pub fn exp_integral_e1(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::Domain(format!(
            "exponential integral requires c > 0, got {c}"
        )));
    }
    if c < 1.0 {
        // E1(c) = −γ − ln c + Σ_{k≥1} (−1)^{k+1} c^k / (k·k!)
        let mut sum = 0.0;
        let mut term = 1.0; // c^k / k!
        for k in 1..200 {
            term *= -c / k as f64;
            let contrib = -term / k as f64;
            sum += contrib;
            if contrib.abs() < 1e-18 {
                break;
            }
        }
        Ok(-EULER_GAMMA - c.ln() + sum)
    } else {
        // E1(c) = e^(−c) / (c + 1/(1 + 1/(c + 2/(1 + 2/(c + …)))))
        let depth = (80.0 / c) as usize + 40;
        let mut t = 0.0;
        for k in (1..=depth).rev() {
            let kf = k as f64;
            t = kf / (kf / (c + t) + 1.0);
        }
        Ok((-c).exp() / (c + t))
    }
}

/// Bisection on a bracketed sign change; stops once the bracket width is at
/// most `tol` and returns the midpoint.
pub fn solve_root<F: Fn(f64) -> f64>(f: F, bracket: Bracket, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let max_iter = 200;
    for _ in 0..max_iter {
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // bracket collapsed to adjacent floats
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
    })
}

/// Adaptive Simpson quadrature of `f` over [lo, hi] to absolute error `tol`.
///
/// `hi` may be `f64::INFINITY`; the tail beyond max(lo, 1) is folded onto a
/// finite interval with the substitution x = 1/t, so `f` must decay faster
/// than 1/x² for the improper integral to converge.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !lo.is_finite() {
        return Err(Error::Domain(format!("lower limit must be finite, got {lo}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if hi.is_finite() {
        return adaptive_simpson(&f, lo, hi, tol);
    }
    if lo > 0.0 {
        let g = |t: f64| {
            if t == 0.0 {
                0.0
            } else {
                let v = f(1.0 / t) / (t * t);
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            }
        };
        return adaptive_simpson(&g, 0.0, 1.0 / lo, tol);
    }
    // lo ≤ 0: finite head plus transformed tail from 1.
    let head = adaptive_simpson(&f, lo, 1.0, 0.5 * tol)?;
    let tail = integrate(&f, 1.0, f64::INFINITY, 0.5 * tol)?;
    Ok(head + tail)
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if lo == hi {
        return Ok(0.0);
    }
    let mid = 0.5 * (lo + hi);
    let (flo, fm, fhi) = (f(lo), f(mid), f(hi));
    let whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    let mut calls = 0usize;
    let out = simpson_step(f, lo, hi, flo, fm, fhi, whole, tol, 60, &mut calls);
    if calls > 40_000_000 {
        return Err(Error::NonConvergence { iterations: calls });
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    flo: f64,
    fm: f64,
    fhi: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    calls: &mut usize,
) -> Result<f64> {
    let mid = 0.5 * (lo + hi);
    let lmid = 0.5 * (lo + mid);
    let rmid = 0.5 * (mid + hi);
    let flm = f(lmid);
    let frm = f(rmid);
    *calls += 2;
    let left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fm);
    let right = (hi - mid) / 6.0 * (fm + 4.0 * frm + fhi);
    let delta = left + right - whole;
    if depth == 0 {
        return Err(Error::NonConvergence { iterations: 60 });
    }
    if delta.abs() <= 15.0 * tol || (hi - lo) < 1e-14 {
        return Ok(left + right + delta / 15.0);
    }
    let a = simpson_step(f, lo, mid, flo, flm, fm, left, 0.5 * tol, depth - 1, calls)?;
    let b = simpson_step(f, mid, hi, fm, frm, fhi, right, 0.5 * tol, depth - 1, calls)?;
    Ok(a + b)
}
