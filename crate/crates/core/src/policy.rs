//! Stopping policies: the rule shapes that solve the supported settings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A stopping rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Policy {
    /// Skip an initial sample, then accept the next eligible candidate.
    ///
    /// `c` is the classical threshold value; `first_eligible` is the first
    /// position at which stopping is allowed (equal to `c` when the rule
    /// skips `c − 1` applicants, `c + 1` when it samples the first `c`).
    SingleThreshold { c: u64, first_eligible: u64 },
    /// Ascending fractions c_1 < c_2 < …; once a fraction c_d of the pool
    /// has passed, applicants of relative rank ≤ d are acceptable.
    StageThresholds { fractions: Vec<f64> },
    /// Per-position acceptance cutoffs on the observed value, indexed by
    /// interview position 1..N.  The stored number is the probability that
    /// the position is *rejected* (observation below its cutoff).
    ///
    /// `candidate_only = true` restricts acceptance to relatively best
    /// observations (the Gilbert–Mosteller family).
    ValueCutoffs {
        cutoffs: Vec<f64>,
        candidate_only: bool,
    },
    /// Time-invariant acceptance cutoff for an unbounded search.
    /// `degenerate` marks the take-the-first-offer regime.
    ReservationValue { gamma: f64, degenerate: bool },
}

impl Policy {
    pub fn single_threshold(c: u64, first_eligible: u64) -> Self {
        Policy::SingleThreshold { c, first_eligible }
    }

    /// Validate a stage vector: strictly increasing fractions in (0, 1].
    pub fn stage_thresholds(fractions: Vec<f64>) -> Result<Self> {
        if fractions.is_empty() {
            return Err(Error::InvalidParameter("empty stage vector".into()));
        }
        let mut prev = 0.0;
        for &c in &fractions {
            if !(c > prev && c <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "stage thresholds must be strictly increasing in (0, 1], got {fractions:?}"
                )));
            }
            prev = c;
        }
        Ok(Policy::StageThresholds { fractions })
    }

    pub fn value_cutoffs(cutoffs: Vec<f64>, candidate_only: bool) -> Result<Self> {
        if cutoffs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(Error::InvalidParameter(
                "value cutoffs must lie in [0, 1]".into(),
            ));
        }
        Ok(Policy::ValueCutoffs {
            cutoffs,
            candidate_only,
        })
    }

    pub fn as_single_threshold(&self) -> Result<(u64, u64)> {
        match self {
            Policy::SingleThreshold { c, first_eligible } => Ok((*c, *first_eligible)),
            _ => Err(Error::PolicyMismatch {
                operation: "single-threshold operation",
            }),
        }
    }

    pub fn as_stages(&self) -> Result<&[f64]> {
        match self {
            Policy::StageThresholds { fractions } => Ok(fractions),
            _ => Err(Error::PolicyMismatch {
                operation: "stage-threshold operation",
            }),
        }
    }

    pub fn as_cutoffs(&self) -> Result<(&[f64], bool)> {
        match self {
            Policy::ValueCutoffs {
                cutoffs,
                candidate_only,
            } => Ok((cutoffs, *candidate_only)),
            _ => Err(Error::PolicyMismatch {
                operation: "value-cutoff operation",
            }),
        }
    }
}
