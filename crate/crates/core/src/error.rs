use std::fmt;

use crate::setting::Variant;

/// Errors surfaced by policy, distribution and simulation computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    Domain(String),
    /// A bracketing root solve was handed endpoints with the same sign.
    NoSignChange { lo: f64, hi: f64 },
    /// An iteration failed to reach its tolerance within the step budget.
    NonConvergence { iterations: usize },
    /// The setting does not support the requested operation.
    UnsupportedVariant {
        operation: &'static str,
        variant: Variant,
    },
    /// No built-in stage constants for this target rank.
    UnsupportedStageCount { s: u32 },
    /// The supplied policy does not fit the operation or setting.
    PolicyMismatch { operation: &'static str },
    /// Exact mode refused: the computation is quadratic in the pool size.
    ExactModeUnavailable { n: u64, cap: u64 },
    /// The setting is missing a parameter its variant requires.
    MissingParameter {
        variant: Variant,
        parameter: &'static str,
    },
    /// A parameter is present but invalid (or not accepted by the variant).
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(what) => write!(f, "domain error: {what}"),
            Self::NoSignChange { lo, hi } => {
                write!(f, "no sign change over [{lo}, {hi}]")
            }
            Self::NonConvergence { iterations } => {
                write!(f, "did not converge within {iterations} iterations")
            }
            Self::UnsupportedVariant { operation, variant } => {
                write!(f, "{operation} does not support the {variant} setting")
            }
            Self::UnsupportedStageCount { s } => {
                write!(
                    f,
                    "no built-in stage constants for target rank {s}; supply a custom stage vector"
                )
            }
            Self::PolicyMismatch { operation } => {
                write!(f, "policy kind does not match {operation}")
            }
            Self::ExactModeUnavailable { n, cap } => {
                write!(
                    f,
                    "exact mode unavailable for n = {n} (cap {cap}); use the asymptotic report"
                )
            }
            Self::MissingParameter { variant, parameter } => {
                write!(f, "the {variant} setting requires --{parameter}")
            }
            Self::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
