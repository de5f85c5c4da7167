//! Optimal stopping policies and search-duration distributions for
//! secretary-type sequential selection problems.
//!
//! The crate covers the classical catalogue — the best-choice (secretary /
//! dowry) problem and its uncertain-acceptance, random-pool, second-best and
//! duration variants on relative-rank information; the full-information
//! settings of Moser and Gilbert–Mosteller; the multi-stage rank problems of
//! Gusein-Zade and Lindley; and the unbounded house-selling search.  For
//! each setting it computes the optimal stopping policy, the exact
//! finite-pool distribution of the number of interviews T where one exists,
//! the asymptotic mean/median fractions otherwise, and provides seeded
//! Monte Carlo simulation plus exhaustive small-pool enumeration as
//! independent checks.
//!
//! Modules:
//! - [`specfun`]: digamma, Lambert W, exponential integral, root finding,
//!   quadrature.
//! - [`policies`]: optimal thresholds, value cutoffs, stage constants.
//! - [`duration`]: exact PMFs of T, summary statistics, asymptotic reports.
//! - [`montecarlo`]: seeded simulation and exhaustive enumeration oracles.
//! - [`report`] / [`tables`]: CSV/JSON output records and the reference
//!   tables reproduced by the CLI.

pub mod duration;
mod error;
pub mod montecarlo;
pub mod policies;
mod policy;
pub mod report;
mod setting;
pub mod specfun;
pub mod tables;

pub use error::{Error, Result};
pub use policy::Policy;
pub use setting::{SettingSpec, Variant};
