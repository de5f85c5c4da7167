//! Optimal-policy computation for every supported setting: integer
//! thresholds, per-position value cutoffs, multi-stage fraction vectors,
//! reservation values and asymptotic threshold fractions.

mod cutoffs;
mod stages;
mod thresholds;

pub use cutoffs::{
    decaying_cutoffs, decaying_values, fi_best_choice_duration_cutoffs, fi_duration_cutoffs,
    gm_best_choice_cutoffs, gm_cutoffs, gm_decision_values, moser_cutoffs, moser_values,
    FI_BEST_CHOICE_DURATION_C, FI_DURATION_C, GM_BEST_CHOICE_C, GM_DEFAULT_EXACT_M,
};
pub use stages::{
    gusein_zade_stages, lindley_stages, lindley_v_infinity, stage_thresholds,
    GUSEIN_ZADE_BUILTIN_S, GUSEIN_ZADE_LIMIT_FRACTION,
};
pub use thresholds::{asymptotic_threshold, objective_value, reservation_value, single_threshold};
