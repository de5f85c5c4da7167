//! Exact finite-pool distributions of the search duration T, their summary
//! statistics, and the asymptotic mean/median fractions for every setting.

mod asymptotic;
mod cutoff;
mod distribution;
mod gm;
mod house;
mod multistage;
mod noinfo;

pub use asymptotic::{
    asymptotic_report, gm_mean_fraction, gm_median_fraction, gm_no_choice_fraction,
    AsymptoticReport,
};
pub use cutoff::{cutoff_pmf, cutoff_stats};
pub use distribution::{DurationDistribution, SummaryStats};
pub use gm::{gm_pmf, gm_pmf_with_cap, GM_EXACT_MODE_CAP};
pub use house::house_selling_stats;
pub use multistage::{
    lindley_asymptotic_mean, lindley_series_partial, lindley_series_tail_bound, multi_stage_cdf,
    multi_stage_mean, multi_stage_quantile,
};
pub use noinfo::{
    asymptotic_fraction_single, inverse_threshold_for_mean, no_info_mean, no_info_pmf,
    no_info_quantile,
};
