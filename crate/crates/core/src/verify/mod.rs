//! Classical verification statistics for sampling devices: the
//! instance-optimal identity test, cross-entropy measures (XEB and the
//! cross-entropy difference), heavy-outcome and binned-outcome scores,
//! the row-norm discriminator for boson samplers, and hidden-bias checks
//! for X-programs.

mod bog;
mod hog;
mod identity;
mod rownorm;
mod xeb;
mod xprogram;

pub use bog::{bog_distance, bog_distance_exact, pt_sample_quantile_boundaries};
pub use hog::{hog_check, hog_fidelity, hog_fidelity_exact, lower_median, HEAVY_SET_SCORE};
pub use identity::{chi23_statistic, vv_identity_test, IdentityTestConfig, VerificationVerdict};
pub use rownorm::{row_norm, row_norm_discriminator, ROW_NORM_THRESHOLD};
pub use xeb::{
    ce_difference, ce_difference_exact, ce_samples_required, depolarization_estimate,
    xeb_circuits_required, xeb_fidelity, xeb_fidelity_exact, xeb_moment_sum,
};
pub use xprogram::{xprogram_bias, XProgram, XProgramBias};
