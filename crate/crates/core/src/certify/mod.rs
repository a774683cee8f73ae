//! Measurement-device-dependent certification of prepared states: parent
//! Hamiltonians with known ground energy and gap, the energy-based fidelity
//! witness, rapid fidelity estimation by stabilizer-group importance
//! sampling, and single-copy pass/fail certification strategies.

mod density;
mod parent;
mod pauli;
mod plm;
mod stabilizer;
mod witness;

pub use density::DensityOperator;
pub use parent::{beta_parent, cluster_parent, iqp_parent, LocalHamiltonian};
pub use pauli::{kron2, PauliProduct, SiteFactor};
pub use plm::{generator_strategy, plm_test, projective_strategy, PlmReport, Strategy};
pub use stabilizer::{
    rapid_fidelity, rapid_sample_count, stabilizer_element, stabilizer_group_projector,
    stabilizer_sample, RapidFidelityReport,
};
pub use witness::{
    fidelity_bounds, witness_gap, witness_sample_count, witness_test, MeasurementSampler,
    NoisyPreparation, WitnessReport,
};

/// Threshold fidelity from a total-variation budget: a state within trace
/// distance `ε` of the target has fidelity at least `1 - ε²`, so certifying
/// `F ≥ F_T = 1 - ε²` certifies the sampling budget.
pub fn threshold_fidelity(eps_tv: f64) -> f64 {
    assert!(eps_tv > 0.0 && eps_tv <= 1.0);
    1.0 - eps_tv * eps_tv
}
