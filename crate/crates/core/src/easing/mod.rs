//! Easing the Monte Carlo sign problem by on-site basis rotations:
//! the effective local nonstoquasticity of translation-invariant chains,
//! its smoothed objective and gradient, Riemannian conjugate-gradient
//! minimization over the orthogonal group, benchmark model builders, and
//! the MAXCUT encoding that pins down the hardness of the optimization,
//! with brute-force verification at small sizes.

mod cg;
mod gadget;
mod gradient;
mod local_term;
mod models;
mod sign_easing;

pub use cg::{cg_minimize, hybrid_minimize, Init, MinimizeResult, OptimizerConfig};
pub use gadget::{
    brute_force_clifford_optimum, clifford_conjugate, max_cut, maxcut_gadget, xz_lower_bound,
    BruteForceMode, CliffordConfig, GadgetInstance, GadgetMode, Graph,
};
pub use gradient::objective_gradient;
pub use local_term::{conjugate_local, effective_nu1, smooth_objective, LocalTerm};
pub use models::{heisenberg_dot, hidden_stoquastic, jmodel_term, ladder_term, SpinConvention};
pub use sign_easing::sign_after_easing;
