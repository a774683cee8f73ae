//! # qrsw-core
//!
//! A desk-scale numerical workbench for quantum random sampling schemes and
//! the classical machinery that surrounds them:
//!
//! - **[`qc`]** — exact statevector simulation of the relevant circuit
//!   families (IQP circuits, cluster-state schemes, random universal
//!   circuits, small boson samplers) and Haar-random matrix generation.
//! - **[`samplers`]** — generic classical sampling algorithms (rejection,
//!   marginal, Metropolis) used standalone and as Monte Carlo substrates.
//! - **[`analysis`]** — statistics of output distributions: Porter-Thomas
//!   comparisons, anticoncentration fractions, Rényi/min-entropies and the
//!   ℓ₂/₃-quasinorm sample-complexity machinery.
//! - **[`verify`]** — classical verification statistics: instance-optimal
//!   identity testing, cross-entropy measures, XEB, HOG, BOG, row-norm
//!   discrimination and X-program biases.
//! - **[`certify`]** — measurement-device-dependent certification: parent
//!   Hamiltonians, fidelity witnesses, rapid stabilizer fidelity estimation
//!   and single-copy pass/fail state certification.
//! - **[`qmc`]** — world-line quantum Monte Carlo with sign tracking, exact
//!   average-sign oracles and nonstoquasticity measures.
//! - **[`easing`]** — Riemannian conjugate-gradient minimization of
//!   nonstoquasticity over on-site orthogonal bases, and the MAXCUT
//!   encoding of the sign-easing problem with brute-force verification.
//!
//! Everything is exact at small scale: statevectors up to ~24 qubits,
//! dense spectral oracles up to dimension 2¹². All randomized operations
//! take an explicit [`rng::SplitRng`]; there is no global RNG state.

pub mod analysis;
pub mod certify;
pub mod easing;
pub mod error;
pub mod prob;
pub mod qc;
pub mod qmc;
pub mod rng;
pub mod samplers;
pub mod verify;

pub use error::{Error, Result};
pub use prob::ProbabilityVector;
pub use rng::SplitRng;
