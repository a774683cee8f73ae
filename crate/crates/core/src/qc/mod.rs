//! Exact simulation of the circuit families used throughout the workbench
//! and random-matrix generation.
//!
//! Qubit ordering is little-endian: qubit 0 is the least-significant bit of
//! an outcome index. Global phases are never normalized away; comparisons in
//! tests are made on probabilities or moduli unless a fixture pins the phase.

mod boson;
mod circuit;
mod cluster;
mod gate;
mod haar;
mod iontrap;
mod iqp;
mod state;

pub use boson::{boson_probability, occupation_sequences, permanent, PERMANENT_CAP};
pub use circuit::Circuit;
pub use cluster::{cluster_circuit, logical_circuit, random_logical_betas, ClusterScheme, LOGICAL_ANGLE_SET};
pub use gate::Gate;
pub use haar::{haar_orthogonal, haar_unitary, random_parallel_circuit};
pub use iontrap::{iontrap_angle_set, iontrap_weights, iontrap_weights_restricted, prescription_weights};
pub use iqp::{ising_partition_function, iqp_circuit, ngap, polynomial_circuit, DegreeThreePolynomial, IQPWeights};
pub use state::{born_distribution, simulate, simulate_with_cap, StateVector, DEFAULT_QUBIT_CAP};
