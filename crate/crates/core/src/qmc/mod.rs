//! World-line quantum Monte Carlo with sign tracking: the transfer-matrix
//! expansion of `e^{-βH}`, exact and sampled average signs, thermal
//! expectation values of diagonal observables, and the nonstoquasticity
//! measures that quantify the sign problem.

mod hamiltonian;
mod nonstoq;
mod sign;
mod transfer;

pub use hamiltonian::{
    embed_one_site, embed_two_site, example_10_1, h_alpha, periodic_chain,
    random_translation_invariant_qubit_chain, RealHamiltonian, TwoLocalSpec,
};
pub use nonstoq::{nonstoq, nu1_xz_exact, nu1_xz_mc, nu1_xz_sample_count, nu1_two_local_closed};
pub use sign::{
    average_sign_exact, average_sign_mc, sample_requirement, spectral_gap, thermal_expectation_exact,
    thermal_expectation_mc, thermal_expectation_trotter, trace_power, SignChainConfig,
};
pub use transfer::{example_10_2, path_amplitude, TransferMatrix};
