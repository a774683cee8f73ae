//! Generic classical sampling algorithms: rejection sampling, bitwise
//! marginal sampling, and Metropolis chains. These are used standalone and
//! as the substrate of the world-line Monte Carlo estimators.

mod marginal;
mod metropolis;
mod rejection;
mod sampleset;

pub use marginal::{marginal_sample, ExactDistribution, MarginalOracle};
pub use metropolis::{acceptance_probability, metropolis_chain, BitFlipProposal, MarkovProposal, UniformProposal};
pub use rejection::{rejection_sample, rejection_sample_with_stats, DiscreteDistribution, TableDistribution};
pub use sampleset::{inverse_cdf_sample, SampleSet};
