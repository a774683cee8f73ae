//! Statistics of output distributions: Porter-Thomas comparisons,
//! anticoncentration fractions, Rényi entropies, and the ℓ₂/₃-quasinorm
//! machinery that governs the sample complexity of identity testing.
//!
//! Logarithms are base 2 throughout unless a function explicitly says
//! otherwise.

mod entropy;
mod porter_thomas;
mod tradeoff;
mod truncate;
mod tv;

pub use entropy::{min_entropy, renyi_entropy, second_moment_min_entropy_bound};
pub use porter_thomas::{
    porter_thomas_pdf, porter_thomas_pdf_asymptotic, pt_count_quantile_boundaries,
    pt_exact_discretization, random_pt_vector,
};
pub use tradeoff::supremacy_tradeoff;
pub use truncate::{l23_quasinorm, truncate, vv_sample_bounds, TruncatedVector};
pub use tv::{anticonc_fraction, tv_distance, tv_to_porter_thomas};
