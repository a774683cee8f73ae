use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension cap exceeded: requested {requested} qubits, cap is {cap}")]
    DimensionCap { requested: usize, cap: usize },

    #[error("malformed gate: {0}")]
    MalformedGate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("rejection envelope violated: no acceptance within {trials} trials")]
    EnvelopeViolation { trials: u64 },

    #[error("inconsistent marginal oracle at prefix {prefix:?}: parent {parent}, children sum {children}")]
    InconsistentMarginals {
        prefix: Vec<u8>,
        parent: f64,
        children: f64,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
