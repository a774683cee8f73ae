use crate::error::{Error, Result};
use crate::prob::ProbabilityVector;
use rand::Rng;

const CONSISTENCY_TOL: f64 = 1e-9;

/// Oracle for prefix marginals `P_k(x₁…x_k)` of a distribution on `n`-bit
/// strings. `marginal(&[])` must be 1.
pub trait MarginalOracle {
    fn n_bits(&self) -> usize;
    /// Probability that the first `prefix.len()` bits equal `prefix`.
    fn marginal(&self, prefix: &[u8]) -> f64;
}

/// Dense distribution over bitstrings with marginals computed by summation.
/// Bit 0 of the outcome index is the first bit sampled.
#[derive(Debug, Clone)]
pub struct ExactDistribution {
    n_bits: usize,
    probs: Vec<f64>,
}

impl ExactDistribution {
    pub fn new(n_bits: usize, probs: &ProbabilityVector) -> Result<Self> {
        if probs.len() != 1 << n_bits {
            return Err(Error::InvalidInput(format!(
                "distribution over {} outcomes is not {n_bits} bits",
                probs.len()
            )));
        }
        Ok(Self {
            n_bits,
            probs: probs.as_slice().to_vec(),
        })
    }
}

impl MarginalOracle for ExactDistribution {
    fn n_bits(&self) -> usize {
        self.n_bits
    }

    fn marginal(&self, prefix: &[u8]) -> f64 {
        let k = prefix.len();
        let mut fixed = 0usize;
        for (i, &b) in prefix.iter().enumerate() {
            fixed |= (b as usize) << i;
        }
        let mut total = 0.0;
        for suffix in 0..(1usize << (self.n_bits - k)) {
            total += self.probs[fixed | (suffix << k)];
        }
        total
    }
}

/// Sample an `n`-bit string bit by bit from conditional marginals
/// `P(x_k | x₁…x_{k-1}) = P_k(x₁…x_k)/P_{k-1}(x₁…x_{k-1})`. The telescoping
/// product makes the output exactly distributed as the full distribution.
/// Visited marginals are checked for summation consistency.
pub fn marginal_sample(oracle: &dyn MarginalOracle, rng: &mut impl Rng) -> Result<Vec<u8>> {
    let n = oracle.n_bits();
    let mut prefix: Vec<u8> = Vec::with_capacity(n);
    let mut parent = 1.0f64;
    for _ in 0..n {
        prefix.push(0);
        let p0 = oracle.marginal(&prefix);
        *prefix.last_mut().unwrap() = 1;
        let p1 = oracle.marginal(&prefix);
        if (p0 + p1 - parent).abs() > CONSISTENCY_TOL * parent.max(1.0) {
            prefix.pop();
            return Err(Error::InconsistentMarginals {
                prefix,
                parent,
                children: p0 + p1,
            });
        }
        if parent <= 0.0 {
            prefix.pop();
            return Err(Error::InconsistentMarginals {
                prefix,
                parent,
                children: p0 + p1,
            });
        }
        let bias = p1 / parent;
        let bit = if rng.gen_range(0.0..1.0) < bias { 1 } else { 0 };
        *prefix.last_mut().unwrap() = bit;
        parent = if bit == 1 { p1 } else { p0 };
    }
    Ok(prefix)
}

/// Convert a sampled bitstring (bit 0 first) to its outcome index.
pub fn bits_to_index(bits: &[u8]) -> usize {
    bits.iter()
        .enumerate()
        .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i))
}
