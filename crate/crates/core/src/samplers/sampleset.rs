use crate::prob::ProbabilityVector;
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A multiset of outcome indices drawn from a finite space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleSet {
    n_outcomes: usize,
    samples: Vec<usize>,
}

impl SampleSet {
    pub fn new(n_outcomes: usize, samples: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = samples.iter().find(|&&s| s >= n_outcomes) {
            return Err(Error::InvalidInput(format!(
                "sample {bad} outside outcome space of size {n_outcomes}"
            )));
        }
        Ok(Self { n_outcomes, samples })
    }

    pub fn n_outcomes(&self) -> usize {
        self.n_outcomes
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[usize] {
        &self.samples
    }

    /// Occurrence count of every outcome (dense).
    pub fn counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n_outcomes];
        for &s in &self.samples {
            counts[s] += 1;
        }
        counts
    }

    /// Empirical frequency of outcome `x`.
    pub fn frequency(&self, x: usize) -> f64 {
        let c = self.samples.iter().filter(|&&s| s == x).count();
        c as f64 / self.samples.len() as f64
    }
}

/// Draw `count` iid samples from `probs` by inverting the cumulative
/// distribution with binary search.
pub fn inverse_cdf_sample(
    probs: &ProbabilityVector,
    count: usize,
    rng: &mut impl Rng,
) -> SampleSet {
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for &p in probs.iter() {
        acc += p;
        cdf.push(acc);
    }
    let total = acc;
    let samples = (0..count)
        .map(|_| {
            let u: f64 = rng.gen_range(0.0..total);
            match cdf.binary_search_by(|c| c.partial_cmp(&u).unwrap()) {
                Ok(i) | Err(i) => i.min(probs.len() - 1),
            }
        })
        .collect();
    SampleSet {
        n_outcomes: probs.len(),
        samples,
    }
}
