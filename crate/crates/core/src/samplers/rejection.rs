use crate::error::{Error, Result};
use crate::prob::ProbabilityVector;
use rand::Rng;

/// A distribution accessible through a probability oracle, together with a
/// way to draw from it (required when used as a proposal).
pub trait DiscreteDistribution {
    fn outcome_count(&self) -> usize;
    fn prob(&self, x: usize) -> f64;
    fn draw(&self, rng: &mut dyn rand::RngCore) -> usize;
}

/// Table-backed distribution with alias-free CDF inversion.
#[derive(Debug, Clone)]
pub struct TableDistribution {
    probs: Vec<f64>,
    cdf: Vec<f64>,
}

impl TableDistribution {
    pub fn new(probs: &ProbabilityVector) -> Self {
        let probs: Vec<f64> = probs.as_slice().to_vec();
        let mut cdf = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for &p in &probs {
            acc += p;
            cdf.push(acc);
        }
        Self { probs, cdf }
    }
}

impl DiscreteDistribution for TableDistribution {
    fn outcome_count(&self) -> usize {
        self.probs.len()
    }
    fn prob(&self, x: usize) -> f64 {
        self.probs[x]
    }
    fn draw(&self, rng: &mut dyn rand::RngCore) -> usize {
        let total = *self.cdf.last().unwrap();
        let u: f64 = rand::Rng::gen_range(rng, 0.0..total);
        match self.cdf.binary_search_by(|c| c.partial_cmp(&u).unwrap()) {
            Ok(i) | Err(i) => i.min(self.probs.len() - 1),
        }
    }
}

const DEFAULT_TRIAL_FACTOR: f64 = 1e6;
/// Number of envelope spot checks performed before sampling.
const SPOT_CHECKS: usize = 1024;

/// Rejection sampling: draw `x ~ q` and `u` uniform, accept when
/// `u·c·q(x) ≤ p(x)`. The envelope `p ≤ c·q` is the caller's obligation;
/// it is spot-checked on a deterministic stride over the support. Expected
/// trial count is `c`; exceeding `10⁶·c` trials raises an envelope error.
pub fn rejection_sample(
    target: &dyn DiscreteDistribution,
    proposal: &dyn DiscreteDistribution,
    c: f64,
    rng: &mut impl Rng,
) -> Result<usize> {
    rejection_sample_with_stats(target, proposal, c, rng).map(|(x, _)| x)
}

/// As [`rejection_sample`], also returning the number of trials used.
pub fn rejection_sample_with_stats(
    target: &dyn DiscreteDistribution,
    proposal: &dyn DiscreteDistribution,
    c: f64,
    rng: &mut impl Rng,
) -> Result<(usize, u64)> {
    if c < 1.0 {
        return Err(Error::InvalidInput("rejection constant must be ≥ 1".into()));
    }
    let n = target.outcome_count();
    if proposal.outcome_count() != n {
        return Err(Error::InvalidInput("target/proposal space mismatch".into()));
    }
    let stride = (n / SPOT_CHECKS).max(1);
    let mut x = 0usize;
    while x < n {
        if target.prob(x) > c * proposal.prob(x) + 1e-12 {
            return Err(Error::InvalidInput(format!(
                "envelope violated at outcome {x}: p={} > c·q={}",
                target.prob(x),
                c * proposal.prob(x)
            )));
        }
        x += stride;
    }
    let cap = (DEFAULT_TRIAL_FACTOR * c).ceil() as u64;
    let mut trials = 0u64;
    loop {
        trials += 1;
        if trials > cap {
            return Err(Error::EnvelopeViolation { trials });
        }
        let x = proposal.draw(rng);
        let u: f64 = rng.gen_range(0.0..1.0);
        if u * c * proposal.prob(x) <= target.prob(x) {
            return Ok((x, trials));
        }
    }
}
