use rand::Rng;

/// A Markov proposal kernel: a way to propose a move and its density
/// `q(to | from)`. Densities only enter through ratios, so any common
/// normalization cancels.
pub trait MarkovProposal<X> {
    fn propose(&self, from: &X, rng: &mut dyn rand::RngCore) -> X;
    fn density(&self, to: &X, from: &X) -> f64;
}

/// Uniform independent proposal on `0..n` (symmetric).
#[derive(Debug, Clone)]
pub struct UniformProposal {
    pub n: usize,
}

impl MarkovProposal<usize> for UniformProposal {
    fn propose(&self, _from: &usize, rng: &mut dyn rand::RngCore) -> usize {
        rand::Rng::gen_range(rng, 0..self.n)
    }
    fn density(&self, _to: &usize, _from: &usize) -> f64 {
        1.0 / self.n as f64
    }
}

/// Single uniformly-chosen bit flip on `n_bits`-bit states (symmetric).
#[derive(Debug, Clone)]
pub struct BitFlipProposal {
    pub n_bits: usize,
}

impl MarkovProposal<usize> for BitFlipProposal {
    fn propose(&self, from: &usize, rng: &mut dyn rand::RngCore) -> usize {
        let b = rand::Rng::gen_range(rng, 0..self.n_bits);
        from ^ (1 << b)
    }
    fn density(&self, to: &usize, from: &usize) -> f64 {
        if (to ^ from).count_ones() == 1 {
            1.0 / self.n_bits as f64
        } else {
            0.0
        }
    }
}

/// Exposed for unit tests: the Metropolis acceptance probability
/// `min{ f(x')q(x|x') / (f(x)q(x'|x)), 1 }`.
pub fn acceptance_probability(
    f_from: f64,
    f_to: f64,
    q_forward: f64,
    q_backward: f64,
) -> f64 {
    ((f_to * q_backward) / (f_from * q_forward)).min(1.0)
}

/// Run a Metropolis chain with stationary density proportional to `weight`.
/// Only weight ratios are evaluated. Rejected moves repeat the current state
/// in the record. The first `burn_in` states are discarded (`None` defaults
/// to a tenth of the chain length); the returned record has `chain_length`
/// entries.
pub fn metropolis_chain<X: Clone>(
    weight: impl Fn(&X) -> f64,
    proposal: &dyn MarkovProposal<X>,
    x0: X,
    chain_length: usize,
    burn_in: Option<usize>,
    rng: &mut impl Rng,
) -> Vec<X> {
    let burn = burn_in.unwrap_or(chain_length / 10);
    let mut x = x0;
    let mut fx = weight(&x);
    assert!(fx > 0.0, "initial state must have positive weight");
    let mut record = Vec::with_capacity(chain_length);
    for step in 0..burn + chain_length {
        let candidate = proposal.propose(&x, rng);
        let f_new = weight(&candidate);
        let accept = if f_new <= 0.0 {
            0.0
        } else {
            acceptance_probability(
                fx,
                f_new,
                proposal.density(&candidate, &x),
                proposal.density(&x, &candidate),
            )
        };
        if rng.gen_range(0.0..1.0) <= accept {
            x = candidate;
            fx = f_new;
        }
        if step >= burn {
            record.push(x.clone());
        }
    }
    record
}
