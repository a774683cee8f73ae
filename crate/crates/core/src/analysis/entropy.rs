use crate::prob::ProbabilityVector;

/// Order-α Rényi entropy in bits, `H_α = (α/(1-α))·log₂‖P‖_{ℓα}`
/// (equivalently `(1/(1-α))·log₂ Σ pᵅ`). `α = 0` counts the support;
/// an infinite `α` is the min-entropy sentinel.
pub fn renyi_entropy(probs: &ProbabilityVector, alpha: f64) -> f64 {
    assert!(alpha >= 0.0, "Rényi order must be nonnegative");
    assert!(alpha != 1.0, "order 1 is the Shannon limit, not defined here");
    if alpha.is_infinite() {
        return min_entropy(probs);
    }
    if alpha == 0.0 {
        let support = probs.iter().filter(|&&p| p > 0.0).count();
        return (support as f64).log2();
    }
    let sum: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p.powf(alpha))
        .sum();
    sum.log2() / (1.0 - alpha)
}

/// Min-entropy `H∞ = -log₂ max_x p(x)` in bits.
pub fn min_entropy(probs: &ProbabilityVector) -> f64 {
    -probs.max_prob().log2()
}

/// High-probability min-entropy bound from an ensemble second moment: with
/// probability `1-δ` over the unitary draw,
/// `H∞ ≥ ½·(log₂ δ − log₂ Σ_S E[P(S)²])`.
pub fn second_moment_min_entropy_bound(second_moment_sum: f64, delta: f64) -> f64 {
    assert!(second_moment_sum > 0.0 && delta > 0.0);
    0.5 * (delta.log2() - second_moment_sum.log2())
}
