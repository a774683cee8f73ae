use crate::analysis::pt_count_quantile_boundaries;
use crate::prob::ProbabilityVector;

/// Total-variation distance `½‖p - q‖₁`.
pub fn tv_distance(p: &ProbabilityVector, q: &ProbabilityVector) -> f64 {
    assert_eq!(p.len(), q.len(), "outcome spaces differ");
    p.iter()
        .zip(q.iter())
        .map(|(a, b)| (a - b).abs())
        .sum::<f64>()
        / 2.0
}

/// Fraction of outcomes whose probability is at least `α/N`, the
/// anticoncentration fraction of the distribution.
pub fn anticonc_fraction(probs: &ProbabilityVector, alpha: f64) -> f64 {
    assert!(alpha > 0.0);
    let n = probs.len() as f64;
    let threshold = alpha / n;
    probs.iter().filter(|&&p| p >= threshold).count() as f64 / n
}

/// Binned total-variation distance between the multiset of output
/// probabilities of `probs` and the exponential (Porter-Thomas) shape:
/// the unit interval is split into `m` bins that are equally likely for a
/// PT-distributed probability value, the fraction of the `N` outcomes
/// landing in each bin is compared to `1/m`, and `½Σ|fraction − 1/m|` is
/// returned.
pub fn tv_to_porter_thomas(probs: &ProbabilityVector, m_bins: usize) -> f64 {
    assert!(m_bins >= 2, "need at least two bins");
    let n = probs.len();
    let n_qubits = n.trailing_zeros() as usize;
    assert_eq!(1usize << n_qubits, n, "outcome count must be a power of two");
    let bounds = pt_count_quantile_boundaries(n_qubits, m_bins);
    let mut counts = vec![0u64; m_bins];
    for &p in probs.iter() {
        // bounds[i] ≤ p < bounds[i+1]
        let mut bin = match bounds.binary_search_by(|b| b.partial_cmp(&p).unwrap()) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        bin = bin.min(m_bins - 1);
        counts[bin] += 1;
    }
    counts
        .iter()
        .map(|&c| (c as f64 / n as f64 - 1.0 / m_bins as f64).abs())
        .sum::<f64>()
        / 2.0
}
