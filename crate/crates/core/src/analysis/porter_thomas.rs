use crate::prob::ProbabilityVector;
use rand::Rng;

/// Density of the success probability `p = |⟨0|U|0⟩|²` of a Haar-random
/// unitary on a `D`-dimensional space: `(D-1)(1-p)^{D-2}`.
pub fn porter_thomas_pdf(p: f64, d: usize) -> f64 {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let d = d as f64;
    (d - 1.0) * (1.0 - p).powf(d - 2.0)
}

/// Large-`D` exponential form of the same density, `D·exp(-Dp)`.
pub fn porter_thomas_pdf_asymptotic(p: f64, d: usize) -> f64 {
    let d = d as f64;
    d * (-d * p).exp()
}

/// A deterministic probability vector whose entry multiset follows the
/// exponential (Porter-Thomas) shape exactly: midpoint quantiles
/// `-ln((i-1/2)/N)/N`, normalized, sorted descending.
pub fn pt_exact_discretization(n_outcomes: usize) -> ProbabilityVector {
    let n = n_outcomes as f64;
    let mut probs: Vec<f64> = (0..n_outcomes)
        .map(|i| -((i as f64 + 0.5) / n).ln() / n)
        .collect();
    let total: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= total;
    }
    ProbabilityVector::new(probs).expect("normalized by construction")
}

/// Random vector with iid exponential entries, normalized; the entry
/// multiset of a typical chaotic output distribution.
pub fn random_pt_vector(n_outcomes: usize, rng: &mut impl Rng) -> ProbabilityVector {
    let mut probs: Vec<f64> = (0..n_outcomes)
        .map(|_| -rng.gen_range(f64::MIN_POSITIVE..1.0f64).ln())
        .collect();
    let total: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= total;
    }
    ProbabilityVector::new(probs).expect("normalized by construction")
}

/// Boundaries of `m` bins that are equally likely for a probability value
/// drawn from the asymptotic exponential density on `2ⁿ` outcomes:
/// `p_i = -ln(1 - i/m)/2ⁿ`, with `p_0 = 0` and the last boundary infinite.
/// Returns `m+1` boundaries.
pub fn pt_count_quantile_boundaries(n_qubits: usize, m_bins: usize) -> Vec<f64> {
    let d = (1u64 << n_qubits) as f64;
    let mut bounds = Vec::with_capacity(m_bins + 1);
    for i in 0..m_bins {
        bounds.push(-(1.0 - i as f64 / m_bins as f64).ln() / d);
    }
    bounds.push(f64::INFINITY);
    bounds
}
