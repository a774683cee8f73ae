use crate::prob::ProbabilityVector;
use crate::samplers::SampleSet;

/// Boundaries of `m` bins that are equally likely for the target probability
/// of an *ideal sample*: if outcome probabilities follow the exponential
/// shape `N e^{-Np}`, the probability value seen by a sample follows the
/// size-biased density `N²p·e^{-Np}` with CDF `G(p) = 1 - (1+Np)e^{-Np}`;
/// boundaries solve `G = j/m`. Returns `m+1` boundaries, the last infinite.
pub fn pt_sample_quantile_boundaries(n_outcomes: usize, m_bins: usize) -> Vec<f64> {
    assert!(m_bins >= 1);
    let n = n_outcomes as f64;
    let g = |t: f64| 1.0 - (1.0 + t) * (-t).exp();
    let mut bounds = Vec::with_capacity(m_bins + 1);
    bounds.push(0.0);
    for j in 1..m_bins {
        let target = j as f64 / m_bins as f64;
        let (mut lo, mut hi) = (0.0f64, 60.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        bounds.push(0.5 * (lo + hi) / n);
    }
    bounds.push(f64::INFINITY);
    bounds
}

fn bin_of(bounds: &[f64], p: f64) -> usize {
    match bounds.binary_search_by(|b| b.partial_cmp(&p).unwrap()) {
        Ok(i) => i.min(bounds.len() - 2),
        Err(i) => i - 1,
    }
}

/// Binned-outcome score: samples are binned by their target probability
/// into the `m` sample-equifilled bins and the half ℓ₁ deviation of the bin
/// frequencies from `1/m` is returned. Zero for ideal samples in the large
/// sample limit; `m = 1` is identically zero.
pub fn bog_distance(samples: &SampleSet, target: &ProbabilityVector, m_bins: usize) -> f64 {
    let bounds = pt_sample_quantile_boundaries(target.len(), m_bins);
    let mut counts = vec![0u64; m_bins];
    for &x in samples.samples() {
        counts[bin_of(&bounds, target[x])] += 1;
    }
    let k = samples.len() as f64;
    counts
        .iter()
        .map(|&c| (c as f64 / k - 1.0 / m_bins as f64).abs())
        .sum::<f64>()
        / 2.0
}

/// Binned-outcome score of a full distribution `q`: bin masses
/// `Σ_x q(x)·1{P(x) ∈ bin}` compared against `1/m`.
pub fn bog_distance_exact(q: &ProbabilityVector, target: &ProbabilityVector, m_bins: usize) -> f64 {
    let bounds = pt_sample_quantile_boundaries(target.len(), m_bins);
    let mut mass = vec![0.0f64; m_bins];
    for (qx, px) in q.iter().zip(target.iter()) {
        mass[bin_of(&bounds, *px)] += qx;
    }
    mass.iter()
        .map(|&w| (w - 1.0 / m_bins as f64).abs())
        .sum::<f64>()
        / 2.0
}
