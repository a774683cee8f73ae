use crate::prob::ProbabilityVector;
use crate::samplers::SampleSet;

/// The score attained by a distribution supported entirely on the heavy
/// set: `1/ln 2 ≈ 1.443`.
pub const HEAVY_SET_SCORE: f64 = std::f64::consts::LOG2_E;

/// Lower median of the probability multiset (the `⌈N/2⌉`-th smallest value).
pub fn lower_median(target: &ProbabilityVector) -> f64 {
    let mut values: Vec<f64> = target.as_slice().to_vec();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values[(values.len() - 1) / 2]
}

fn heavy_fraction_samples(samples: &SampleSet, target: &ProbabilityVector, median: f64) -> f64 {
    let heavy = samples
        .samples()
        .iter()
        .filter(|&&x| target[x] >= median)
        .count();
    heavy as f64 / samples.len() as f64
}

/// Heavy-outcome score `(2/ln2)·(heavy fraction − 1/2)`, where a sample is
/// heavy when its target probability is at least the median of the target's
/// probability multiset. Scores 0 for uniform samples and 1 for samples
/// from an exponentially-shaped target.
pub fn hog_fidelity(samples: &SampleSet, target: &ProbabilityVector) -> f64 {
    let median = lower_median(target);
    (2.0 / std::f64::consts::LN_2) * (heavy_fraction_samples(samples, target, median) - 0.5)
}

/// Heavy-outcome score of a full distribution `q`.
pub fn hog_fidelity_exact(q: &ProbabilityVector, target: &ProbabilityVector) -> f64 {
    let median = lower_median(target);
    let heavy_mass: f64 = q
        .iter()
        .zip(target.iter())
        .filter(|(_, &p)| p >= median)
        .map(|(qx, _)| qx)
        .sum();
    (2.0 / std::f64::consts::LN_2) * (heavy_mass - 0.5)
}

/// The pass/fail heavy-outcome check: at least a 2/3 fraction of the
/// samples must be heavy.
pub fn hog_check(samples: &SampleSet, target: &ProbabilityVector) -> bool {
    heavy_fraction_samples(samples, target, lower_median(target)) >= 2.0 / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::pt_exact_discretization;
    use crate::samplers::inverse_cdf_sample;
    use crate::SplitRng;

    #[test]
    fn uniform_scores_zero() {
        let target = pt_exact_discretization(1 << 10);
        let uniform = ProbabilityVector::uniform(1 << 10);
        let f = hog_fidelity_exact(&uniform, &target);
        assert!(f.abs() < 0.01, "HOG {f}");
    }

    #[test]
    fn ideal_scores_one() {
        let target = pt_exact_discretization(1 << 12);
        let f = hog_fidelity_exact(&target, &target);
        assert!((f - 1.0).abs() < 0.01, "HOG {f}");
    }

    #[test]
    fn heavy_set_scores_inverse_ln2() {
        let target = pt_exact_discretization(1 << 10);
        let median = lower_median(&target);
        // distribution proportional to the target, restricted to the heavy set
        let mut probs: Vec<f64> = target
            .iter()
            .map(|&p| if p >= median { p } else { 0.0 })
            .collect();
        let mass: f64 = probs.iter().sum();
        for p in probs.iter_mut() {
            *p /= mass;
        }
        let q = ProbabilityVector::new(probs).unwrap();
        let f = hog_fidelity_exact(&q, &target);
        assert!((f - HEAVY_SET_SCORE).abs() < 1e-9, "HOG {f}");
    }

    #[test]
    fn sampled_check_passes_on_target_fails_on_uniform() {
        let mut rng = SplitRng::new(70);
        let target = pt_exact_discretization(1 << 10);
        let from_target = inverse_cdf_sample(&target, 50_000, &mut rng);
        assert!(hog_check(&from_target, &target));
        let uniform = ProbabilityVector::uniform(1 << 10);
        let from_uniform = inverse_cdf_sample(&uniform, 50_000, &mut rng);
        assert!(!hog_check(&from_uniform, &target));
        let f = hog_fidelity(&from_uniform, &target);
        assert!(f.abs() < 0.05, "sampled uniform HOG {f}");
    }
}
