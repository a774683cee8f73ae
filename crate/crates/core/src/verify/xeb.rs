use crate::error::{Error, Result};
use crate::prob::ProbabilityVector;
use crate::samplers::SampleSet;

/// Empirical linear cross-entropy fidelity `(1/k) Σᵢ (N·P(xᵢ) - 1)` of
/// samples against an enumerable target on `N` outcomes.
pub fn xeb_fidelity(samples: &SampleSet, target: &ProbabilityVector) -> f64 {
    let n = target.len() as f64;
    let k = samples.len() as f64;
    samples
        .samples()
        .iter()
        .map(|&x| n * target[x] - 1.0)
        .sum::<f64>()
        / k
}

/// Linear cross-entropy fidelity of a full distribution `q` against the
/// target: `Σ_x q(x)(N·P(x) - 1)`.
pub fn xeb_fidelity_exact(q: &ProbabilityVector, target: &ProbabilityVector) -> f64 {
    let n = target.len() as f64;
    q.iter()
        .zip(target.iter())
        .map(|(qx, px)| qx * (n * px - 1.0))
        .sum()
}

/// `N·Σ_x P(x)² - 1`, the ideal XEB value of the target itself; the
/// denominator of the depolarization-fidelity estimate.
pub fn xeb_moment_sum(target: &ProbabilityVector) -> f64 {
    let n = target.len() as f64;
    n * target.iter().map(|p| p * p).sum::<f64>() - 1.0
}

/// Shannon entropy in nats.
fn shannon_nats(p: &ProbabilityVector) -> f64 {
    -p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

/// Empirical cross-entropy difference in natural-log units:
/// `(1/k) Σᵢ ln(1/P(xᵢ)) - H(P)`. A sampled outcome with zero target
/// probability yields `+∞` (reject signal). Set `bits` to divide by ln 2.
pub fn ce_difference(samples: &SampleSet, target: &ProbabilityVector, bits: bool) -> f64 {
    let k = samples.len() as f64;
    let mut ce = 0.0;
    for &x in samples.samples() {
        if target[x] == 0.0 {
            return f64::INFINITY;
        }
        ce -= target[x].ln();
    }
    let d = ce / k - shannon_nats(target);
    if bits {
        d / std::f64::consts::LN_2
    } else {
        d
    }
}

/// Cross-entropy difference of a full distribution `q` against the target,
/// `CE(q,P) - H(P)` in nats (or bits).
pub fn ce_difference_exact(q: &ProbabilityVector, target: &ProbabilityVector, bits: bool) -> f64 {
    let mut ce = 0.0;
    for (qx, px) in q.iter().zip(target.iter()) {
        if *qx > 0.0 {
            if *px == 0.0 {
                return f64::INFINITY;
            }
            ce -= qx * px.ln();
        }
    }
    let d = ce - shannon_nats(target);
    if bits {
        d / std::f64::consts::LN_2
    } else {
        d
    }
}

/// Per-cycle depolarization fidelity (to the power of the cycle count)
/// recovered from an averaged XEB value: `p_cᵐ = xeb_avg / moment_sum`
/// with `moment_sum = N·Σ E[P(x)²] - 1` (see [`xeb_moment_sum`]).
pub fn depolarization_estimate(xeb_avg: f64, moment_sum: f64) -> Result<f64> {
    if moment_sum <= 0.0 {
        return Err(Error::InvalidInput(
            "moment sum must be positive to invert the XEB average".into(),
        ));
    }
    Ok(xeb_avg / moment_sum)
}

/// Rule-of-thumb number of random circuits needed to estimate the averaged
/// XEB fidelity to `±ε` with failure probability `α` (diagnostic only).
pub fn xeb_circuits_required(eps: f64, alpha: f64) -> u64 {
    ((2.0 / alpha).ln() / (2.0 * eps * eps)).ceil() as u64
}

/// Rule-of-thumb per-circuit sample count for the cross-entropy difference
/// at `n` qubits (log-factor terms dropped; diagnostic only).
pub fn ce_samples_required(n: usize, eps: f64, alpha: f64) -> u64 {
    let n = n as f64;
    (n * n * (2.0 / alpha).ln() / (2.0 * eps * eps)).ceil() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{pt_exact_discretization, tv_distance};
    use crate::samplers::inverse_cdf_sample;
    use crate::SplitRng;

    #[test]
    fn xeb_single_sample_case() {
        let target = ProbabilityVector::point_mass(2, 0);
        let samples = SampleSet::new(2, vec![0]).unwrap();
        assert_eq!(xeb_fidelity(&samples, &target), 1.0);
    }

    #[test]
    fn xeb_extreme_cases_on_exact_distributions() {
        let target = pt_exact_discretization(1 << 10);
        let uniform = ProbabilityVector::uniform(1 << 10);
        assert!(xeb_fidelity_exact(&uniform, &target).abs() < 1e-9);
        let ideal = xeb_fidelity_exact(&target, &target);
        assert!((ideal - 1.0).abs() < 0.01, "ideal XEB {ideal}");
    }

    #[test]
    fn xeb_sampled_estimates() {
        let mut rng = SplitRng::new(60);
        let target = pt_exact_discretization(1 << 10);
        let k = 200_000;
        let from_target = inverse_cdf_sample(&target, k, &mut rng);
        let f = xeb_fidelity(&from_target, &target);
        assert!((f - 1.0).abs() < 0.05, "XEB {f}");
        let from_uniform = inverse_cdf_sample(&ProbabilityVector::uniform(1 << 10), k, &mut rng);
        let f = xeb_fidelity(&from_uniform, &target);
        assert!(f.abs() < 0.05, "XEB {f}");
    }

    #[test]
    fn ce_difference_values() {
        let target = pt_exact_discretization(1 << 10);
        assert!(ce_difference_exact(&target, &target, false).abs() < 1e-12);
        let uniform = ProbabilityVector::uniform(1 << 10);
        let d = ce_difference_exact(&uniform, &target, false);
        assert!((d - 1.0).abs() < 0.01, "d_CE {d}");
        let d_bits = ce_difference_exact(&uniform, &target, true);
        assert!((d_bits - 1.0 / std::f64::consts::LN_2).abs() < 0.02);
    }

    #[test]
    fn pinsker_chain_on_mixtures() {
        // entropy-increasing noise: TV ≤ √(d_CE/2)
        let target = pt_exact_discretization(1 << 8);
        let uniform = ProbabilityVector::uniform(1 << 8);
        for lambda in [0.1, 0.5] {
            let q = target.mix(&uniform, lambda).unwrap();
            let tv = tv_distance(&q, &target);
            let d = ce_difference_exact(&q, &target, false);
            assert!(tv <= (d / 2.0).sqrt() + 1e-12, "λ={lambda}: tv {tv}, d {d}");
        }
    }

    #[test]
    fn depolarization_recovery() {
        let target = pt_exact_discretization(1 << 8);
        let uniform = ProbabilityVector::uniform(1 << 8);
        let moment = xeb_moment_sum(&target);
        // ideal preparation
        let p = depolarization_estimate(xeb_fidelity_exact(&target, &target), moment).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        // depolarized mixture at ε = 0.3 recovers 0.7 exactly on distributions
        let q = target.mix(&uniform, 0.3).unwrap();
        let p = depolarization_estimate(xeb_fidelity_exact(&q, &target), moment).unwrap();
        assert!((p - 0.7).abs() < 1e-9, "p_c {p}");
        // zero XEB maps to zero
        assert_eq!(depolarization_estimate(0.0, moment).unwrap(), 0.0);
        assert!(depolarization_estimate(0.5, 0.0).is_err());
    }

    #[test]
    fn sampled_depolarization_estimate() {
        let mut rng = SplitRng::new(61);
        let target = pt_exact_discretization(1 << 8);
        let uniform = ProbabilityVector::uniform(1 << 8);
        let q = target.mix(&uniform, 0.3).unwrap();
        let samples = inverse_cdf_sample(&q, 300_000, &mut rng);
        let est =
            depolarization_estimate(xeb_fidelity(&samples, &target), xeb_moment_sum(&target))
                .unwrap();
        assert!((est - 0.7).abs() < 0.03, "p_c {est}");
    }

    #[test]
    fn diagnostics_are_monotone() {
        assert!(xeb_circuits_required(0.05, 0.01) > xeb_circuits_required(0.1, 0.01));
        assert!(ce_samples_required(12, 0.1, 0.01) > ce_samples_required(8, 0.1, 0.01));
    }
}
