use crate::error::{Error, Result};
use crate::prob::ProbabilityVector;
use crate::samplers::SampleSet;
use serde::{Deserialize, Serialize};

/// Outcome of a verification protocol: the decisive statistic, the threshold
/// it was compared against, and the resulting decision.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationVerdict {
    pub accept: bool,
    pub statistic_value: f64,
    pub threshold: f64,
}

/// The χ₂/₃ statistic `Σ_{x∈subset} ((X(x) - kP(x))² - X(x)) / P(x)^{2/3}`
/// over the given outcome subset, where `X(x)` counts occurrences among the
/// `k` samples. A zero target probability with a nonzero count yields
/// `+∞` (an unconditional reject signal).
pub fn chi23_statistic(samples: &SampleSet, target: &ProbabilityVector, subset: &[usize]) -> f64 {
    let counts = samples.counts();
    let k = samples.len() as f64;
    let mut total = 0.0;
    for &x in subset {
        let c = counts[x] as f64;
        let p = target[x];
        if p == 0.0 {
            if c > 0.0 {
                return f64::INFINITY;
            }
            continue;
        }
        total += ((c - k * p).powi(2) - c) / p.powf(2.0 / 3.0);
    }
    total
}

/// Tunable constants of the identity test threshold
/// `chi_constant · k^{k_exponent} · ‖P_M‖_{2/3}^{norm_exponent}`.
/// The defaults realize `4·k·‖P_M‖_{2/3}^{1/3}`, which sits at ≈ 2.8
/// standard deviations of the null statistic and passes the 2/3
/// completeness/soundness calibration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityTestConfig {
    pub chi_constant: f64,
    pub k_exponent: f64,
    pub norm_exponent: f64,
}

impl Default for IdentityTestConfig {
    fn default() -> Self {
        Self {
            chi_constant: 4.0,
            k_exponent: 1.0,
            norm_exponent: 1.0 / 3.0,
        }
    }
}

/// Instance-optimal identity test. With target probabilities sorted
/// nonincreasing, the tail `S` past the cut index `s` carries weight at most
/// `ε/8`; the bulk `M` is everything else except the single largest outcome.
/// The test rejects when the χ₂/₃ statistic over `M` exceeds its threshold,
/// then rejects when the tail sample count exceeds `3εk/16`, else accepts.
pub fn vv_identity_test(
    samples: &SampleSet,
    target: &ProbabilityVector,
    eps: f64,
    config: &IdentityTestConfig,
) -> Result<VerificationVerdict> {
    if eps <= 0.0 || eps >= 1.0 {
        return Err(Error::InvalidInput("ε must lie in (0,1)".into()));
    }
    if samples.n_outcomes() != target.len() {
        return Err(Error::InvalidInput("sample space mismatch".into()));
    }
    let n = target.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| target[b].partial_cmp(&target[a]).unwrap());

    // minimal s (1-based position) whose tail weight is ≤ ε/8
    let mut suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + target[order[i]];
    }
    let mut s = n;
    for pos in 1..=n {
        if suffix[pos] <= eps / 8.0 {
            s = pos;
            break;
        }
    }
    let bulk: Vec<usize> = order[1..s].to_vec();
    let tail: Vec<usize> = order[s..].to_vec();

    let k = samples.len() as f64;
    let chi = chi23_statistic(samples, target, &bulk);
    let bulk_norm = crate::analysis::l23_quasinorm(
        &bulk.iter().map(|&x| target[x]).collect::<Vec<_>>(),
    );
    let chi_threshold =
        config.chi_constant * k.powf(config.k_exponent) * bulk_norm.powf(config.norm_exponent);
    if chi > chi_threshold {
        return Ok(VerificationVerdict {
            accept: false,
            statistic_value: chi,
            threshold: chi_threshold,
        });
    }

    let counts = samples.counts();
    let tail_count: u64 = tail.iter().map(|&x| counts[x]).sum();
    let tail_threshold = 3.0 * eps * k / 16.0;
    if tail_count as f64 > tail_threshold {
        return Ok(VerificationVerdict {
            accept: false,
            statistic_value: tail_count as f64,
            threshold: tail_threshold,
        });
    }
    Ok(VerificationVerdict {
        accept: true,
        statistic_value: chi,
        threshold: chi_threshold,
    })
}
