use crate::certify::{DensityOperator, LocalHamiltonian, PauliProduct};
use crate::error::{Error, Result};
use crate::verify::VerificationVerdict;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

/// Source of single-copy measurement outcomes for product observables: a
/// black-box alternative to an explicit density operator.
pub trait MeasurementSampler {
    fn n_qubits(&self) -> usize;
    /// One ±1 outcome of the (unit-coefficient) product observable on a
    /// fresh copy of the preparation.
    fn measure(&mut self, observable: &PauliProduct, rng: &mut dyn rand::RngCore) -> f64;
}

/// An imperfect state preparation: either an explicit density operator
/// (≤ 10 qubits) or a measurement sampler treated as the source of truth.
pub enum NoisyPreparation {
    Density(DensityOperator),
    Sampler(Box<dyn MeasurementSampler>),
}

impl NoisyPreparation {
    pub fn n_qubits(&self) -> usize {
        match self {
            NoisyPreparation::Density(rho) => rho.n_qubits(),
            NoisyPreparation::Sampler(s) => s.n_qubits(),
        }
    }
}

/// Fidelity sandwich from the energy of a gapped parent Hamiltonian with
/// ground energy 0: `1 - ⟨H⟩/Δ ≤ F(ρ,σ) ≤ 1 - ⟨H⟩/‖H‖`.
pub fn fidelity_bounds(h: &LocalHamiltonian, sigma: &DensityOperator) -> (f64, f64) {
    let e = h.expectation_shifted(sigma);
    (1.0 - e / h.gap(), 1.0 - e / h.norm())
}

/// The guaranteed-acceptance gap of the witness protocol:
/// `δ = (1-F_T)(1 - Δ/‖H‖) + 2εΔ/‖H‖`.
pub fn witness_gap(h: &LocalHamiltonian, f_threshold: f64, eps: f64) -> f64 {
    (1.0 - f_threshold) * (1.0 - h.gap() / h.norm()) + 2.0 * eps * h.gap() / h.norm()
}

/// Measurements of each local term needed for an ε-accurate witness
/// estimate with failure probability α:
/// `m ≥ (J²n²/(2Δ²ε²))·ln[-(n+1)/ln(1-α)]`, with `J = max‖1 - Sᵢ‖ = 2`.
pub fn witness_sample_count(h: &LocalHamiltonian, eps: f64, alpha: f64) -> Result<u64> {
    let n = h.n_terms() as f64;
    let j = 2.0f64;
    let m = (j * j * n * n / (2.0 * h.gap().powi(2) * eps * eps))
        * (-(n + 1.0) / (1.0 - alpha).ln()).ln();
    if !m.is_finite() || m > 1e12 {
        return Err(Error::Infeasible(format!(
            "witness protocol needs {m:.3e} measurements per term"
        )));
    }
    Ok(m.ceil().max(1.0) as u64)
}

/// Report of a witness certification run.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub verdict: VerificationVerdict,
    /// measurements of each term
    pub m_per_term: u64,
    /// guaranteed-acceptance fidelity gap of the protocol
    pub delta: f64,
    /// the estimated witness expectation 1 - E*/Δ
    pub witness_estimate: f64,
}

/// Energy-witness certification: measure each star term `m` times on fresh
/// copies, form the witness estimate `⟨W⟩* = 1 - E*/Δ` from the summed term
/// energies, and reject iff `⟨W⟩* < F_T + ε`. Requires `ε ≤ (1-F_T)/2`.
pub fn witness_test(
    prep: &mut NoisyPreparation,
    h: &LocalHamiltonian,
    f_threshold: f64,
    alpha: f64,
    eps: f64,
    rng: &mut impl Rng,
) -> Result<WitnessReport> {
    if eps > (1.0 - f_threshold) / 2.0 {
        return Err(Error::InvalidInput(format!(
            "ε = {eps} exceeds (1-F_T)/2 = {}",
            (1.0 - f_threshold) / 2.0
        )));
    }
    let m = witness_sample_count(h, eps, alpha)?;
    let mut e_star = 0.0;
    match prep {
        NoisyPreparation::Density(rho) => {
            for star in h.stars() {
                // outcome of 1 - S is 2 with probability (1-⟨S⟩)/2, else 0
                let p_two = ((1.0 - star.expectation(rho.matrix())) / 2.0).clamp(0.0, 1.0);
                let bin = Binomial::new(m, p_two).map_err(|e| {
                    Error::Numerical(format!("binomial parameters invalid: {e}"))
                })?;
                let count = bin.sample(rng);
                e_star += 2.0 * count as f64 / m as f64;
            }
        }
        NoisyPreparation::Sampler(sampler) => {
            for star in h.stars() {
                let mut acc = 0.0;
                for _ in 0..m {
                    acc += 1.0 - sampler.measure(star, rng);
                }
                e_star += acc / m as f64;
            }
        }
    }
    let witness_estimate = 1.0 - e_star / h.gap();
    let threshold = f_threshold + eps;
    Ok(WitnessReport {
        verdict: VerificationVerdict {
            accept: witness_estimate >= threshold,
            statistic_value: witness_estimate,
            threshold,
        },
        m_per_term: m,
        delta: witness_gap(h, f_threshold, eps),
        witness_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{beta_parent, cluster_parent};
    use crate::qc::{cluster_circuit, simulate, ClusterScheme};
    use crate::SplitRng;

    #[test]
    fn ground_state_saturates_bounds() {
        let scheme = ClusterScheme::uniform_zero(2, 2);
        let h = beta_parent(&scheme);
        let state = simulate(&cluster_circuit(&scheme)).unwrap();
        let rho = DensityOperator::pure(&state);
        let (lo, hi) = fidelity_bounds(&h, &rho);
        assert!((lo - 1.0).abs() < 1e-9 && (hi - 1.0).abs() < 1e-9);
    }

    #[test]
    fn maximally_mixed_witness_value() {
        // ⟨H_shifted⟩ = N on the maximally mixed state (stars are traceless)
        let h = cluster_parent(2, 3);
        let n = h.n_terms() as f64;
        let mixed = DensityOperator::maximally_mixed(6);
        let e = h.expectation_shifted(&mixed);
        assert!((e - n).abs() < 1e-9);
        let (lo, _) = fidelity_bounds(&h, &mixed);
        assert!((lo - (1.0 - n / 2.0)).abs() < 1e-9);
    }

    #[test]
    fn sandwich_on_random_mixed_states() {
        let mut rng = SplitRng::new(120);
        let scheme = ClusterScheme::uniform_zero(2, 2);
        let h = beta_parent(&scheme);
        let target = simulate(&cluster_circuit(&scheme)).unwrap();
        for _ in 0..50 {
            let sigma = DensityOperator::random_mixed(4, &mut rng);
            let f = sigma.fidelity_with_pure(&target);
            let (lo, hi) = fidelity_bounds(&h, &sigma);
            assert!(lo <= f + 1e-9, "F_min {lo} > F {f}");
            assert!(f <= hi + 1e-9, "F {f} > F_max {hi}");
        }
    }

    #[test]
    fn gap_formula_fixture() {
        // F_T = 0.9, Δ = 2, ‖H‖ = 10, ε = (1-F_T)/10 = 0.01:
        // δ = 0.1·(1 - 0.2) + 2·0.01·0.2 = 0.084
        let h = cluster_parent(1, 5);
        assert_eq!(h.norm(), 10.0);
        let delta = witness_gap(&h, 0.9, 0.01);
        assert!((delta - 0.084).abs() < 1e-12, "δ = {delta}");
    }

    #[test]
    fn accepts_ideal_rejects_depolarized() {
        let scheme = ClusterScheme::uniform_zero(2, 3);
        let h = beta_parent(&scheme);
        let state = simulate(&cluster_circuit(&scheme)).unwrap();
        let ideal = DensityOperator::pure(&state);
        let f_t = 0.9;
        let alpha = 0.05;
        let eps = (1.0 - f_t) / 10.0;
        let mut rng = SplitRng::new(121);

        let trials = 40;
        let mut accepts = 0;
        for _ in 0..trials {
            let mut prep = NoisyPreparation::Density(ideal.clone());
            let report = witness_test(&mut prep, &h, f_t, alpha, eps, &mut rng).unwrap();
            if report.verdict.accept {
                accepts += 1;
            }
        }
        assert!(
            accepts as f64 >= (1.0 - alpha) * trials as f64,
            "ideal accepted only {accepts}/{trials}"
        );

        // depolarization strong enough that F < F_T
        let eps_dep = 0.4;
        let noisy = ideal.depolarized(eps_dep);
        assert!(noisy.fidelity_with_pure(&state) < f_t);
        let mut rejects = 0;
        for _ in 0..trials {
            let mut prep = NoisyPreparation::Density(noisy.clone());
            let report = witness_test(&mut prep, &h, f_t, alpha, eps, &mut rng).unwrap();
            if !report.verdict.accept {
                rejects += 1;
            }
        }
        assert!(
            rejects as f64 >= (1.0 - alpha) * trials as f64,
            "noisy rejected only {rejects}/{trials}"
        );
    }

    #[test]
    fn sampler_preparation_matches_density() {
        // a sampler backed by the same density operator gives a consistent verdict
        struct DensitySampler {
            rho: DensityOperator,
        }
        impl MeasurementSampler for DensitySampler {
            fn n_qubits(&self) -> usize {
                self.rho.n_qubits()
            }
            fn measure(&mut self, obs: &PauliProduct, rng: &mut dyn rand::RngCore) -> f64 {
                let p_plus = ((1.0 + obs.expectation(self.rho.matrix())) / 2.0).clamp(0.0, 1.0);
                if rand::Rng::gen_range(rng, 0.0..1.0) < p_plus {
                    1.0
                } else {
                    -1.0
                }
            }
        }
        let scheme = ClusterScheme::uniform_zero(1, 2);
        let h = beta_parent(&scheme);
        let state = simulate(&cluster_circuit(&scheme)).unwrap();
        let mut rng = SplitRng::new(122);
        let mut prep = NoisyPreparation::Sampler(Box::new(DensitySampler {
            rho: DensityOperator::pure(&state),
        }));
        let report = witness_test(&mut prep, &h, 0.9, 0.05, 0.01, &mut rng).unwrap();
        assert!(report.verdict.accept);
        assert!((report.witness_estimate - 1.0).abs() < 0.05);
    }

    #[test]
    fn eps_precondition_is_enforced() {
        let h = cluster_parent(1, 2);
        let mut rng = SplitRng::new(123);
        let mut prep = NoisyPreparation::Density(DensityOperator::maximally_mixed(2));
        assert!(witness_test(&mut prep, &h, 0.9, 0.05, 0.2, &mut rng).is_err());
    }
}
