use crate::certify::{DensityOperator, NoisyPreparation, PauliProduct};
use crate::error::{Error, Result};
use crate::qc::{ClusterScheme, StateVector};
use crate::verify::VerificationVerdict;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

/// A single-copy pass/fail measurement strategy: binary tests `{Pⱼ, 1-Pⱼ}`
/// performed with probabilities `μⱼ`. The acceptance statistics are governed
/// by the effective operator `Ω = Σ μⱼPⱼ`.
pub struct Strategy {
    weights: Vec<f64>,
    projectors: Vec<DMatrix<Complex64>>,
}

impl Strategy {
    pub fn new(weights: Vec<f64>, projectors: Vec<DMatrix<Complex64>>) -> Result<Self> {
        if weights.len() != projectors.len() || weights.is_empty() {
            return Err(Error::InvalidInput("strategy arity mismatch".into()));
        }
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|&w| w < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidInput("strategy weights are not a probability vector".into()));
        }
        let dim = projectors[0].nrows();
        for p in &projectors {
            if p.nrows() != dim || p.ncols() != dim {
                return Err(Error::InvalidInput("projector dimensions differ".into()));
            }
            if dim <= 512 {
                let herm = (p - p.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
                if herm > 1e-9 {
                    return Err(Error::InvalidInput("test operator not Hermitian".into()));
                }
                let eig = p.clone().symmetric_eigen();
                for &l in eig.eigenvalues.iter() {
                    if !(-1e-9..=1.0 + 1e-9).contains(&l) {
                        return Err(Error::InvalidInput(format!(
                            "test operator eigenvalue {l} outside [0,1]"
                        )));
                    }
                }
            }
        }
        Ok(Self { weights, projectors })
    }

    /// `Ω = Σ μⱼ Pⱼ`.
    pub fn effective_operator(&self) -> DMatrix<Complex64> {
        let dim = self.projectors[0].nrows();
        let mut omega: DMatrix<Complex64> = DMatrix::zeros(dim, dim);
        for (w, p) in self.weights.iter().zip(&self.projectors) {
            omega += p.map(|z| z * *w);
        }
        omega
    }

    /// Spectral gap `Δ(Ω) = 1 - λ₂(Ω)` between the two largest eigenvalues.
    pub fn gap(&self) -> f64 {
        let eig = self.effective_operator().symmetric_eigen();
        let mut evals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        evals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        1.0 - evals[1]
    }
}

/// Projective strategy `{|ψ⟩⟨ψ|}` for a pure target (gap 1).
pub fn projective_strategy(target: &StateVector) -> Strategy {
    let rho = DensityOperator::pure(target);
    Strategy {
        weights: vec![1.0],
        projectors: vec![rho.matrix().clone()],
    }
}

/// Uniform measurement of the scheme state's stabilizer generators with
/// pass projectors `(1 + S_{β,i})/2`.
pub fn generator_strategy(scheme: &ClusterScheme) -> Strategy {
    let n = scheme.n_sites();
    let dim = 1usize << n;
    let mut projectors = Vec::with_capacity(n);
    for i in 0..n {
        let s: PauliProduct = crate::certify::stabilizer::stabilizer_element(scheme, 1u64 << i);
        let mut p = s.dense();
        for d in 0..dim {
            p[(d, d)] += Complex64::new(1.0, 0.0);
        }
        projectors.push(p.map(|z| z * 0.5));
    }
    Strategy {
        weights: vec![1.0 / n as f64; n],
        projectors,
    }
}

#[derive(Debug, Clone)]
pub struct PlmReport {
    pub verdict: VerificationVerdict,
    /// spectral gap of the effective operator
    pub gap: f64,
    /// copies required for (ε, δ) certification at this gap
    pub m_required: u64,
    pub rounds_run: u64,
}

/// Single-copy certification: in each of `m` rounds draw a test `j ~ μ` and
/// measure `{Pⱼ, 1-Pⱼ}` on a fresh copy, rejecting at the first failure.
/// Reports the gap `Δ(Ω)` and the copy requirement `ln(1/δ)/(ε·Δ(Ω))`.
pub fn plm_test(
    prep: &NoisyPreparation,
    strategy: &Strategy,
    m: u64,
    eps: f64,
    delta: f64,
    rng: &mut impl Rng,
) -> Result<PlmReport> {
    let rho = match prep {
        NoisyPreparation::Density(rho) => rho,
        NoisyPreparation::Sampler(_) => {
            return Err(Error::InvalidInput(
                "single-copy certification needs an explicit density operator".into(),
            ))
        }
    };
    let gap = strategy.gap();
    let m_required = ((1.0 / delta).ln() / (eps * gap)).ceil() as u64;
    // per-test pass probabilities
    let pass: Vec<f64> = strategy
        .projectors
        .iter()
        .map(|p| (p * rho.matrix()).trace().re.clamp(0.0, 1.0))
        .collect();
    let cdf: Vec<f64> = strategy
        .weights
        .iter()
        .scan(0.0, |acc, w| {
            *acc += w;
            Some(*acc)
        })
        .collect();
    let mut rounds = 0u64;
    let mut accept = true;
    while rounds < m {
        rounds += 1;
        let u: f64 = rng.gen_range(0.0..1.0);
        let j = match cdf.binary_search_by(|c| c.partial_cmp(&u).unwrap()) {
            Ok(i) | Err(i) => i.min(cdf.len() - 1),
        };
        if rng.gen_range(0.0..1.0) >= pass[j] {
            accept = false;
            break;
        }
    }
    Ok(PlmReport {
        verdict: VerificationVerdict {
            accept,
            statistic_value: rounds as f64,
            threshold: m as f64,
        },
        gap,
        m_required,
        rounds_run: rounds,
    })
}
