use crate::error::{Error, Result};
use crate::qc::StateVector;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

const TOL: f64 = 1e-9;
/// Positivity is verified spectrally only up to this dimension.
const PSD_CHECK_DIM: usize = 512;

/// A dense density operator on up to 10 qubits: Hermitian, unit trace,
/// positive semidefinite (checked spectrally for dimension ≤ 512).
#[derive(Debug, Clone)]
pub struct DensityOperator {
    n_qubits: usize,
    mat: DMatrix<Complex64>,
}

impl DensityOperator {
    pub fn new(n_qubits: usize, mat: DMatrix<Complex64>) -> Result<Self> {
        if n_qubits > 10 {
            return Err(Error::DimensionCap {
                requested: n_qubits,
                cap: 10,
            });
        }
        let dim = 1usize << n_qubits;
        if mat.nrows() != dim || mat.ncols() != dim {
            return Err(Error::InvalidInput(format!(
                "density operator must be {dim}×{dim}"
            )));
        }
        let herm_dev = (&mat - mat.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if herm_dev > TOL {
            return Err(Error::InvalidInput(format!(
                "not Hermitian (deviation {herm_dev})"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TOL || tr.im.abs() > TOL {
            return Err(Error::InvalidInput(format!("trace is {tr}, expected 1")));
        }
        if dim <= PSD_CHECK_DIM {
            let eig = mat.clone().symmetric_eigen();
            let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
            if min < -TOL {
                return Err(Error::InvalidInput(format!(
                    "not positive semidefinite (min eigenvalue {min})"
                )));
            }
        }
        Ok(Self { n_qubits, mat })
    }

    /// Pure state `|ψ⟩⟨ψ|`.
    pub fn pure(state: &StateVector) -> Self {
        let dim = state.amplitudes().len();
        let mut mat = DMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                mat[(i, j)] = state.amplitudes()[i] * state.amplitudes()[j].conj();
            }
        }
        Self {
            n_qubits: state.n_qubits(),
            mat,
        }
    }

    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1usize << n_qubits;
        Self {
            n_qubits,
            mat: DMatrix::identity(dim, dim).map(|v: f64| Complex64::new(v / dim as f64, 0.0)),
        }
    }

    /// `(1-ε)·ρ + ε·I/2ⁿ`, the globally depolarized preparation.
    pub fn depolarized(&self, eps: f64) -> Self {
        let dim = self.mat.nrows();
        let mut mat = self.mat.map(|z| z * (1.0 - eps));
        for i in 0..dim {
            mat[(i, i)] += Complex64::new(eps / dim as f64, 0.0);
        }
        Self {
            n_qubits: self.n_qubits,
            mat,
        }
    }

    /// Random full-rank mixed state `GG†/Tr[GG†]` from a complex Ginibre draw.
    pub fn random_mixed(n_qubits: usize, rng: &mut impl Rng) -> Self {
        let dim = 1usize << n_qubits;
        let g = DMatrix::from_fn(dim, dim, |_, _| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        let mut mat = &g * g.adjoint();
        let tr = mat.trace().re;
        mat /= Complex64::new(tr, 0.0);
        Self { n_qubits, mat }
    }

    /// Convex mixture `(1-λ)·self + λ·other`.
    pub fn mix(&self, other: &Self, lambda: f64) -> Self {
        Self {
            n_qubits: self.n_qubits,
            mat: self.mat.map(|z| z * (1.0 - lambda)) + other.mat.map(|z| z * lambda),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    /// Overlap `⟨ψ|σ|ψ⟩`, the fidelity with a pure target.
    pub fn fidelity_with_pure(&self, state: &StateVector) -> f64 {
        let amps = state.amplitudes();
        let dim = amps.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..dim {
            for j in 0..dim {
                acc += amps[i].conj() * self.mat[(i, j)] * amps[j];
            }
        }
        acc.re
    }
}
