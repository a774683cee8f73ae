use crate::certify::{DensityOperator, PauliProduct, SiteFactor};
use crate::error::{Error, Result};
use crate::qc::{ClusterScheme, IQPWeights};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

/// A frustration-free parent Hamiltonian written as commuting star
/// operators: `H = Σᵢ (1 - Sᵢ)` after the conventional shift that puts the
/// ground energy at 0. Each star squares to the identity, so the spectrum is
/// `{0, 2, 4, …, 2·#stars}`: the gap is exactly 2 and the operator norm
/// exactly `2·#stars`, with the scheme state the unique ground state.
#[derive(Debug, Clone)]
pub struct LocalHamiltonian {
    n_qubits: usize,
    stars: Vec<PauliProduct>,
}

impl LocalHamiltonian {
    pub fn new(n_qubits: usize, stars: Vec<PauliProduct>) -> Result<Self> {
        for s in &stars {
            if s.n_qubits() != n_qubits {
                return Err(Error::InvalidInput("star width mismatch".into()));
            }
            if s.coefficient.abs() != 1.0 {
                return Err(Error::InvalidInput(
                    "stars must carry unit coefficients".into(),
                ));
            }
        }
        Ok(Self { n_qubits, stars })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn stars(&self) -> &[PauliProduct] {
        &self.stars
    }

    pub fn n_terms(&self) -> usize {
        self.stars.len()
    }

    /// Ground energy of the shifted Hamiltonian.
    pub fn e0(&self) -> f64 {
        0.0
    }

    /// Exact spectral gap.
    pub fn gap(&self) -> f64 {
        2.0
    }

    /// Exact operator norm of the shifted Hamiltonian.
    pub fn norm(&self) -> f64 {
        2.0 * self.stars.len() as f64
    }

    /// Largest locality (support size) among the stars.
    pub fn locality(&self) -> usize {
        self.stars.iter().map(|s| s.support()).max().unwrap_or(0)
    }

    /// Dense shifted Hamiltonian `Σ (1 - Sᵢ)`.
    pub fn dense_shifted(&self) -> DMatrix<Complex64> {
        let dim = 1usize << self.n_qubits;
        let mut h = DMatrix::identity(dim, dim)
            .map(|v: f64| Complex64::new(v * self.stars.len() as f64, 0.0));
        for s in &self.stars {
            h -= s.dense();
        }
        h
    }

    /// `Tr[H σ]` for the shifted Hamiltonian.
    pub fn expectation_shifted(&self, sigma: &DensityOperator) -> f64 {
        let mut e = self.stars.len() as f64;
        for s in &self.stars {
            e -= s.expectation(sigma.matrix());
        }
        e
    }
}

fn lattice_neighbors(rows: usize, cols: usize, site: usize) -> Vec<usize> {
    let (r, c) = (site / cols, site % cols);
    let mut out = Vec::with_capacity(4);
    if r > 0 {
        out.push((r - 1) * cols + c);
    }
    if r + 1 < rows {
        out.push((r + 1) * cols + c);
    }
    if c > 0 {
        out.push(r * cols + c - 1);
    }
    if c + 1 < cols {
        out.push(r * cols + c + 1);
    }
    out
}

/// Parent Hamiltonian of the plain cluster state on an `rows×cols` lattice:
/// stars `Xᵢ·Π_{j∈∂i} Zⱼ`, one per site.
pub fn cluster_parent(rows: usize, cols: usize) -> LocalHamiltonian {
    let n = rows * cols;
    let stars = (0..n)
        .map(|i| {
            let mut factors = vec![SiteFactor::I; n];
            factors[i] = SiteFactor::X;
            for j in lattice_neighbors(rows, cols, i) {
                factors[j] = SiteFactor::ZBeta(0.0);
            }
            PauliProduct {
                coefficient: 1.0,
                factors,
            }
        })
        .collect();
    LocalHamiltonian::new(n, stars).expect("construction is valid")
}

/// Parent Hamiltonian of the scheme state (the circuit picture with the
/// final Hadamard layer): stars `Z_{βᵢ,i}·Π_{j∈∂i} Xⱼ`.
pub fn beta_parent(scheme: &ClusterScheme) -> LocalHamiltonian {
    let n = scheme.n_sites();
    let stars = (0..n)
        .map(|i| {
            let mut factors = vec![SiteFactor::I; n];
            factors[i] = SiteFactor::ZBeta(scheme.beta()[i]);
            for j in lattice_neighbors(scheme.rows(), scheme.cols(), i) {
                factors[j] = SiteFactor::X;
            }
            PauliProduct {
                coefficient: 1.0,
                factors,
            }
        })
        .collect();
    LocalHamiltonian::new(n, stars).expect("construction is valid")
}

const ANGLE_TOL: f64 = 1e-9;

/// Parent Hamiltonian of an IQP circuit's output state, available when the
/// couplings generate controlled-Z-type interactions: off-diagonal weights
/// in `{0, π/4}` and on-site weights in multiples of `π/8`. Stars are
/// `Z_{βᵢ,i}·Π_{j: wᵢⱼ=π/4} Xⱼ` with `βᵢ = -2(wᵢᵢ + deg(i)·π/4)`.
pub fn iqp_parent(w: &IQPWeights) -> Result<LocalHamiltonian> {
    let n = w.n();
    for i in 0..n {
        let d = w.get(i, i) / (std::f64::consts::FRAC_PI_8);
        if (d - d.round()).abs() > ANGLE_TOL {
            return Err(Error::InvalidInput(format!(
                "on-site weight {} is not a multiple of π/8",
                w.get(i, i)
            )));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let v = w.get(i, j);
            if v.abs() > ANGLE_TOL && (v - FRAC_PI_4).abs() > ANGLE_TOL {
                return Err(Error::InvalidInput(format!(
                    "coupling weight {v} is neither 0 nor π/4"
                )));
            }
        }
    }
    let stars = (0..n)
        .map(|i| {
            let mut factors = vec![SiteFactor::I; n];
            let mut deg = 0usize;
            for j in 0..n {
                if j != i && (w.get(i, j) - FRAC_PI_4).abs() <= ANGLE_TOL {
                    factors[j] = SiteFactor::X;
                    deg += 1;
                }
            }
            factors[i] = SiteFactor::ZBeta(-2.0 * (w.get(i, i) + deg as f64 * FRAC_PI_4));
            PauliProduct {
                coefficient: 1.0,
                factors,
            }
        })
        .collect();
    LocalHamiltonian::new(n, stars)
}
