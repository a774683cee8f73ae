use crate::error::{Error, Result};
use crate::qmc::RealHamiltonian;
use nalgebra::DMatrix;

/// The per-step kernel of the world-line expansion of `e^{-βH}` into `m`
/// factors: `T = 1 - (β/m)H`. Partition functions become sums over closed
/// index paths of products of its entries.
#[derive(Debug, Clone)]
pub struct TransferMatrix {
    beta: f64,
    m: usize,
    mat: DMatrix<f64>,
}

impl TransferMatrix {
    pub fn from_hamiltonian(h: &RealHamiltonian, beta: f64, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidInput("need at least one expansion step".into()));
        }
        if beta < 0.0 {
            return Err(Error::InvalidInput("inverse temperature must be ≥ 0".into()));
        }
        let d = h.dim();
        let mut mat = h.matrix().scale(-beta / m as f64);
        for i in 0..d {
            mat[(i, i)] += 1.0;
        }
        Ok(Self { beta, m, mat })
    }

    /// Wrap an explicitly given symmetric kernel.
    pub fn from_matrix(mat: DMatrix<f64>, beta: f64, m: usize) -> Result<Self> {
        let dev = (&mat - mat.transpose())
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max);
        if dev > 1e-10 {
            return Err(Error::InvalidInput("kernel must be symmetric".into()));
        }
        Ok(Self { beta, m, mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn steps(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    /// Entrywise absolute value (still symmetric).
    pub fn abs_matrix(&self) -> DMatrix<f64> {
        self.mat.map(f64::abs)
    }

    /// Whether `diag(βH/m) ≤ 1` held, i.e. all diagonal kernel entries are
    /// nonnegative; the regime in which stoquasticity forces positive paths.
    pub fn diag_nonnegative(&self) -> bool {
        (0..self.dim()).all(|i| self.mat[(i, i)] >= 0.0)
    }
}

/// Product of kernel entries along an index path `λ₁ … λ_{k}`:
/// `Π T(λᵢ | λᵢ₊₁)`.
pub fn path_amplitude(t: &TransferMatrix, path: &[usize]) -> f64 {
    assert!(path.iter().all(|&l| l < t.dim()), "path index out of range");
    path.windows(2).map(|w| t.matrix()[(w[0], w[1])]).product()
}

/// The explicit barely-nonstoquastic 4×4 kernel with tunable entries `a, b`:
/// odd-step traces cancel pairwise, so its average sign collapses as
/// `|⟨sign⟩| ≤ (2^{m-1} - ½)·|b-a|/a`.
pub fn example_10_2(a: f64, b: f64, beta: f64, m: usize) -> TransferMatrix {
    let mat = DMatrix::from_row_slice(4, 4, &[
        0.0, 1.0, -b, 0.0, //
        1.0, 0.0, 1.0, a, //
        -b, 1.0, 0.0, 1.0, //
        0.0, a, 1.0, 0.0,
    ]);
    TransferMatrix { beta, m, mat }
}
