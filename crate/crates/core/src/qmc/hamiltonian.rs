use crate::error::{Error, Result};
use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use std::collections::BTreeMap;

const SYM_TOL: f64 = 1e-10;

/// A dense real symmetric Hamiltonian, optionally carrying a qubit count
/// when its dimension is `2ⁿ`.
#[derive(Debug, Clone)]
pub struct RealHamiltonian {
    mat: DMatrix<f64>,
    n_qubits: Option<usize>,
}

impl RealHamiltonian {
    pub fn new(mat: DMatrix<f64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::InvalidInput("Hamiltonian must be square".into()));
        }
        let dev = (&mat - mat.transpose())
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max);
        if dev > SYM_TOL {
            return Err(Error::InvalidInput(format!(
                "Hamiltonian not symmetric (deviation {dev})"
            )));
        }
        let dim = mat.nrows();
        let n_qubits = if dim.is_power_of_two() {
            Some(dim.trailing_zeros() as usize)
        } else {
            None
        };
        Ok(Self { mat, n_qubits })
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn n_qubits(&self) -> Option<usize> {
        self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    /// Strictly positive off-diagonal part (entries above the float-noise
    /// threshold 1e-12).
    pub fn positive_part(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| {
            if i != j && self.mat[(i, j)] > 1e-12 {
                self.mat[(i, j)]
            } else {
                0.0
            }
        })
    }
}

/// Add a one-site operator `m` (d×d) acting on site `i` of an `n`-site
/// chain with local dimension `d`, site 0 on the least-significant digit.
pub fn embed_one_site(h: &mut DMatrix<f64>, n: usize, d: usize, i: usize, m: &DMatrix<f64>) {
    let dim = d.pow(n as u32);
    let stride = d.pow(i as u32);
    for x in 0..dim {
        let a = x / stride % d;
        let rest = x - a * stride;
        for ap in 0..d {
            let v = m[(ap, a)];
            if v != 0.0 {
                h[(rest + ap * stride, x)] += v;
            }
        }
    }
}

/// Add a two-site operator `m` (d²×d², row index `a·d + b` for sites
/// `(i, j)`) acting on sites `i ≠ j` of an `n`-site chain.
pub fn embed_two_site(
    h: &mut DMatrix<f64>,
    n: usize,
    d: usize,
    i: usize,
    j: usize,
    m: &DMatrix<f64>,
) {
    assert!(i != j && i < n && j < n);
    let dim = d.pow(n as u32);
    let si = d.pow(i as u32);
    let sj = d.pow(j as u32);
    for x in 0..dim {
        let a = x / si % d;
        let b = x / sj % d;
        let rest = x - a * si - b * sj;
        let col = a * d + b;
        for ap in 0..d {
            for bp in 0..d {
                let v = m[(ap * d + bp, col)];
                if v != 0.0 {
                    h[(rest + ap * si + bp * sj, x)] += v;
                }
            }
        }
    }
}

fn xx() -> DMatrix<f64> {
    DMatrix::from_row_slice(4, 4, &[
        0.0, 0.0, 0.0, 1.0, //
        0.0, 0.0, 1.0, 0.0, //
        0.0, 1.0, 0.0, 0.0, //
        1.0, 0.0, 0.0, 0.0,
    ])
}

fn yy() -> DMatrix<f64> {
    DMatrix::from_row_slice(4, 4, &[
        0.0, 0.0, 0.0, -1.0, //
        0.0, 0.0, 1.0, 0.0, //
        0.0, 1.0, 0.0, 0.0, //
        -1.0, 0.0, 0.0, 0.0,
    ])
}

fn zz() -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&[1.0, -1.0, -1.0, 1.0]))
}

fn xz() -> DMatrix<f64> {
    // X on the first (row-major high) site, Z on the second
    DMatrix::from_row_slice(4, 4, &[
        0.0, 0.0, 1.0, 0.0, //
        0.0, 0.0, 0.0, -1.0, //
        1.0, 0.0, 0.0, 0.0, //
        0.0, -1.0, 0.0, 0.0,
    ])
}

/// A real 2-local qubit Hamiltonian with 1-local fields, given by sparse
/// coefficient vectors: `Σ_{i<j} (a XᵢXⱼ + b YᵢYⱼ + c ZᵢZⱼ) +
/// Σ_{i≠j} x_{ij} XᵢZⱼ + Σᵢ (αᵢXᵢ + γᵢZᵢ)`.
#[derive(Debug, Clone, Default)]
pub struct TwoLocalSpec {
    pub n: usize,
    /// keyed by (i, j) with i < j
    pub xx: BTreeMap<(usize, usize), f64>,
    pub yy: BTreeMap<(usize, usize), f64>,
    pub zz: BTreeMap<(usize, usize), f64>,
    /// keyed by directed (i, j), i ≠ j: X on i, Z on j
    pub xz: BTreeMap<(usize, usize), f64>,
    pub x_field: Vec<f64>,
    pub z_field: Vec<f64>,
}

impl TwoLocalSpec {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            x_field: vec![0.0; n],
            z_field: vec![0.0; n],
            ..Default::default()
        }
    }

    pub fn add_xx(&mut self, i: usize, j: usize, w: f64) {
        *self.xx.entry((i.min(j), i.max(j))).or_insert(0.0) += w;
    }

    pub fn add_yy(&mut self, i: usize, j: usize, w: f64) {
        *self.yy.entry((i.min(j), i.max(j))).or_insert(0.0) += w;
    }

    pub fn add_zz(&mut self, i: usize, j: usize, w: f64) {
        *self.zz.entry((i.min(j), i.max(j))).or_insert(0.0) += w;
    }

    /// `w·XᵢZⱼ` (X on `i`, Z on `j`).
    pub fn add_xz(&mut self, i: usize, j: usize, w: f64) {
        assert!(i != j);
        *self.xz.entry((i, j)).or_insert(0.0) += w;
    }

    /// XZ neighbourhood of the X-carrying site `i`.
    pub fn xz_neighbours(&self, i: usize) -> Vec<(usize, f64)> {
        self.xz
            .range((i, 0)..(i, usize::MAX))
            .filter(|((_, j), w)| *j != i && **w != 0.0)
            .map(|((_, j), w)| (*j, *w))
            .collect()
    }

    /// Dense matrix on `2ⁿ` dimensions.
    pub fn dense(&self) -> Result<RealHamiltonian> {
        if self.n > 20 {
            return Err(Error::DimensionCap {
                requested: self.n,
                cap: 20,
            });
        }
        let dim = 1usize << self.n;
        let mut h = DMatrix::zeros(dim, dim);
        let (mxx, myy, mzz, mxz) = (xx(), yy(), zz(), xz());
        for (&(i, j), &w) in &self.xx {
            if w != 0.0 {
                embed_two_site(&mut h, self.n, 2, i, j, &mxx.scale(w));
            }
        }
        for (&(i, j), &w) in &self.yy {
            if w != 0.0 {
                embed_two_site(&mut h, self.n, 2, i, j, &myy.scale(w));
            }
        }
        for (&(i, j), &w) in &self.zz {
            if w != 0.0 {
                embed_two_site(&mut h, self.n, 2, i, j, &mzz.scale(w));
            }
        }
        for (&(i, j), &w) in &self.xz {
            if w != 0.0 {
                // xz() has X on the row-major first site
                embed_two_site(&mut h, self.n, 2, i, j, &mxz.scale(w))
            }
        }
        let mx = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let mz = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        for i in 0..self.n {
            if self.x_field[i] != 0.0 {
                embed_one_site(&mut h, self.n, 2, i, &mx.scale(self.x_field[i]));
            }
            if self.z_field[i] != 0.0 {
                embed_one_site(&mut h, self.n, 2, i, &mz.scale(self.z_field[i]));
            }
        }
        RealHamiltonian::new(h)
    }
}

/// Translation-invariant chain `Σᵢ Tᵢ(h)` of a nearest-neighbour term `h`
/// (d²×d², row index `a·d+b` on sites `(i, i+1)`) on a periodic ring of
/// `n_sites` sites.
pub fn periodic_chain(d: usize, n_sites: usize, h: &DMatrix<f64>) -> Result<RealHamiltonian> {
    if h.nrows() != d * d || h.ncols() != d * d {
        return Err(Error::InvalidInput("term must be d²×d²".into()));
    }
    let dim = d
        .checked_pow(n_sites as u32)
        .filter(|&x| x <= 1 << 12)
        .ok_or(Error::DimensionCap {
            requested: n_sites,
            cap: 12,
        })?;
    let mut mat = DMatrix::zeros(dim, dim);
    for i in 0..n_sites {
        embed_two_site(&mut mat, n_sites, d, i, (i + 1) % n_sites, h);
    }
    RealHamiltonian::new(mat)
}

/// The sign-problem-free yet highly nonstoquastic example: on `n` qubits,
/// `1 + Σ_{i<j} [-½(XᵢXⱼ - YᵢYⱼ)] + Σᵢ Xᵢ`. Its positive off-diagonal
/// weight is `ν₁ = n`, yet every closed world-line path carries an even
/// number of negative steps.
pub fn example_10_1(n: usize) -> Result<RealHamiltonian> {
    if n > 10 {
        return Err(Error::DimensionCap { requested: n, cap: 10 });
    }
    let dim = 1usize << n;
    let mut h = DMatrix::identity(dim, dim);
    let coupling = (xx() - yy()).scale(-0.5);
    for i in 0..n {
        for j in (i + 1)..n {
            embed_two_site(&mut h, n, 2, i, j, &coupling);
        }
    }
    let mx = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    for i in 0..n {
        embed_one_site(&mut h, n, 2, i, &mx);
    }
    RealHamiltonian::new(h)
}

/// The one-parameter rescaled family `H_α = (H - H₊ + α·H₊)/‖H₊‖₁` with
/// `H₊` the strictly positive off-diagonal part, so that `ν₁(H_α) = α/D`.
pub fn h_alpha(h: &RealHamiltonian, alpha: f64) -> Result<RealHamiltonian> {
    let pos = h.positive_part();
    let norm: f64 = pos.iter().map(|v| v.abs()).sum();
    if norm == 0.0 {
        return Err(Error::InvalidInput(
            "Hamiltonian is already stoquastic; the rescaled family is undefined".into(),
        ));
    }
    let mat = (h.matrix() - &pos + pos.scale(alpha)).unscale(norm);
    RealHamiltonian::new(mat)
}

/// A random translation-invariant nearest-neighbour qubit chain: one
/// symmetrized Gaussian 4×4 term repeated around a periodic ring.
pub fn random_translation_invariant_qubit_chain(
    n: usize,
    rng: &mut impl Rng,
) -> Result<RealHamiltonian> {
    let g = DMatrix::from_fn(4, 4, |_, _| rng.sample::<f64, _>(StandardNormal));
    let h4 = (&g + g.transpose()).scale(0.5);
    periodic_chain(2, n, &h4)
}
