use crate::error::{Error, Result};
use crate::qc::{Circuit, Gate};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_4, PI};

/// The discrete rotation-angle set used for the logical circuit family.
pub const LOGICAL_ANGLE_SET: [f64; 4] = [0.0, FRAC_PI_4, PI, PI + FRAC_PI_4];

/// A product-state quench scheme on an `rows × cols` square lattice: every
/// site starts in `(|0⟩ + e^{iβ}|1⟩)/√2`, a controlled-phase quench acts on
/// all lattice edges, and all sites are read out in the X basis. Site `(r,c)`
/// has index `r*cols + c`; `beta` is indexed accordingly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClusterScheme {
    rows: usize,
    cols: usize,
    beta: Vec<f64>,
}

impl ClusterScheme {
    pub fn new(rows: usize, cols: usize, beta: Vec<f64>) -> Result<Self> {
        if beta.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} angles for a {rows}×{cols} lattice, got {}",
                rows * cols,
                beta.len()
            )));
        }
        Ok(Self { rows, cols, beta })
    }

    pub fn uniform_zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            beta: vec![0.0; rows * cols],
        }
    }

    pub fn random_from_set(rows: usize, cols: usize, set: &[f64], rng: &mut impl rand::Rng) -> Self {
        let beta = (0..rows * cols)
            .map(|_| set[rng.gen_range(0..set.len())])
            .collect();
        Self { rows, cols, beta }
    }

    pub fn random_continuous(rows: usize, cols: usize, rng: &mut impl rand::Rng) -> Self {
        let beta = (0..rows * cols)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        Self { rows, cols, beta }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n_sites(&self) -> usize {
        self.rows * self.cols
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn site(&self, r: usize, c: usize) -> usize {
        r * self.cols + c
    }

    /// Nearest-neighbour edges of the lattice, each listed once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c + 1 < self.cols {
                    edges.push((self.site(r, c), self.site(r, c + 1)));
                }
                if r + 1 < self.rows {
                    edges.push((self.site(r, c), self.site(r + 1, c)));
                }
            }
        }
        edges
    }

    /// The scheme with all angles shifted by `π·x` for an outcome bitstring
    /// `x`; relabelling outcomes by `x` is equivalent to this shift.
    pub fn shifted_by(&self, x: u64) -> Self {
        let beta = self
            .beta
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                if x >> i & 1 == 1 {
                    (b + PI).rem_euclid(std::f64::consts::TAU)
                } else {
                    b
                }
            })
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            beta,
        }
    }
}

/// The equivalent circuit picture of the scheme: Hadamards, on-site `RZ(βᵢ)`
/// rotations, controlled-Z on every lattice edge, and a final Hadamard layer.
pub fn cluster_circuit(scheme: &ClusterScheme) -> Circuit {
    let n = scheme.n_sites();
    let mut gates = Vec::new();
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    for (q, &b) in scheme.beta().iter().enumerate() {
        if b != 0.0 {
            gates.push(Gate::RZ(q, b));
        }
    }
    for (a, b) in scheme.edges() {
        gates.push(Gate::CZ(a, b));
    }
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    Circuit::new(n, gates).expect("indices valid by construction")
}

/// The effective logical circuit driven by column-by-column X measurements
/// of the lattice (all bulk outcomes zero): starting from `|+⟩ⁿ`, each of the
/// `cols` rounds applies on-site `RZ(β)` rotations, controlled-Z along the
/// chain, and a Hadamard layer. `betas` has length `n*cols`, column-major
/// (angles of round `j` at `betas[j*n..(j+1)*n]`).
pub fn logical_circuit(n: usize, cols: usize, betas: &[f64]) -> Result<Circuit> {
    if betas.len() != n * cols {
        return Err(Error::InvalidInput(format!(
            "expected {} angles, got {}",
            n * cols,
            betas.len()
        )));
    }
    let mut gates = Vec::new();
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    for j in 0..cols {
        for q in 0..n {
            let b = betas[j * n + q];
            if b != 0.0 {
                gates.push(Gate::RZ(q, b));
            }
        }
        for q in 0..n.saturating_sub(1) {
            gates.push(Gate::CZ(q, q + 1));
        }
        for q in 0..n {
            gates.push(Gate::H(q));
        }
    }
    Circuit::new(n, gates)
}

/// Random logical-circuit angles drawn uniformly from [`LOGICAL_ANGLE_SET`].
pub fn random_logical_betas(n: usize, cols: usize, rng: &mut impl rand::Rng) -> Vec<f64> {
    (0..n * cols)
        .map(|_| LOGICAL_ANGLE_SET[rng.gen_range(0..4)])
        .collect()
}
