use crate::error::{Error, Result};
use crate::qc::{Circuit, Gate};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

const SYM_TOL: f64 = 1e-12;
const ANGLE_TOL: f64 = 1e-9;

/// Angle weights of a commuting (IQP) circuit: a symmetric `n×n` matrix `W`
/// whose off-diagonal entries weight `XᵢXⱼ` interactions and whose diagonal
/// weights on-site `Xᵢ` rotations. An optional finite angle set constrains
/// the entries (mod 2π).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IQPWeights {
    n: usize,
    w: Vec<f64>,
    angle_set: Option<Vec<f64>>,
}

impl IQPWeights {
    pub fn new(n: usize, w: Vec<f64>, angle_set: Option<Vec<f64>>) -> Result<Self> {
        if w.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "weight matrix must be {n}×{n}"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if (w[i * n + j] - w[j * n + i]).abs() > SYM_TOL {
                    return Err(Error::InvalidInput("weight matrix not symmetric".into()));
                }
            }
        }
        if let Some(set) = &angle_set {
            for &angle in &w {
                let a = angle.rem_euclid(TAU);
                let ok = set.iter().any(|&s| {
                    let d = (a - s.rem_euclid(TAU)).abs();
                    d < ANGLE_TOL || (TAU - d) < ANGLE_TOL
                });
                if !ok {
                    return Err(Error::InvalidInput(format!(
                        "angle {angle} not in the declared angle set"
                    )));
                }
            }
        }
        Ok(Self { n, w, angle_set })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            w: vec![0.0; n * n],
            angle_set: None,
        }
    }

    /// Random weights with entries drawn uniformly from `set` (upper triangle
    /// and diagonal drawn independently, then mirrored).
    pub fn random_from_set(n: usize, set: &[f64], rng: &mut impl rand::Rng) -> Self {
        let mut w = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let a = set[rng.gen_range(0..set.len())];
                w[i * n + j] = a;
                w[j * n + i] = a;
            }
        }
        Self {
            n,
            w,
            angle_set: Some(set.to_vec()),
        }
    }

    /// Random weights with continuous entries uniform on `[0, 2π)`.
    pub fn random_continuous(n: usize, rng: &mut impl rand::Rng) -> Self {
        let mut w = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let a = rng.gen_range(0.0..TAU);
                w[i * n + j] = a;
                w[j * n + i] = a;
            }
        }
        Self { n, w, angle_set: None }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.w[i * self.n + j]
    }

    pub(crate) fn set_entry(&mut self, i: usize, j: usize, value: f64) {
        self.w[i * self.n + j] = value;
        self.w[j * self.n + i] = value;
    }

    pub fn angle_set(&self) -> Option<&[f64]> {
        self.angle_set.as_deref()
    }
}

/// The circuit `H⊗ⁿ · exp(i[Σ wᵢⱼ ZᵢZⱼ + Σ wᵢᵢ Zᵢ]) · H⊗ⁿ`, which equals
/// `exp(i[Σ wᵢⱼ XᵢXⱼ + Σ wᵢᵢ Xᵢ])` including the global phase: the diagonal
/// phases are compiled as `exp(iwZ) = RZ(-2w)` and CNOT conjugations.
pub fn iqp_circuit(w: &IQPWeights) -> Circuit {
    let n = w.n();
    let mut gates = Vec::new();
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    for i in 0..n {
        if w.get(i, i) != 0.0 {
            gates.push(Gate::RZ(i, -2.0 * w.get(i, i)));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if w.get(i, j) != 0.0 {
                gates.push(Gate::CNOT(i, j));
                gates.push(Gate::RZ(j, -2.0 * w.get(i, j)));
                gates.push(Gate::CNOT(i, j));
            }
        }
    }
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    Circuit::new(n, gates).expect("indices valid by construction")
}

/// Imaginary-temperature Ising partition function
/// `Z_W = Σ_{z∈{±1}ⁿ} exp(i[Σ_{i<j} wᵢⱼ zᵢzⱼ + Σᵢ wᵢᵢ zᵢ])`,
/// which satisfies `⟨0|C_W|0⟩ = Z_W / 2ⁿ`.
pub fn ising_partition_function(w: &IQPWeights) -> Result<Complex64> {
    let n = w.n();
    if n > 24 {
        return Err(Error::DimensionCap { requested: n, cap: 24 });
    }
    let mut z = Complex64::new(0.0, 0.0);
    for bits in 0u64..(1u64 << n) {
        let spin = |i: usize| -> f64 {
            if bits >> i & 1 == 0 {
                1.0
            } else {
                -1.0
            }
        };
        let mut phase = 0.0;
        for i in 0..n {
            phase += w.get(i, i) * spin(i);
            for j in (i + 1)..n {
                phase += w.get(i, j) * spin(i) * spin(j);
            }
        }
        z += Complex64::from_polar(1.0, phase);
    }
    Ok(z)
}

/// A degree-3 Boolean polynomial over F₂ given by indicator sets of cubic,
/// quadratic and linear monomials.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeThreePolynomial {
    n: usize,
    alpha: Vec<(usize, usize, usize)>,
    beta: Vec<(usize, usize)>,
    gamma: Vec<usize>,
}

impl DegreeThreePolynomial {
    pub fn new(
        n: usize,
        alpha: Vec<(usize, usize, usize)>,
        beta: Vec<(usize, usize)>,
        gamma: Vec<usize>,
    ) -> Result<Self> {
        for &(i, j, k) in &alpha {
            if i == j || j == k || i == k || i >= n || j >= n || k >= n {
                return Err(Error::InvalidInput(format!(
                    "bad cubic monomial ({i},{j},{k})"
                )));
            }
        }
        for &(i, j) in &beta {
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidInput(format!("bad quadratic monomial ({i},{j})")));
            }
        }
        for &i in &gamma {
            if i >= n {
                return Err(Error::InvalidInput(format!("bad linear monomial {i}")));
            }
        }
        Ok(Self { n, alpha, beta, gamma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: u64) -> u8 {
        let bit = |i: usize| (x >> i & 1) as u8;
        let mut acc = 0u8;
        for &(i, j, k) in &self.alpha {
            acc ^= bit(i) & bit(j) & bit(k);
        }
        for &(i, j) in &self.beta {
            acc ^= bit(i) & bit(j);
        }
        for &i in &self.gamma {
            acc ^= bit(i);
        }
        acc
    }
}

/// Normalized gap `2⁻ⁿ (#{f=0} − #{f=1})` of a degree-3 polynomial; equals
/// the all-zero output amplitude of [`polynomial_circuit`].
pub fn ngap(f: &DegreeThreePolynomial) -> Result<f64> {
    let n = f.n();
    if n > 24 {
        return Err(Error::DimensionCap { requested: n, cap: 24 });
    }
    let mut gap: i64 = 0;
    for x in 0u64..(1u64 << n) {
        gap += if f.eval(x) == 0 { 1 } else { -1 };
    }
    Ok(gap as f64 / (1u64 << n) as f64)
}

/// The commuting circuit of a degree-3 polynomial: a CCZ/CZ/Z phase oracle
/// between Hadamard layers.
pub fn polynomial_circuit(f: &DegreeThreePolynomial) -> Circuit {
    let n = f.n();
    let mut gates = Vec::new();
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    for &(i, j, k) in &f.alpha {
        gates.push(Gate::CCZ(i, j, k));
    }
    for &(i, j) in &f.beta {
        gates.push(Gate::CZ(i, j));
    }
    for &i in &f.gamma {
        gates.push(Gate::Z(i));
    }
    for q in 0..n {
        gates.push(Gate::H(q));
    }
    Circuit::new(n, gates).expect("indices validated on construction")
}
