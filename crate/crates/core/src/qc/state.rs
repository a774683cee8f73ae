use crate::error::{Error, Result};
use crate::prob::ProbabilityVector;
use crate::qc::{Circuit, Gate};
use num_complex::Complex64;

/// Default cap on exact statevector width. 2²⁴ complex amplitudes are 256 MB,
/// the desk-scale ceiling; override with [`simulate_with_cap`].
pub const DEFAULT_QUBIT_CAP: usize = 24;

const NORM_TOL: f64 = 1e-10;

/// An exact `n`-qubit state: `2^n` complex amplitudes with unit ℓ₂ norm.
#[derive(Debug, Clone)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != 1usize << n_qubits {
            return Err(Error::InvalidInput(format!(
                "expected 2^{n_qubits} amplitudes, got {}",
                amplitudes.len()
            )));
        }
        let state = Self { n_qubits, amplitudes };
        let norm = state.norm_sq();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::Numerical(format!(
                "state norm² deviates from 1 by {}",
                (norm - 1.0).abs()
            )));
        }
        Ok(state)
    }

    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n_qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Self { n_qubits, amplitudes }
    }

    pub(crate) fn from_raw(n_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        Self { n_qubits, amplitudes }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Overlap `⟨other|self⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| b.conj() * a)
            .sum()
    }
}

#[inline]
fn single_qubit(amps: &mut [Complex64], q: usize, u: [[Complex64; 2]; 2]) {
    let bit = 1usize << q;
    let dim = amps.len();
    let mut base = 0usize;
    while base < dim {
        for offset in 0..bit {
            let i0 = base + offset;
            let i1 = i0 | bit;
            let a0 = amps[i0];
            let a1 = amps[i1];
            amps[i0] = u[0][0] * a0 + u[0][1] * a1;
            amps[i1] = u[1][0] * a0 + u[1][1] * a1;
        }
        base += bit << 1;
    }
}

pub(crate) fn apply_gate(state: &mut StateVector, gate: &Gate) {
    let n = state.n_qubits;
    let amps = &mut state.amplitudes;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match gate {
        Gate::H(q) => {
            let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            single_qubit(amps, *q, [[s, s], [s, -s]]);
        }
        Gate::X(q) => {
            single_qubit(amps, *q, [[zero, one], [one, zero]]);
        }
        Gate::Z(q) => {
            let bit = 1usize << q;
            for (i, a) in amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a = -*a;
                }
            }
        }
        Gate::T(q) => {
            let bit = 1usize << q;
            let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
            for (i, a) in amps.iter_mut().enumerate() {
                if i & bit != 0 {
                    *a *= phase;
                }
            }
        }
        Gate::RZ(q, theta) => {
            let bit = 1usize << q;
            let minus = Complex64::from_polar(1.0, -theta / 2.0);
            let plus = Complex64::from_polar(1.0, theta / 2.0);
            for (i, a) in amps.iter_mut().enumerate() {
                *a *= if i & bit == 0 { minus } else { plus };
            }
        }
        Gate::CNOT(c, t) => {
            let cbit = 1usize << c;
            let tbit = 1usize << t;
            for i in 0..amps.len() {
                if i & cbit != 0 && i & tbit == 0 {
                    amps.swap(i, i | tbit);
                }
            }
        }
        Gate::CZ(a, b) => {
            let mask = (1usize << a) | (1usize << b);
            for (i, amp) in amps.iter_mut().enumerate() {
                if i & mask == mask {
                    *amp = -*amp;
                }
            }
        }
        Gate::CCZ(a, b, c) => {
            let mask = (1usize << a) | (1usize << b) | (1usize << c);
            for (i, amp) in amps.iter_mut().enumerate() {
                if i & mask == mask {
                    *amp = -*amp;
                }
            }
        }
        Gate::GlobalXRot(phi) => {
            let c = Complex64::new(phi.cos(), 0.0);
            let s = Complex64::new(0.0, -phi.sin());
            for q in 0..n {
                single_qubit(amps, q, [[c, s], [s, c]]);
            }
        }
        Gate::GlobalMS(phi) => {
            let c = Complex64::new(phi.cos(), 0.0);
            let s = Complex64::new(0.0, -phi.sin());
            for i in 0..n {
                for j in (i + 1)..n {
                    let mask = (1usize << i) | (1usize << j);
                    for x in 0..amps.len() {
                        let y = x ^ mask;
                        if x < y {
                            let ax = amps[x];
                            let ay = amps[y];
                            amps[x] = c * ax + s * ay;
                            amps[y] = s * ax + c * ay;
                        }
                    }
                }
            }
        }
        Gate::Unitary2 { q0, q1, matrix } => {
            let b0 = 1usize << q0;
            let b1 = 1usize << q1;
            for i in 0..amps.len() {
                if i & b0 == 0 && i & b1 == 0 {
                    let idx = [i, i | b0, i | b1, i | b0 | b1];
                    let old = [amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]];
                    for (r, &target) in idx.iter().enumerate() {
                        let mut acc = zero;
                        for (cidx, &o) in old.iter().enumerate() {
                            acc += matrix[r * 4 + cidx] * o;
                        }
                        amps[target] = acc;
                    }
                }
            }
        }
    }
}

/// Apply `circuit` to `|0…0⟩` under the default width cap.
pub fn simulate(circuit: &Circuit) -> Result<StateVector> {
    simulate_with_cap(circuit, DEFAULT_QUBIT_CAP)
}

/// Apply `circuit` to `|0…0⟩`, failing if it is wider than `cap` qubits.
pub fn simulate_with_cap(circuit: &Circuit, cap: usize) -> Result<StateVector> {
    let n = circuit.n_qubits();
    if n > cap {
        return Err(Error::DimensionCap { requested: n, cap });
    }
    let mut state = StateVector::zero(n);
    for gate in circuit.gates() {
        apply_gate(&mut state, gate);
    }
    let norm = state.norm_sq();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::Numerical(format!(
            "simulation lost normalization by {}",
            (norm - 1.0).abs()
        )));
    }
    Ok(state)
}

/// Born-rule outcome distribution of a state: `p(x) = |⟨x|ψ⟩|²`.
pub fn born_distribution(state: &StateVector) -> ProbabilityVector {
    let mut probs: Vec<f64> = state.amplitudes.iter().map(|a| a.norm_sqr()).collect();
    // The amplitudes are normalized within tolerance; remove the residual so
    // downstream consumers can rely on exact unit mass.
    let sum: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= sum;
    }
    ProbabilityVector::new(probs).expect("normalized by construction")
}
