use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A quantum gate. Angles are in radians.
///
/// `RZ(q, θ)` is `exp(-iθZ/2)`; `GlobalXRot(φ)` is `exp(-iφ Σᵢ Xᵢ)` and
/// `GlobalMS(φ)` the global Mølmer-Sørensen gate `exp(-iφ Σᵢ<ⱼ XᵢXⱼ)`.
/// `Unitary2` carries an arbitrary two-qubit unitary in the local basis
/// `|b₁b₀⟩` (bit of `q0` least significant), row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    T(usize),
    CNOT(usize, usize),
    CZ(usize, usize),
    CCZ(usize, usize, usize),
    RZ(usize, f64),
    GlobalXRot(f64),
    GlobalMS(f64),
    Unitary2 {
        q0: usize,
        q1: usize,
        /// 4×4 row-major unitary on the local basis |b₁b₀⟩.
        matrix: Vec<Complex64>,
    },
}

impl Gate {
    /// Qubit indices the gate acts on (empty for global gates, which act on
    /// all qubits of the circuit).
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q) | Gate::X(q) | Gate::Z(q) | Gate::T(q) | Gate::RZ(q, _) => vec![*q],
            Gate::CNOT(a, b) | Gate::CZ(a, b) => vec![*a, *b],
            Gate::CCZ(a, b, c) => vec![*a, *b, *c],
            Gate::GlobalXRot(_) | Gate::GlobalMS(_) => vec![],
            Gate::Unitary2 { q0, q1, .. } => vec![*q0, *q1],
        }
    }

    pub fn is_global(&self) -> bool {
        matches!(self, Gate::GlobalXRot(_) | Gate::GlobalMS(_))
    }
}
