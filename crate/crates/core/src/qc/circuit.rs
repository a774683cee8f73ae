use crate::error::{Error, Result};
use crate::qc::Gate;
use serde::{Deserialize, Serialize};

/// An ordered gate program on `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Validates that every gate addresses distinct qubits below `n_qubits`.
    pub fn new(n_qubits: usize, gates: Vec<Gate>) -> Result<Self> {
        for gate in &gates {
            let qs = gate.qubits();
            for (i, &q) in qs.iter().enumerate() {
                if q >= n_qubits {
                    return Err(Error::MalformedGate(format!(
                        "{gate:?} addresses qubit {q} on a {n_qubits}-qubit circuit"
                    )));
                }
                if qs[..i].contains(&q) {
                    return Err(Error::MalformedGate(format!(
                        "{gate:?} addresses qubit {q} twice"
                    )));
                }
            }
            if gate.is_global() && n_qubits == 0 {
                return Err(Error::MalformedGate("global gate on empty register".into()));
            }
            if let Gate::Unitary2 { matrix, .. } = gate {
                if matrix.len() != 16 {
                    return Err(Error::MalformedGate(format!(
                        "two-qubit unitary needs 16 entries, got {}",
                        matrix.len()
                    )));
                }
            }
        }
        Ok(Self { n_qubits, gates })
    }

    pub fn identity(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        let probe = Circuit::new(self.n_qubits, vec![gate])?;
        self.gates.extend(probe.gates);
        Ok(())
    }
}
