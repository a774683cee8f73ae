use crate::error::{Error, Result};
use crate::qc::{Circuit, Gate};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Haar-random `d×d` unitary: QR of a complex Ginibre matrix with the
/// triangular factor's diagonal fixed positive, which makes the
/// decomposition unique and the Q factor Haar-distributed.
pub fn haar_unitary(d: usize, rng: &mut impl Rng) -> DMatrix<Complex64> {
    let z = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    });
    let qr = z.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        let mag = rjj.norm();
        let phase = if mag > 0.0 {
            rjj / mag
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-random `d×d` real orthogonal matrix via the same sign-fixed QR.
pub fn haar_orthogonal(d: usize, rng: &mut impl Rng) -> DMatrix<f64> {
    let z = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = z.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        if r[(j, j)] < 0.0 {
            for i in 0..d {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}

/// A brickwork circuit of independent Haar-random two-qubit gates: each of
/// the `depth` layers is, with probability 1/2 each, the even brickwork
/// (gates on (0,1), (2,3), …) or the odd brickwork (gates on (1,2), (3,4), …,
/// not wrapping around). Requires an even number of qubits.
pub fn random_parallel_circuit(n: usize, depth: usize, rng: &mut impl Rng) -> Result<Circuit> {
    if n % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "parallel circuit needs even qubit count, got {n}"
        )));
    }
    let mut gates = Vec::new();
    for _ in 0..depth {
        let even = rng.gen_bool(0.5);
        let start = if even { 0 } else { 1 };
        let mut q = start;
        while q + 1 < n {
            let u = haar_unitary(4, rng);
            let mut matrix = vec![Complex64::new(0.0, 0.0); 16];
            for r in 0..4 {
                for c in 0..4 {
                    matrix[r * 4 + c] = u[(r, c)];
                }
            }
            gates.push(Gate::Unitary2 {
                q0: q,
                q1: q + 1,
                matrix,
            });
            q += 2;
        }
    }
    Circuit::new(n, gates)
}
