use crate::easing::LocalTerm;
use crate::error::{Error, Result};
use crate::qc::haar_orthogonal;
use crate::qmc::embed_two_site;
use nalgebra::DMatrix;
use rand::Rng;

/// Normalization of the spin operators in the Heisenberg couplings:
/// `Half` uses `S = σ/2` (singlet/triplet energies `-3J/4`, `J/4`),
/// `Pauli` uses the bare Pauli matrices (everything scaled by 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinConvention {
    Half,
    Pauli,
}

impl SpinConvention {
    fn scale(self) -> f64 {
        match self {
            SpinConvention::Half => 0.25,
            SpinConvention::Pauli => 1.0,
        }
    }
}

/// Two-qubit Heisenberg coupling `S⃗·S⃗ = scale·(XX + YY + ZZ)` as a real
/// 4×4 matrix.
pub fn heisenberg_dot(convention: SpinConvention) -> DMatrix<f64> {
    let s = convention.scale();
    DMatrix::from_row_slice(4, 4, &[
        s, 0.0, 0.0, 0.0, //
        0.0, -s, 2.0 * s, 0.0, //
        0.0, 2.0 * s, -s, 0.0, //
        0.0, 0.0, 0.0, s,
    ])
}

/// A random translation-invariant term that is on-site rotated away from a
/// manifestly stoquastic one: draw a symmetric matrix with uniform spectrum
/// in a Haar-random basis, delete its positive off-diagonal part, and
/// conjugate by a hidden Haar rotation on both sites. Returns the term and
/// the hidden rotation.
pub fn hidden_stoquastic(d: usize, rng: &mut impl Rng) -> (LocalTerm, DMatrix<f64>) {
    let dsq = d * d;
    let basis = haar_orthogonal(dsq, rng);
    let spectrum =
        DMatrix::from_diagonal(&nalgebra::DVector::from_fn(dsq, |_, _| rng.gen_range(-1.0..1.0)));
    let h = &basis * spectrum * basis.transpose();
    let mut stoq = (&h + h.transpose()).scale(0.5);
    for i in 0..dsq {
        for j in 0..dsq {
            if i != j && stoq[(i, j)] > 0.0 {
                stoq[(i, j)] = 0.0;
            }
        }
    }
    // re-symmetrize after the one-sided deletions (positive entries appear
    // symmetrically, so this only clears float noise)
    let stoq = (&stoq + stoq.transpose()).scale(0.5);
    let hidden = haar_orthogonal(d, rng);
    let c = hidden.kronecker(&hidden);
    let rotated = &c * stoq * c.transpose();
    let term = LocalTerm::new(d, (&rotated + rotated.transpose()).scale(0.5))
        .expect("symmetric by construction");
    (term, hidden)
}

/// Dimer-grouped nearest-neighbour term of the triangular-ladder Heisenberg
/// model with couplings `J₀` (lower legs), `J₁` (upper legs), `J₂` (rungs)
/// and `J₃` (the diagonal): local dimension 4, qubits of the left dimer on
/// the high bits.
pub fn jmodel_term(
    j0: f64,
    j1: f64,
    j2: f64,
    j3: f64,
    convention: SpinConvention,
) -> Result<LocalTerm> {
    let dot = heisenberg_dot(convention);
    let mut h = DMatrix::zeros(16, 16);
    // qubit layout: bit 3 = lower(L), bit 2 = upper(L), bit 1 = lower(R), bit 0 = upper(R)
    embed_two_site(&mut h, 4, 2, 3, 1, &dot.scale(j0)); // lower leg
    embed_two_site(&mut h, 4, 2, 2, 0, &dot.scale(j1)); // upper leg
    embed_two_site(&mut h, 4, 2, 3, 2, &dot.scale(j2)); // on-rung (left dimer)
    embed_two_site(&mut h, 4, 2, 2, 1, &dot.scale(j3)); // diagonal upper(L)-lower(R)
    LocalTerm::new(4, h)
}

/// Dimer-grouped nearest-neighbour term of the frustrated square ladder
/// with leg coupling `J∥`, rung coupling `J⊥` and cross coupling `J×`;
/// all couplings must be ≥ 0 (antiferromagnetic).
pub fn ladder_term(
    j_par: f64,
    j_perp: f64,
    j_cross: f64,
    convention: SpinConvention,
) -> Result<LocalTerm> {
    if j_par < 0.0 || j_perp < 0.0 || j_cross < 0.0 {
        return Err(Error::InvalidInput(
            "ladder couplings must be nonnegative".into(),
        ));
    }
    let dot = heisenberg_dot(convention);
    let mut h = DMatrix::zeros(16, 16);
    embed_two_site(&mut h, 4, 2, 3, 1, &dot.scale(j_par)); // lower leg
    embed_two_site(&mut h, 4, 2, 2, 0, &dot.scale(j_par)); // upper leg
    embed_two_site(&mut h, 4, 2, 3, 2, &dot.scale(j_perp)); // rung (left dimer)
    embed_two_site(&mut h, 4, 2, 3, 0, &dot.scale(j_cross)); // lower(L)-upper(R)
    embed_two_site(&mut h, 4, 2, 2, 1, &dot.scale(j_cross)); // upper(L)-lower(R)
    LocalTerm::new(4, h)
}
