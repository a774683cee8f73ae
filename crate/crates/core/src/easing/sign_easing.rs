use crate::easing::{conjugate_local, LocalTerm};
use crate::error::Result;
use crate::qmc::{average_sign_exact, periodic_chain, TransferMatrix};
use nalgebra::DMatrix;

/// Exact average sign of the periodic chain built from a local term, before
/// and after rotating every site by `O`: the end-to-end check that a
/// nonstoquasticity-optimized basis actually helps the sampler.
pub fn sign_after_easing(
    term: &LocalTerm,
    o: &DMatrix<f64>,
    n_sites: usize,
    beta: f64,
    m: usize,
) -> Result<(f64, f64)> {
    let before = periodic_chain(term.d(), n_sites, term.matrix())?;
    let rotated = conjugate_local(term, o)?;
    let after = periodic_chain(term.d(), n_sites, rotated.matrix())?;
    let sign_before =
        average_sign_exact(&TransferMatrix::from_hamiltonian(&before, beta, m)?)?;
    let sign_after = average_sign_exact(&TransferMatrix::from_hamiltonian(&after, beta, m)?)?;
    Ok((sign_before, sign_after))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::easing::{cg_minimize, ladder_term, Init, OptimizerConfig, SpinConvention};
    use crate::SplitRng;

    #[test]
    fn identity_rotation_changes_nothing() {
        let term = ladder_term(1.0, 0.8, 0.4, SpinConvention::Half).unwrap();
        let id = DMatrix::identity(4, 4);
        let (before, after) = sign_after_easing(&term, &id, 3, 1.0, 50).unwrap();
        assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn stoquastic_term_keeps_unit_sign() {
        // -XX term: entrywise nonpositive off-diagonals on the whole chain
        let h = DMatrix::from_row_slice(4, 4, &[
            0.0, 0.0, 0.0, -1.0, //
            0.0, 0.0, -1.0, 0.0, //
            0.0, -1.0, 0.0, 0.0, //
            -1.0, 0.0, 0.0, 0.0,
        ]);
        let term = LocalTerm::new(2, h).unwrap();
        let id = DMatrix::identity(2, 2);
        let (before, after) = sign_after_easing(&term, &id, 6, 1.0, 100).unwrap();
        assert_eq!(before, 1.0);
        assert_eq!(after, 1.0);
    }

    #[test]
    fn optimized_basis_eases_the_frustrated_ladder() {
        // fully frustrated point J× = J∥: the optimized on-site basis must
        // not worsen, and should strictly improve, log(1/sign) on the 2×4
        // ladder at β = 1, m = 100
        let term = ladder_term(1.0, 0.8, 1.0, SpinConvention::Half).unwrap();
        let mut rng = SplitRng::new(230);
        let config = OptimizerConfig {
            alpha: 40.0,
            max_iters: 800,
            restarts: 3,
            init: Init::PerturbedIdentity(0.05),
            ..Default::default()
        };
        let result = cg_minimize(&term, &config, &mut rng).unwrap();
        let (before, after) =
            sign_after_easing(&term, &result.rotation, 4, 1.0, 100).unwrap();
        let log_before = (1.0 / before).ln();
        let log_after = (1.0 / after).ln();
        assert!(
            log_after <= log_before + 1e-9,
            "easing worsened the sign: {log_before} -> {log_after}"
        );
        assert!(
            log_after < log_before - 1e-6,
            "no strict improvement: {log_before} -> {log_after}"
        );
    }
}
