use crate::certify::{DensityOperator, NoisyPreparation, PauliProduct, SiteFactor};
use crate::error::{Error, Result};
use crate::qc::ClusterScheme;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::collections::HashMap;

/// The group element `Π S_{β,k}^{x_k}` of the scheme state's stabilizer
/// group, as a signed product of single-site factors. Bookkeeping runs in
/// the binary-symplectic picture of the underlying cluster group (X at the
/// chosen sites, Z on their neighbourhoods, sign from reordering), followed
/// by the site-wise rotation into the scheme's frame:
/// `X ↦ Z_β`, `Z ↦ X`, `Y ↦ Y_β`.
pub fn stabilizer_element(scheme: &ClusterScheme, x: u64) -> PauliProduct {
    let n = scheme.n_sites();
    assert!(x >> n == 0, "selector beyond lattice");
    // accumulate exponent vectors of Π (X_i Z_{∂i})^{x_i} in product order,
    // tracking the (-1)^{v·u'} reordering sign
    let mut u = 0u64; // X exponents
    let mut v = 0u64; // Z exponents
    let mut sign = 1.0f64;
    for i in 0..n {
        if x >> i & 1 == 0 {
            continue;
        }
        let gen_u = 1u64 << i;
        let mut gen_v = 0u64;
        let (r, c) = (i / scheme.cols(), i % scheme.cols());
        if r > 0 {
            gen_v |= 1 << (i - scheme.cols());
        }
        if r + 1 < scheme.rows() {
            gen_v |= 1 << (i + scheme.cols());
        }
        if c > 0 {
            gen_v |= 1 << (i - 1);
        }
        if c + 1 < scheme.cols() {
            gen_v |= 1 << (i + 1);
        }
        // moving the generator's X block past the accumulated Z block
        if (v & gen_u).count_ones() % 2 == 1 {
            sign = -sign;
        }
        u ^= gen_u;
        v ^= gen_v;
    }
    // convert per-site X^u Z^v into Hermitian factors; each XZ site is
    // -i·Y, and the collected phases must recombine to ±1
    let mut n_y = 0u32;
    let mut factors = Vec::with_capacity(n);
    for k in 0..n {
        let beta = scheme.beta()[k];
        let f = match (u >> k & 1, v >> k & 1) {
            (0, 0) => SiteFactor::I,
            (1, 0) => SiteFactor::ZBeta(beta), // rotated image of X
            (0, 1) => SiteFactor::X,           // rotated image of Z
            _ => {
                n_y += 1;
                SiteFactor::YBeta(beta) // rotated image of Y = i·X·Z·(-i)
            }
        };
        factors.push(f);
    }
    // X^1Z^1 = -i·Y at each such site: fold (-i)^{n_y} into the sign
    debug_assert!(n_y % 2 == 0, "group element acquired a complex phase");
    if n_y % 4 == 2 {
        sign = -sign;
    }
    PauliProduct {
        coefficient: sign,
        factors,
    }
}

/// A uniformly random stabilizer-group element of the scheme state.
pub fn stabilizer_sample(scheme: &ClusterScheme, rng: &mut impl Rng) -> PauliProduct {
    let x = rng.gen_range(0..(1u64 << scheme.n_sites()));
    stabilizer_element(scheme, x)
}

/// Full group average `2^{-N} Σ_x s_x`, which is the projector onto the
/// scheme state; dense oracle for small lattices.
pub fn stabilizer_group_projector(scheme: &ClusterScheme) -> DMatrix<Complex64> {
    let n = scheme.n_sites();
    let dim = 1usize << n;
    let mut acc: DMatrix<Complex64> = DMatrix::zeros(dim, dim);
    for x in 0..(1u64 << n) {
        acc += stabilizer_element(scheme, x).dense();
    }
    acc / Complex64::new(dim as f64, 0.0)
}

/// Copies needed for an ε-accurate fidelity estimate with failure
/// probability δ: `m = ⌈ln(2/δ)·2/ε²⌉`.
pub fn rapid_sample_count(eps: f64, delta: f64) -> u64 {
    ((2.0 / delta).ln() * 2.0 / (eps * eps)).ceil() as u64
}

#[derive(Debug, Clone)]
pub struct RapidFidelityReport {
    pub estimate: f64,
    pub copies_used: u64,
}

/// Rapid fidelity estimation: measure a uniformly random stabilizer-group
/// element on each fresh copy and average the ±1 outcomes. The estimator is
/// exactly unbiased for `F(ρ,σ)` and within ε with probability `1-δ` at the
/// [`rapid_sample_count`] number of copies.
pub fn rapid_fidelity(
    prep: &mut NoisyPreparation,
    scheme: &ClusterScheme,
    eps: f64,
    delta: f64,
    rng: &mut impl Rng,
) -> Result<RapidFidelityReport> {
    let m = rapid_sample_count(eps, delta);
    if m > 1_000_000_000 {
        return Err(Error::Infeasible(format!("{m} copies requested")));
    }
    let n = scheme.n_sites();
    let mut acc = 0.0;
    match prep {
        NoisyPreparation::Density(rho) => {
            let mut cache: HashMap<u64, f64> = HashMap::new();
            for _ in 0..m {
                let x = rng.gen_range(0..(1u64 << n));
                let expect = *cache
                    .entry(x)
                    .or_insert_with(|| stabilizer_element(scheme, x).expectation(rho.matrix()));
                let p_plus = ((1.0 + expect) / 2.0).clamp(0.0, 1.0);
                acc += if rng.gen_range(0.0..1.0) < p_plus { 1.0 } else { -1.0 };
            }
        }
        NoisyPreparation::Sampler(sampler) => {
            for _ in 0..m {
                let s = stabilizer_sample(scheme, rng);
                // the sampler measures the unit-coefficient product; fold the
                // sign into the outcome
                let mut obs = s.clone();
                let sign = obs.coefficient;
                obs.coefficient = 1.0;
                acc += sign * sampler.measure(&obs, rng);
            }
        }
    }
    Ok(RapidFidelityReport {
        estimate: acc / m as f64,
        copies_used: m,
    })
}
