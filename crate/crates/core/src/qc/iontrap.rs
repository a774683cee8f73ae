use crate::error::{Error, Result};
use crate::qc::IQPWeights;
use rand::Rng;
use std::f64::consts::{PI, TAU};

/// The `π/2^k`-spaced angle set on the circle: `{l·π/2^k mod 2π}` for
/// `l = 0, …, 2^{k+1}-1`, i.e. `{0, ±π/2^k, …, ±(2^k-1)π/2^k, π}`.
pub fn iontrap_angle_set(k: u32) -> Vec<f64> {
    let step = PI / (1u64 << k) as f64;
    (0..(2u64 << k)).map(|l| (l as f64 * step).rem_euclid(TAU)).collect()
}

/// Weight matrix generated by one pass of the decoupling sequence for given
/// Z-flip draws `z[l][qubit]` (`l = 0, …, k`): every edge and vertex weight
/// accumulates `Σ_{l=1}^{k+1} (-1)^{x(l)} π/2^l` with `x(l)` the cumulative
/// flip parity of its endpoints up to step `l`, plus the final deterministic
/// `π/2^{k+1}` shift of the closing global rotation.
pub fn prescription_weights(n: usize, k: u32, z: &[Vec<u8>]) -> Result<Vec<f64>> {
    if z.len() != (k + 1) as usize || z.iter().any(|zl| zl.len() != n) {
        return Err(Error::InvalidInput(format!(
            "need {} Z-flip vectors of length {n}",
            k + 1
        )));
    }
    let mut w = vec![0.0f64; n * n];
    let closing = PI / (2u64 << k) as f64;
    // cumulative parities per qubit
    let mut parity = vec![0u8; n];
    for (l, zl) in z.iter().enumerate() {
        let angle = PI / (1u64 << (l + 1)) as f64;
        for i in 0..n {
            parity[i] ^= zl[i];
        }
        for i in 0..n {
            for j in i..n {
                let flip = if i == j { parity[i] } else { parity[i] ^ parity[j] };
                w[i * n + j] += if flip == 1 { -angle } else { angle };
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            w[i * n + j] += closing;
            w[i * n + j] = w[i * n + j].rem_euclid(TAU);
            w[j * n + i] = w[i * n + j];
        }
    }
    Ok(w)
}

/// Weights produced by the global-gate decoupling sequence, repeated
/// `repetitions` times with fresh randomness; accumulated angles live on the
/// `π/2^k` grid [`iontrap_angle_set`]. One pass makes each column of the
/// matrix marginally iid uniform on that grid; repeating supplies enough
/// random bits to decouple the columns. The simulation is symbolic on the
/// weight matrix, so wide instances cost `O(repetitions · k · n²)`.
pub fn iontrap_weights(
    n: usize,
    k: u32,
    repetitions: usize,
    rng: &mut impl Rng,
) -> Result<IQPWeights> {
    if k == 0 {
        return Err(Error::InvalidInput("decoupling needs k ≥ 1".into()));
    }
    let mut acc = vec![0.0f64; n * n];
    for _ in 0..repetitions {
        let z: Vec<Vec<u8>> = (0..=k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..2) as u8).collect())
            .collect();
        let w = prescription_weights(n, k, &z)?;
        for (a, b) in acc.iter_mut().zip(&w) {
            *a = (*a + *b).rem_euclid(TAU);
        }
    }
    // snap to the grid to absorb float drift before set-membership validation
    let step = PI / (1u64 << k) as f64;
    for a in acc.iter_mut() {
        *a = ((*a / step).round() * step).rem_euclid(TAU);
    }
    IQPWeights::new(n, acc, Some(iontrap_angle_set(k)))
}

/// Depth-economical variant using subset-restricted entangling gates: round
/// `l = 2, …, n` runs the decoupling sequence on the first `l` qubits (edges
/// only), and one closing round randomizes the on-site weights. Qubits are
/// taken in index order.
pub fn iontrap_weights_restricted(n: usize, k: u32, rng: &mut impl Rng) -> Result<IQPWeights> {
    if k == 0 {
        return Err(Error::InvalidInput("decoupling needs k ≥ 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidInput("need at least two qubits".into()));
    }
    let mut acc = vec![0.0f64; n * n];
    let closing = PI / (2u64 << k) as f64;
    for l in 2..=n {
        // one pass of the sequence with the entangler restricted to 0..l
        let mut parity = vec![0u8; l];
        for step_idx in 0..=k {
            let angle = PI / (1u64 << (step_idx + 1)) as f64;
            for p in parity.iter_mut() {
                *p ^= rng.gen_range(0..2) as u8;
            }
            for i in 0..l {
                for j in (i + 1)..l {
                    let sign = if parity[i] ^ parity[j] == 1 { -1.0 } else { 1.0 };
                    acc[i * n + j] += sign * angle;
                }
            }
        }
        for i in 0..l {
            for j in (i + 1)..l {
                acc[i * n + j] += closing;
            }
        }
    }
    // closing round for the on-site weights via single-qubit rotations
    let mut parity = vec![0u8; n];
    for step_idx in 0..=k {
        let angle = PI / (1u64 << (step_idx + 1)) as f64;
        for (i, p) in parity.iter_mut().enumerate() {
            *p ^= rng.gen_range(0..2) as u8;
            let sign = if *p == 1 { -1.0 } else { 1.0 };
            acc[i * n + i] += sign * angle;
        }
    }
    for i in 0..n {
        acc[i * n + i] += closing;
    }
    let step = PI / (1u64 << k) as f64;
    for i in 0..n {
        for j in i..n {
            let v = (acc[i * n + j] / step).round() * step;
            acc[i * n + j] = v.rem_euclid(TAU);
            acc[j * n + i] = acc[i * n + j];
        }
    }
    IQPWeights::new(n, acc, Some(iontrap_angle_set(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SplitRng;

    fn angle_index(a: f64, k: u32) -> usize {
        let step = PI / (1u64 << k) as f64;
        let idx = (a.rem_euclid(TAU) / step).round() as usize;
        idx % (2usize << k)
    }

    #[test]
    fn all_zero_flips_give_pi() {
        // With no random flips every step adds its full angle:
        // Σ_{l=1}^{k+1} π/2^l + π/2^{k+1} = π on every entry.
        for k in 1..=3u32 {
            let n = 3;
            let z = vec![vec![0u8; n]; (k + 1) as usize];
            let w = prescription_weights(n, k, &z).unwrap();
            for &entry in &w {
                assert!((entry - PI).abs() < 1e-12, "k={k}: {entry}");
            }
        }
    }

    #[test]
    fn decomposition_matches_direct_sum() {
        // For fixed flips, each weight is Σ_l (-1)^{cumulative parity} π/2^l
        // plus the closing shift; recompute independently for random draws.
        let mut rng = SplitRng::new(8);
        use rand::Rng;
        let (n, k) = (4usize, 2u32);
        for _ in 0..20 {
            let z: Vec<Vec<u8>> = (0..=k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..2) as u8).collect())
                .collect();
            let w = prescription_weights(n, k, &z).unwrap();
            for i in 0..n {
                for j in i..n {
                    let mut expect = PI / (2u64 << k) as f64;
                    let mut cum = 0u8;
                    for (l, zl) in z.iter().enumerate() {
                        cum ^= zl[i] ^ if i == j { 0 } else { zl[j] };
                        let sign = if cum == 1 { -1.0 } else { 1.0 };
                        expect += sign * PI / (1u64 << (l + 1)) as f64;
                    }
                    let got = w[i * n + j];
                    let diff = (got - expect.rem_euclid(TAU)).abs();
                    assert!(diff < 1e-12 || (diff - TAU).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn k1_column_weights_are_uniform_on_the_grid() {
        // χ² uniformity of the marginal distribution over {0, ±π/2, π};
        // 10⁴ single-pass draws, requiring p > 0.01 (χ²₃ quantile 11.345).
        let mut rng = SplitRng::new(21);
        let (n, k) = (4usize, 1u32);
        let set_size = 2usize << k;
        let mut counts = vec![0u64; set_size];
        let draws = 10_000;
        for _ in 0..draws {
            let w = iontrap_weights(n, k, 1, &mut rng).unwrap();
            // inspect the couplings of column 0
            for i in 0..n {
                let idx = angle_index(w.get(i, 0), k);
                counts[idx] += 1;
            }
        }
        let total: u64 = counts.iter().sum();
        let expected = total as f64 / set_size as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 3 degrees of freedom; p > 0.01 ⇔ χ² < 11.345
        assert!(chi2 < 11.345, "χ² = {chi2}, counts {counts:?}");
    }

    #[test]
    fn repetition_keeps_angles_on_grid() {
        let mut rng = SplitRng::new(22);
        let w = iontrap_weights(5, 2, 5, &mut rng).unwrap();
        let set = iontrap_angle_set(2);
        for i in 0..5 {
            for j in 0..5 {
                let a = w.get(i, j).rem_euclid(TAU);
                assert!(set.iter().any(|&s| (a - s).abs() < 1e-9 || (TAU - (a - s).abs()) < 1e-9));
            }
        }
    }

    #[test]
    fn pairwise_column_independence_is_plausible() {
        // After n repetitions, sampled pairs of entries from different
        // columns should be uncorrelated; a coarse empirical independence
        // check on the sign bit of (w - π).
        let mut rng = SplitRng::new(23);
        let (n, k) = (4usize, 1u32);
        let mut joint = [[0u64; 2]; 2];
        let draws = 4_000;
        for _ in 0..draws {
            let w = iontrap_weights(n, k, n, &mut rng).unwrap();
            let a = (angle_index(w.get(0, 1), k) % 2) as usize;
            let b = (angle_index(w.get(2, 3), k) % 2) as usize;
            joint[a][b] += 1;
        }
        let pa = (joint[1][0] + joint[1][1]) as f64 / draws as f64;
        let pb = (joint[0][1] + joint[1][1]) as f64 / draws as f64;
        let pab = joint[1][1] as f64 / draws as f64;
        // 5σ envelope for the covariance estimate
        let sigma = (0.25 / draws as f64).sqrt();
        assert!((pab - pa * pb).abs() < 5.0 * sigma, "cov {}", pab - pa * pb);
    }

    #[test]
    fn restricted_variant_deterministic_skeleton() {
        // All-zero flips: edge (i,j) is active in rounds max(i,j)+1…n, each
        // contributing π; vertices get π from the closing round.
        struct ZeroRng;
        impl rand::RngCore for ZeroRng {
            fn next_u32(&mut self) -> u32 {
                0
            }
            fn next_u64(&mut self) -> u64 {
                0
            }
            fn fill_bytes(&mut self, dest: &mut [u8]) {
                dest.fill(0)
            }
            fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
                dest.fill(0);
                Ok(())
            }
        }
        let (n, k) = (4usize, 2u32);
        let w = iontrap_weights_restricted(n, k, &mut ZeroRng).unwrap();
        for i in 0..n {
            for j in (i + 1)..n {
                let rounds = n - j; // j is the larger 0-indexed endpoint
                let expect = (rounds as f64 * PI).rem_euclid(TAU);
                let diff = (w.get(i, j) - expect).abs();
                assert!(diff < 1e-9 || (diff - TAU).abs() < 1e-9, "edge ({i},{j})");
            }
            let diff = (w.get(i, i) - PI).abs();
            assert!(diff < 1e-9 || (diff - TAU).abs() < 1e-9);
        }
    }

    #[test]
    fn restricted_variant_marginals_uniform() {
        let mut rng = SplitRng::new(31);
        let (n, k) = (3usize, 1u32);
        let set_size = 2usize << k;
        let mut counts = vec![0u64; set_size];
        for _ in 0..4_000 {
            let w = iontrap_weights_restricted(n, k, &mut rng).unwrap();
            counts[angle_index(w.get(0, 1), k)] += 1;
            counts[angle_index(w.get(1, 2), k)] += 1;
            counts[angle_index(w.get(0, 0), k)] += 1;
        }
        let total: u64 = counts.iter().sum();
        let expected = total as f64 / set_size as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        assert!(chi2 < 11.345, "χ² = {chi2}, counts {counts:?}");
    }
}
