use crate::error::{Error, Result};
use crate::qmc::{RealHamiltonian, TransferMatrix};
use nalgebra::DMatrix;
use rand::Rng;

pub(crate) const DENSE_CAP: usize = 1 << 12;

/// `Tr[Aᵐ]` of a symmetric matrix through its eigenvalues.
pub fn trace_power(a: &DMatrix<f64>, m: usize) -> Result<f64> {
    if a.nrows() > DENSE_CAP {
        return Err(Error::DimensionCap {
            requested: a.nrows(),
            cap: DENSE_CAP,
        });
    }
    let eig = a.clone().symmetric_eigen();
    Ok(eig
        .eigenvalues
        .iter()
        .map(|l| l.powi(m as i32))
        .sum())
}

/// Exact average sign of the world-line expansion,
/// `⟨sign⟩ = Tr[Tᵐ]/Tr[|T|ᵐ]` with `|·|` the entrywise absolute value.
/// Equals 1 whenever the kernel is entrywise nonnegative (stoquastic `H`
/// with nonnegative kernel diagonal).
pub fn average_sign_exact(t: &TransferMatrix) -> Result<f64> {
    let m = t.steps();
    let num = trace_power(t.matrix(), m)?;
    let den = trace_power(&t.abs_matrix(), m)?;
    if den.abs() < f64::MIN_POSITIVE {
        return Err(Error::Numerical(
            "degenerate kernel: Tr[|T|^m] vanishes".into(),
        ));
    }
    Ok(num / den)
}

/// Optimal sample count for a target relative accuracy `ε` at a given
/// average sign: `⌈1/(⟨sign⟩²·ε²)⌉`.
pub fn sample_requirement(avg_sign: f64, eps: f64) -> Result<u64> {
    if !(avg_sign > 0.0 && avg_sign <= 1.0) {
        return Err(Error::Infeasible(format!(
            "average sign {avg_sign} admits no finite sample count"
        )));
    }
    if eps <= 0.0 {
        return Err(Error::InvalidInput("accuracy must be positive".into()));
    }
    Ok((1.0 / (avg_sign * avg_sign * eps * eps)).ceil() as u64)
}

/// Spectral gap `1 - |λ₂|` of a (row-stochastic) transition matrix; the
/// convergence rate of the associated chain. Dense, dimension ≤ 2¹².
pub fn spectral_gap(w: &DMatrix<f64>) -> Result<f64> {
    if w.nrows() != w.ncols() {
        return Err(Error::InvalidInput("transition matrix must be square".into()));
    }
    if w.nrows() > DENSE_CAP {
        return Err(Error::DimensionCap {
            requested: w.nrows(),
            cap: DENSE_CAP,
        });
    }
    let mut mags: Vec<f64> = w.clone().complex_eigenvalues().iter().map(|z| z.norm()).collect();
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(1.0 - mags[1])
}

/// Metropolis chain configuration for world-line sampling. A sweep is one
/// single-slice resampling attempt per time slice.
#[derive(Debug, Clone)]
pub struct SignChainConfig {
    pub samples: usize,
    pub sweeps_per_sample: usize,
    pub burn_in_sweeps: usize,
}

impl Default for SignChainConfig {
    fn default() -> Self {
        Self {
            samples: 20_000,
            sweeps_per_sample: 2,
            burn_in_sweeps: 500,
        }
    }
}

/// Probability of proposing the whole-path (rigid) replacement move; the
/// remaining mass proposes single-slice resampling. The rigid move makes the
/// chain irreducible across diagonal basins (and is the only move with
/// nonzero acceptance when the kernel is diagonal).
const RIGID_PROPOSAL_WEIGHT: f64 = 0.1;

struct PathChain<'a> {
    t: &'a TransferMatrix,
    path: Vec<usize>,
    /// histogram of slice values, for O(1) constant-path bookkeeping
    counts: Vec<u32>,
    log_weight: f64,
}

impl<'a> PathChain<'a> {
    fn new(t: &'a TransferMatrix) -> Result<Self> {
        let d = t.dim();
        // start on the diagonal entry of largest magnitude
        let start = (0..d)
            .max_by(|&a, &b| {
                t.matrix()[(a, a)]
                    .abs()
                    .partial_cmp(&t.matrix()[(b, b)].abs())
                    .unwrap()
            })
            .unwrap();
        if t.matrix()[(start, start)] == 0.0 {
            return Err(Error::Numerical(
                "no nonzero diagonal kernel entry to start the chain".into(),
            ));
        }
        let m = t.steps();
        let mut counts = vec![0u32; d];
        counts[start] = m as u32;
        let log_weight = m as f64 * t.matrix()[(start, start)].abs().ln();
        Ok(Self {
            t,
            path: vec![start; m],
            counts,
            log_weight,
        })
    }

    fn is_const(&self) -> bool {
        self.counts[self.path[0]] as usize == self.path.len()
    }

    fn factor(&self, slice: usize, value: usize) -> f64 {
        let m = self.path.len();
        let prev = self.path[(slice + m - 1) % m];
        let next = self.path[(slice + 1) % m];
        self.t.matrix()[(prev, value)] * self.t.matrix()[(value, next)]
    }

    /// Proposal density of moving from a path to another differing in
    /// `diff ∈ {0, 1}` slices, the target being constant or not.
    fn proposal_density(&self, diff: usize, target_const: bool) -> f64 {
        let m = self.path.len() as f64;
        let d = self.t.dim() as f64;
        let mut q = 0.0;
        match diff {
            0 => q += (1.0 - RIGID_PROPOSAL_WEIGHT) / d,
            1 => q += (1.0 - RIGID_PROPOSAL_WEIGHT) / (m * d),
            _ => {}
        }
        if target_const {
            q += RIGID_PROPOSAL_WEIGHT / d;
        }
        q
    }

    fn try_single_slice(&mut self, rng: &mut impl Rng) {
        let m = self.path.len();
        let d = self.t.dim();
        let slice = rng.gen_range(0..m);
        let value = rng.gen_range(0..d);
        let old_value = self.path[slice];
        if value == old_value {
            return;
        }
        let old = self.factor(slice, old_value);
        let new = self.factor(slice, value);
        if new == 0.0 {
            return;
        }
        let y_const = self.counts[value] as usize + 1 == m;
        let x_const = self.is_const();
        let q_forward = self.proposal_density(1, y_const);
        let q_backward = self.proposal_density(1, x_const);
        let ratio = (new / old).abs() * q_backward / q_forward;
        if rng.gen_range(0.0..1.0) <= ratio {
            self.path[slice] = value;
            self.counts[old_value] -= 1;
            self.counts[value] += 1;
            self.log_weight += (new / old).abs().ln();
        }
    }

    fn try_rigid(&mut self, rng: &mut impl Rng) {
        let m = self.path.len();
        let d = self.t.dim();
        let value = rng.gen_range(0..d);
        let tvv = self.t.matrix()[(value, value)];
        if tvv == 0.0 {
            return;
        }
        let diff = m - self.counts[value] as usize;
        let log_new = m as f64 * tvv.abs().ln();
        let x_const = self.is_const();
        let q_forward = self.proposal_density(diff.min(2), true);
        let q_backward = self.proposal_density(diff.min(2), x_const);
        let log_ratio = log_new - self.log_weight + (q_backward / q_forward).ln();
        if rng.gen_range(0.0f64..1.0).ln() <= log_ratio {
            self.path.fill(value);
            self.counts.fill(0);
            self.counts[value] = m as u32;
            self.log_weight = log_new;
        }
    }

    fn sweep(&mut self, rng: &mut impl Rng) {
        for _ in 0..self.path.len() {
            if rng.gen_range(0.0..1.0) < RIGID_PROPOSAL_WEIGHT {
                self.try_rigid(rng);
            } else {
                self.try_single_slice(rng);
            }
        }
    }

    fn sign(&self) -> f64 {
        let m = self.path.len();
        let mut negatives = 0usize;
        for i in 0..m {
            let v = self.t.matrix()[(self.path[i], self.path[(i + 1) % m])];
            if v < 0.0 {
                negatives += 1;
            }
        }
        if negatives % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    fn head(&self) -> usize {
        self.path[0]
    }
}

fn batch_stats(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    let batches = 32.min(n.max(1));
    let bsize = (n / batches).max(1);
    let mut means = Vec::with_capacity(batches);
    for b in 0..batches {
        let lo = b * bsize;
        let hi = ((b + 1) * bsize).min(n);
        if lo >= hi {
            break;
        }
        means.push(values[lo..hi].iter().sum::<f64>() / (hi - lo) as f64);
    }
    let k = means.len() as f64;
    let mu = means.iter().sum::<f64>() / k;
    let var = means.iter().map(|v| (v - mu).powi(2)).sum::<f64>() / (k - 1.0).max(1.0);
    (mu, (var / k).sqrt())
}

/// Monte Carlo estimate of the average sign: a Metropolis chain over closed
/// index paths weighted by `|a(λ)|` with single-slice resampling, averaging
/// `sign(a(λ))`. Returns the estimate and a batch-means standard error.
pub fn average_sign_mc(
    t: &TransferMatrix,
    config: &SignChainConfig,
    rng: &mut impl Rng,
) -> Result<(f64, f64)> {
    let mut chain = PathChain::new(t)?;
    for _ in 0..config.burn_in_sweeps {
        chain.sweep(rng);
    }
    let mut signs = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        for _ in 0..config.sweeps_per_sample {
            chain.sweep(rng);
        }
        signs.push(chain.sign());
    }
    Ok(batch_stats(&signs))
}

/// Exact thermal expectation `Tr[e^{-βH}·O]/Tr[e^{-βH}]` of a diagonal
/// observable, via the spectral decomposition of `H`.
pub fn thermal_expectation_exact(h: &RealHamiltonian, o_diag: &[f64], beta: f64) -> Result<f64> {
    let d = h.dim();
    if o_diag.len() != d {
        return Err(Error::InvalidInput("observable length mismatch".into()));
    }
    if d > DENSE_CAP {
        return Err(Error::DimensionCap { requested: d, cap: DENSE_CAP });
    }
    let eig = h.matrix().clone().symmetric_eigen();
    let e_min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut num = 0.0;
    let mut den = 0.0;
    for k in 0..d {
        let w = (-beta * (eig.eigenvalues[k] - e_min)).exp();
        den += w;
        let mut ov = 0.0;
        for x in 0..d {
            ov += eig.eigenvectors[(x, k)].powi(2) * o_diag[x];
        }
        num += w * ov;
    }
    Ok(num / den)
}

/// Trotterized reference `Tr[Tᵐ·O]/Tr[Tᵐ]` for a diagonal observable, the
/// quantity the world-line chain targets at finite `m`.
pub fn thermal_expectation_trotter(t: &TransferMatrix, o_diag: &[f64]) -> Result<f64> {
    let d = t.dim();
    if o_diag.len() != d {
        return Err(Error::InvalidInput("observable length mismatch".into()));
    }
    let m = t.steps();
    let eig = t.matrix().clone().symmetric_eigen();
    let mut num = 0.0;
    let mut den = 0.0;
    for k in 0..d {
        let lm = eig.eigenvalues[k].powi(m as i32);
        den += lm;
        let mut ov = 0.0;
        for x in 0..d {
            ov += eig.eigenvectors[(x, k)].powi(2) * o_diag[x];
        }
        num += lm * ov;
    }
    if den.abs() < f64::MIN_POSITIVE {
        return Err(Error::Numerical("vanishing partition trace".into()));
    }
    Ok(num / den)
}

/// World-line Monte Carlo estimate of a diagonal observable: paths are
/// sampled with weight `|a(λ)|` and the sign-corrected ratio estimator
/// `E[O(λ₁)·sign]/E[sign]` is returned with a propagated standard error.
pub fn thermal_expectation_mc(
    t: &TransferMatrix,
    o_diag: &[f64],
    config: &SignChainConfig,
    rng: &mut impl Rng,
) -> Result<(f64, f64)> {
    if o_diag.len() != t.dim() {
        return Err(Error::InvalidInput("observable length mismatch".into()));
    }
    let mut chain = PathChain::new(t)?;
    for _ in 0..config.burn_in_sweeps {
        chain.sweep(rng);
    }
    let mut weighted = Vec::with_capacity(config.samples);
    let mut signs = Vec::with_capacity(config.samples);
    for _ in 0..config.samples {
        for _ in 0..config.sweeps_per_sample {
            chain.sweep(rng);
        }
        let s = chain.sign();
        signs.push(s);
        weighted.push(o_diag[chain.head()] * s);
    }
    let (num, num_se) = batch_stats(&weighted);
    let (den, den_se) = batch_stats(&signs);
    if den.abs() < 1e-12 {
        return Err(Error::Numerical("estimated average sign vanished".into()));
    }
    let value = num / den;
    let se = ((num_se / den).powi(2) + (num * den_se / (den * den)).powi(2)).sqrt();
    Ok((value, se))
}
