use crate::error::{Error, Result};
use crate::qmc::{RealHamiltonian, TwoLocalSpec};
use rand::Rng;

/// Nonstoquasticity `ν_p(H) = D⁻¹·‖H₊‖_{ℓp}` of a real Hamiltonian, with
/// `H₊` its strictly positive off-diagonal part; zero iff `H` is stoquastic.
pub fn nonstoq(h: &RealHamiltonian, p: f64) -> f64 {
    assert!(p >= 1.0, "ℓp norm needs p ≥ 1");
    let pos = h.positive_part();
    let sum: f64 = pos.iter().filter(|&&v| v > 0.0).map(|&v| v.powf(p)).sum();
    sum.powf(1.0 / p) / h.dim() as f64
}

/// Closed-form ν₁ of a 2-local qubit Hamiltonian with 1-local fields:
/// `Σ_{i<j} ½(max{a+b,0} + max{a-b,0})` over XX/YY edges plus, for every
/// vertex, the exact XZ-neighbourhood average
/// `2^{-deg} Σ_λ max{α + Σⱼ(-1)^{λⱼ}xᵢⱼ, 0}`; diagonal (ZZ/Z) terms never
/// contribute. Exact because distinct term families flip disjoint bit sets.
pub fn nu1_two_local_closed(spec: &TwoLocalSpec) -> Result<f64> {
    let mut total = 0.0;
    let mut edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    edges.extend(spec.xx.keys());
    edges.extend(spec.yy.keys());
    for (i, j) in edges {
        let a = spec.xx.get(&(i, j)).copied().unwrap_or(0.0);
        let b = spec.yy.get(&(i, j)).copied().unwrap_or(0.0);
        total += 0.5 * ((a + b).max(0.0) + (a - b).max(0.0));
    }
    for i in 0..spec.n {
        let neigh = spec.xz_neighbours(i);
        let k = neigh.len();
        if k > 24 {
            return Err(Error::DimensionCap { requested: k, cap: 24 });
        }
        let alpha = spec.x_field[i];
        if k == 0 {
            total += alpha.max(0.0);
            continue;
        }
        let mut acc = 0.0;
        for lambda in 0u64..(1 << k) {
            let mut v = alpha;
            for (bit, (_, x)) in neigh.iter().enumerate() {
                v += if lambda >> bit & 1 == 1 { -x } else { *x };
            }
            acc += v.max(0.0);
        }
        total += acc / (1u64 << k) as f64;
    }
    Ok(total)
}

/// Exact XZ-vertex enumeration `Σ_{λ∈{0,1}^k} max{α + Σⱼ(-1)^{λⱼ}xⱼ, 0}`
/// (unnormalized).
pub fn nu1_xz_exact(alpha: f64, x: &[f64]) -> f64 {
    let k = x.len();
    let mut acc = 0.0;
    for lambda in 0u64..(1 << k) {
        let mut v = alpha;
        for (bit, xi) in x.iter().enumerate() {
            v += if lambda >> bit & 1 == 1 { -xi } else { *xi };
        }
        acc += v.max(0.0);
    }
    acc
}

/// Sample count of the Rademacher estimator for an additive error `ε` with
/// failure probability `δ`: `⌈16·k·(maxⱼ|xⱼ|)²·ln(2/δ)/ε²⌉`.
pub fn nu1_xz_sample_count(k: usize, max_abs_x: f64, eps: f64, delta: f64) -> u64 {
    (16.0 * k as f64 * max_abs_x * max_abs_x * (2.0 / delta).ln() / (eps * eps)).ceil() as u64
}

/// Monte Carlo estimate of the normalized XZ-vertex contribution
/// `E_σ[max{α + Σⱼ σⱼxⱼ, 0}]` over iid Rademacher (±1) vectors, within `ε`
/// of the exact `2^{-k}`-normalized enumeration with probability `1-δ`.
pub fn nu1_xz_mc(alpha: f64, x: &[f64], eps: f64, delta: f64, rng: &mut impl Rng) -> Result<f64> {
    let k = x.len();
    if k == 0 {
        return Ok(alpha.max(0.0));
    }
    let max_abs = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max_abs == 0.0 {
        return Ok(alpha.max(0.0));
    }
    let m = nu1_xz_sample_count(k, max_abs, eps, delta);
    if m > 200_000_000 {
        return Err(Error::Infeasible(format!("{m} Rademacher samples requested")));
    }
    let mut acc = 0.0;
    for _ in 0..m {
        let bits: u64 = rng.gen();
        let mut v = alpha;
        for (bit, xi) in x.iter().enumerate() {
            v += if bits >> bit & 1 == 1 { -xi } else { *xi };
        }
        acc += v.max(0.0);
    }
    Ok(acc / m as f64)
}
