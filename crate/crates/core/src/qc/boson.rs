use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Largest matrix size accepted by [`permanent`]; the Gray-code recursion
/// costs `O(2ⁿ·n)`.
pub const PERMANENT_CAP: usize = 20;

/// Matrix permanent `Σ_τ Π_j x_{j,τ(j)}` by Gray-coded inclusion–exclusion:
/// over column subsets `S`, `Perm(X) = (-1)ⁿ Σ_{S≠∅} (-1)^{|S|} Π_i Σ_{j∈S} x_{ij}`,
/// with the row sums updated one entry per Gray-code step.
pub fn permanent(x: &DMatrix<Complex64>) -> Result<Complex64> {
    let n = x.nrows();
    if x.ncols() != n {
        return Err(Error::InvalidInput("permanent needs a square matrix".into()));
    }
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if n > PERMANENT_CAP {
        return Err(Error::DimensionCap {
            requested: n,
            cap: PERMANENT_CAP,
        });
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut total = Complex64::new(0.0, 0.0);
    let mut gray_prev = 0u64;
    for k in 1u64..(1u64 << n) {
        let gray = k ^ (k >> 1);
        let changed = (gray ^ gray_prev).trailing_zeros() as usize;
        let added = gray >> changed & 1 == 1;
        for i in 0..n {
            let entry = x[(i, changed)];
            if added {
                row_sums[i] += entry;
            } else {
                row_sums[i] -= entry;
            }
        }
        gray_prev = gray;
        let mut prod = Complex64::new(1.0, 0.0);
        for s in &row_sums {
            prod *= s;
        }
        let sign = if gray.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        total += prod * sign;
    }
    let overall = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(total * overall)
}

/// All photon occupation sequences of `m` modes summing to `n` photons.
pub fn occupation_sequences(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, modes_left: usize, photons_left: usize, out: &mut Vec<Vec<usize>>) {
        if modes_left == 1 {
            let mut seq = prefix.clone();
            seq.push(photons_left);
            out.push(seq);
            return;
        }
        for take in 0..=photons_left {
            prefix.push(take);
            rec(prefix, modes_left - 1, photons_left - take, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    rec(&mut Vec::new(), m, n, &mut out);
    out
}

/// Outcome probability of a linear-optical interferometer `U` on the input
/// with one photon in each of the first `n` modes:
/// `|Perm(U_S)|² / Π_j s_j!`, where `U_S` keeps the first `n` columns of `U`
/// and repeats row `j` exactly `s_j` times.
pub fn boson_probability(u: &DMatrix<Complex64>, s: &[usize], n_photons: usize) -> Result<f64> {
    let m = u.nrows();
    if u.ncols() != m {
        return Err(Error::InvalidInput("mode transformation must be square".into()));
    }
    if s.len() != m {
        return Err(Error::InvalidInput(format!(
            "occupation sequence has {} modes, unitary has {m}",
            s.len()
        )));
    }
    let total: usize = s.iter().sum();
    if total != n_photons {
        return Err(Error::InvalidInput(format!(
            "occupations sum to {total}, expected {n_photons} photons"
        )));
    }
    if m < n_photons {
        return Err(Error::InvalidInput(format!(
            "need at least {n_photons} modes, got {m}"
        )));
    }
    let mut rows = Vec::with_capacity(n_photons);
    for (j, &sj) in s.iter().enumerate() {
        for _ in 0..sj {
            rows.push(j);
        }
    }
    let sub = DMatrix::from_fn(n_photons, n_photons, |r, c| u[(rows[r], c)]);
    let perm = permanent(&sub)?;
    let mut denom = 1.0;
    for &sj in s {
        for f in 2..=sj {
            denom *= f as f64;
        }
    }
    Ok(perm.norm_sqr() / denom)
}
