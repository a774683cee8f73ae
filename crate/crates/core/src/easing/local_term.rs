use crate::error::{Error, Result};
use nalgebra::DMatrix;

const SYM_TOL: f64 = 1e-10;

/// A translation-invariant nearest-neighbour interaction term: a real
/// symmetric `d²×d²` matrix acting on two adjacent `d`-dimensional sites,
/// row index `a·d + b` with `a` the left site.
#[derive(Debug, Clone)]
pub struct LocalTerm {
    d: usize,
    h: DMatrix<f64>,
}

impl LocalTerm {
    pub fn new(d: usize, h: DMatrix<f64>) -> Result<Self> {
        if h.nrows() != d * d || h.ncols() != d * d {
            return Err(Error::InvalidInput(format!("term must be {0}²×{0}²", d)));
        }
        let dev = (&h - h.transpose())
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max);
        if dev > SYM_TOL {
            return Err(Error::InvalidInput(format!(
                "term not symmetric (deviation {dev})"
            )));
        }
        Ok(Self { d, h })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.h
    }

    /// Sorted eigenvalues (the on-site-rotation invariant).
    pub fn spectrum(&self) -> Vec<f64> {
        let mut evals: Vec<f64> = self
            .h
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .collect();
        evals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        evals
    }
}

/// Conjugate the term by an on-site rotation applied to both sites:
/// `h ↦ (O⊗O)·h·(Oᵀ⊗Oᵀ)`. Spectrum-preserving by construction.
pub fn conjugate_local(term: &LocalTerm, o: &DMatrix<f64>) -> Result<LocalTerm> {
    if o.nrows() != term.d || o.ncols() != term.d {
        return Err(Error::InvalidInput("rotation dimension mismatch".into()));
    }
    let c = o.kronecker(o);
    let rotated = &c * term.matrix() * c.transpose();
    // re-symmetrize float noise
    let sym = (&rotated + rotated.transpose()).scale(0.5);
    LocalTerm::new(term.d, sym)
}

/// The index set of the three-site patch functional: entries
/// `M[(i₁,i₂,i₃),(j₁,j₂,i₃)] = h[(i₁,i₂),(j₁,j₂)] + δ_{i₁j₁}·h[(i₂,i₃),(j₂,i₃)]`
/// with the middle index differing. Iterated via a callback.
fn for_each_patch_entry(h: &DMatrix<f64>, d: usize, mut f: impl FnMut(f64)) {
    for i1 in 0..d {
        for j1 in 0..d {
            let same_first = i1 == j1;
            for i2 in 0..d {
                for j2 in 0..d {
                    if i2 == j2 {
                        continue;
                    }
                    let left = h[(i1 * d + i2, j1 * d + j2)];
                    for i3 in 0..d {
                        let mut v = left;
                        if same_first {
                            v += h[(i2 * d + i3, j2 * d + i3)];
                        }
                        f(v);
                    }
                }
            }
        }
    }
}

/// Effective local nonstoquasticity `ν̃₁(h)`: the positive part of the
/// three-site patch functional summed over its index set. For a periodic
/// chain of `n` sites the global positive off-diagonal weight satisfies
/// `‖H₊‖₁ = n·d^{n-3}·ν̃₁(h)`, so minimizing `ν̃₁` minimizes the chain's
/// nonstoquasticity at constant cost in the system size.
pub fn effective_nu1(term: &LocalTerm) -> f64 {
    let mut acc = 0.0;
    for_each_patch_entry(term.matrix(), term.d(), |v| {
        if v > 0.0 {
            acc += v;
        }
    });
    acc
}

/// Numerically stable softplus `f_α(x) = x + α⁻¹·ln(1+e^{-αx})`, the smooth
/// stand-in for `max(x, 0)`; `f_α(0) = ln2/α` and `f_α → max(·,0)` as α → ∞.
pub(crate) fn softplus(x: f64, alpha: f64) -> f64 {
    let ax = alpha * x;
    if ax > 0.0 {
        x + (-ax).exp().ln_1p() / alpha
    } else {
        ax.exp().ln_1p() / alpha
    }
}

/// Logistic σ(αx), the derivative of [`softplus`] in `x`.
pub(crate) fn logistic(x: f64, alpha: f64) -> f64 {
    let ax = alpha * x;
    if ax >= 0.0 {
        1.0 / (1.0 + (-ax).exp())
    } else {
        let e = ax.exp();
        e / (1.0 + e)
    }
}

/// Smoothed patch objective `ν̃_{p,α}(h) = Σ f_α(entry)^p` over the patch
/// index set; for `p = 1` it exceeds the exact `ν̃₁` by at most
/// `#entries·ln2/α`.
pub fn smooth_objective(term: &LocalTerm, alpha: f64, p: u8) -> f64 {
    assert!(alpha > 0.0, "smoothing parameter must be positive");
    assert!(p == 1 || p == 2, "only p ∈ {{1,2}} is supported");
    let mut acc = 0.0;
    for_each_patch_entry(term.matrix(), term.d(), |v| {
        let f = softplus(v, alpha);
        acc += if p == 1 { f } else { f * f };
    });
    acc
}

/// Number of entries in the patch index set: `d³·d(d-1)`.
pub fn patch_entry_count(d: usize) -> usize {
    d * d * d * d * (d - 1)
}
