use crate::easing::{conjugate_local, effective_nu1, objective_gradient, smooth_objective, LocalTerm};
use crate::error::{Error, Result};
use crate::qc::haar_orthogonal;
use nalgebra::DMatrix;
use rand::Rng;

/// Starting point of an optimization run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Init {
    Identity,
    /// Identity plus a Gaussian perturbation of the given scale, then
    /// re-orthogonalized.
    PerturbedIdentity(f64),
    HaarRandom,
}

/// Configuration of the Riemannian conjugate-gradient run.
#[derive(Debug, Clone)]
pub struct OptimizerConfig {
    /// exponent of the smoothed objective (1 or 2)
    pub p: u8,
    /// softplus smoothing strength of the first stage
    pub alpha: f64,
    /// sharpening stages: after converging, α is multiplied by 10 and the
    /// run continues from the current point. The smoothed minimizer sits
    /// O(1/α) away from the exact one, so continuation is what pushes the
    /// exact ν̃₁ of recoverable instances toward zero.
    pub continuation_stages: usize,
    pub max_iters: usize,
    /// stop when the Riemannian gradient norm falls below this
    pub grad_tol: f64,
    /// independent runs from fresh starting points; the best final exact
    /// ν̃₁ wins
    pub restarts: usize,
    pub init: Init,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            p: 1,
            alpha: 50.0,
            continuation_stages: 7,
            max_iters: 2_000,
            grad_tol: 1e-8,
            restarts: 1,
            init: Init::HaarRandom,
        }
    }
}

/// Result of a minimization: the optimal rotation, the accepted-step
/// objective trace (non-increasing), and the exact `ν̃₁` at the end point.
#[derive(Debug, Clone)]
pub struct MinimizeResult {
    pub rotation: DMatrix<f64>,
    pub trace: Vec<f64>,
    pub final_nu1: f64,
    pub final_grad_norm: f64,
}

fn skew(a: &DMatrix<f64>) -> DMatrix<f64> {
    (a - a.transpose()).scale(0.5)
}

/// Orthogonal factor of the QR decomposition with positive diagonal of R;
/// the retraction back onto O(d).
fn qf(a: &DMatrix<f64>) -> DMatrix<f64> {
    let d = a.nrows();
    let qr = a.clone().qr();
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

/// Riemannian gradient on O(d): project the Euclidean gradient onto the
/// tangent space, `O·skew(Oᵀ·∇f)`.
fn riemannian_grad(o: &DMatrix<f64>, egrad: &DMatrix<f64>) -> DMatrix<f64> {
    o * skew(&(o.transpose() * egrad))
}

fn inner(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn orthogonality_residual(o: &DMatrix<f64>) -> f64 {
    let d = o.nrows();
    let gram = o.transpose() * o;
    let id = DMatrix::identity(d, d);
    (gram - id).iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn initial_point(d: usize, init: Init, rng: &mut impl Rng) -> DMatrix<f64> {
    match init {
        Init::Identity => DMatrix::identity(d, d),
        Init::PerturbedIdentity(scale) => {
            let mut m = DMatrix::identity(d, d);
            for v in m.iter_mut() {
                *v += scale * rng.gen_range(-1.0..1.0);
            }
            qf(&m)
        }
        Init::HaarRandom => haar_orthogonal(d, rng),
    }
}

const ARMIJO_C1: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 50;

/// One conjugate-gradient descent from the given starting rotation.
fn cg_from(term: &LocalTerm, o0: DMatrix<f64>, config: &OptimizerConfig) -> MinimizeResult {
    let d = term.d();
    let objective = |o: &DMatrix<f64>| -> f64 {
        let rotated = conjugate_local(term, o).expect("dimensions fixed");
        smooth_objective(&rotated, config.alpha, config.p)
    };
    let manifold_dim = (d * (d - 1) / 2).max(1);

    let mut o = o0;
    let mut f = objective(&o);
    let mut grad = riemannian_grad(&o, &objective_gradient(term, &o, config.alpha, config.p));
    let mut dir = -&grad;
    let mut trace = vec![f];
    let mut t_init = 1.0f64;
    let mut since_restart = 0usize;

    for _ in 0..config.max_iters {
        let gnorm = grad.norm();
        if gnorm < config.grad_tol {
            break;
        }
        let mut slope = inner(&grad, &dir);
        if slope >= -1e-16 {
            // not a descent direction: steepest-descent restart
            dir = -&grad;
            slope = -gnorm * gnorm;
            since_restart = 0;
        }
        // backtracking line search with sufficient decrease
        let mut t = t_init;
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            let candidate = qf(&(&o + dir.scale(t)));
            let f_new = objective(&candidate);
            if f_new <= f + ARMIJO_C1 * t * slope {
                accepted = Some((candidate, f_new, t));
                break;
            }
            t *= 0.5;
        }
        let Some((o_new, f_new, t_used)) = accepted else {
            if inner(&dir, &(-&grad)) < gnorm * gnorm * (1.0 - 1e-12) {
                // line search failed along the CG direction: retry steepest
                dir = -&grad;
                since_restart = 0;
                continue;
            }
            break; // converged to line-search resolution
        };
        t_init = (t_used * 2.0).min(1e3);
        let grad_new =
            riemannian_grad(&o_new, &objective_gradient(term, &o_new, config.alpha, config.p));
        // transport the previous direction and gradient to the new point
        let transport = |v: &DMatrix<f64>| -> DMatrix<f64> {
            &o_new * skew(&(o_new.transpose() * v))
        };
        since_restart += 1;
        let beta = if since_restart % manifold_dim == 0 {
            0.0
        } else {
            let transported_grad = transport(&grad);
            let num = inner(&grad_new, &(&grad_new - &transported_grad));
            (num / (gnorm * gnorm)).max(0.0)
        };
        dir = -&grad_new + transport(&dir).scale(beta);
        o = o_new;
        f = f_new;
        grad = grad_new;
        trace.push(f);
    }

    let final_nu1 = effective_nu1(&conjugate_local(term, &o).expect("dimensions fixed"));
    MinimizeResult {
        final_grad_norm: grad.norm(),
        rotation: o,
        trace,
        final_nu1,
    }
}

/// CG with α-continuation: converge, sharpen the smoothing tenfold, and
/// continue from the current point. The trace concatenates the stages
/// (each stage's objective is evaluated at its own α, so monotonicity
/// holds within stages).
fn cg_continued(term: &LocalTerm, o0: DMatrix<f64>, config: &OptimizerConfig) -> MinimizeResult {
    let mut stage_config = config.clone();
    let mut result = cg_from(term, o0, &stage_config);
    for _ in 0..config.continuation_stages {
        stage_config.alpha *= 10.0;
        let next = cg_from(term, result.rotation.clone(), &stage_config);
        let mut trace = result.trace;
        trace.extend(next.trace);
        result = MinimizeResult { trace, ..next };
    }
    result
}

/// Minimize the smoothed nonstoquasticity over on-site rotations by
/// Riemannian conjugate gradient with backtracking line search and QR
/// retraction. Runs `config.restarts` independent starts and returns the
/// one with the lowest exact `ν̃₁`.
pub fn cg_minimize(
    term: &LocalTerm,
    config: &OptimizerConfig,
    rng: &mut impl Rng,
) -> Result<MinimizeResult> {
    if config.restarts == 0 {
        return Err(Error::InvalidInput("need at least one start".into()));
    }
    let mut best: Option<MinimizeResult> = None;
    for _ in 0..config.restarts {
        let o0 = initial_point(term.d(), config.init, rng);
        let run = cg_continued(term, o0, config);
        if best.as_ref().map_or(true, |b| run.final_nu1 < b.final_nu1) {
            best = Some(run);
        }
    }
    Ok(best.unwrap())
}

/// Hybrid schedule: fit the quadratic objective (`p = 2`) from the starting
/// point, refine with the smoothed linear objective from that minimizer,
/// and compare against a direct linear run from the same start; the lower
/// exact `ν̃₁` of the two linear runs wins. Restarts repeat the whole
/// schedule from fresh points.
pub fn hybrid_minimize(
    term: &LocalTerm,
    config: &OptimizerConfig,
    rng: &mut impl Rng,
) -> Result<MinimizeResult> {
    if config.restarts == 0 {
        return Err(Error::InvalidInput("need at least one start".into()));
    }
    let p2 = OptimizerConfig {
        p: 2,
        ..config.clone()
    };
    let p1 = OptimizerConfig {
        p: 1,
        ..config.clone()
    };
    let mut best: Option<MinimizeResult> = None;
    for _ in 0..config.restarts {
        let o0 = initial_point(term.d(), config.init, rng);
        let pre = cg_from(term, o0.clone(), &p2);
        let refined = cg_continued(term, pre.rotation, &p1);
        let direct = cg_continued(term, o0, &p1);
        let run = if refined.final_nu1 <= direct.final_nu1 {
            refined
        } else {
            direct
        };
        if best.as_ref().map_or(true, |b| run.final_nu1 < b.final_nu1) {
            best = Some(run);
        }
    }
    Ok(best.unwrap())
}
