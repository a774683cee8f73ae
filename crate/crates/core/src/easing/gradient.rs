use crate::easing::local_term::{logistic, softplus};
use crate::easing::{conjugate_local, LocalTerm};
use nalgebra::DMatrix;

/// Euclidean gradient of the smoothed patch objective with respect to the
/// on-site rotation: for `f(O) = ν̃_{p,α}((O⊗O)h(Oᵀ⊗Oᵀ))`, chain-rule
/// through the patch entries (sensitivity matrix `G`), the conjugation
/// (`∂(ChCᵀ)/∂C` against `G`), and the two Kronecker factors (partial
/// traces against `O`).
pub fn objective_gradient(
    term: &LocalTerm,
    o: &DMatrix<f64>,
    alpha: f64,
    p: u8,
) -> DMatrix<f64> {
    assert!(p == 1 || p == 2);
    let d = term.d();
    let rotated = conjugate_local(term, o).expect("dimension checked by caller");
    let hp = rotated.matrix();

    // G[(x1,x2),(y1,y2)] = Σ over patch entries anchored at that h' position
    // of d(f_α^p)/d(entry)
    let dsq = d * d;
    let mut g = DMatrix::zeros(dsq, dsq);
    let gprime = |v: f64| -> f64 {
        let s = logistic(v, alpha);
        if p == 1 {
            s
        } else {
            2.0 * softplus(v, alpha) * s
        }
    };
    for x1 in 0..d {
        for x2 in 0..d {
            for y1 in 0..d {
                for y2 in 0..d {
                    let mut acc = 0.0;
                    if x2 != y2 {
                        // (h'⊗1) anchor: free third index, plus the (1⊗h')
                        // partner entry when the first indices agree
                        let left = hp[(x1 * d + x2, y1 * d + y2)];
                        for i3 in 0..d {
                            let mut v = left;
                            if x1 == y1 {
                                v += hp[(x2 * d + i3, y2 * d + i3)];
                            }
                            acc += gprime(v);
                        }
                    } else if x1 != y1 {
                        // (1⊗h') anchor: h' rows (i2,i3) = (x1,x2), columns
                        // (j2,i3) = (y1,x2); free first index i1 = j1
                        for i1 in 0..d {
                            let v = hp[(i1 * d + x1, i1 * d + y1)]
                                + hp[(x1 * d + x2, y1 * d + x2)];
                            acc += gprime(v);
                        }
                    }
                    g[(x1 * d + x2, y1 * d + y2)] = acc;
                }
            }
        }
    }

    // dF/dC for F = Σ G∘(ChCᵀ) with symmetric h: (G + Gᵀ)·C·h
    let c = o.kronecker(o);
    let sens = (&g + g.transpose()) * c * term.matrix();

    // partial traces of the Kronecker factorization against O
    let mut grad = DMatrix::zeros(d, d);
    for k in 0..d {
        for l in 0..d {
            let mut acc = 0.0;
            for m2 in 0..d {
                for n2 in 0..d {
                    acc += sens[(k * d + m2, l * d + n2)] * o[(m2, n2)];
                }
            }
            for m1 in 0..d {
                for n1 in 0..d {
                    acc += sens[(m1 * d + k, n1 * d + l)] * o[(m1, n1)];
                }
            }
            grad[(k, l)] = acc;
        }
    }
    grad
}
