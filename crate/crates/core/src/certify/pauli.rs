use nalgebra::DMatrix;
use num_complex::Complex64;

/// A single-site Hermitian factor of a product observable. `ZBeta(β)` is
/// the X-rotated Pauli Z, `e^{-iβX/2} Z e^{iβX/2} = cosβ·Z - sinβ·Y`, and
/// `YBeta(β)` its partner `i·Z_β·X = -cosβ·Y - sinβ·Z`; both square to the
/// identity and are measurable by a single-qubit measurement in a rotated
/// basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SiteFactor {
    I,
    X,
    ZBeta(f64),
    YBeta(f64),
}

impl SiteFactor {
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match self {
            SiteFactor::I => [[one, zero], [zero, one]],
            SiteFactor::X => [[zero, one], [one, zero]],
            SiteFactor::ZBeta(beta) => {
                // cosβ·Z - sinβ·Y
                let (c, s) = (beta.cos(), beta.sin());
                [
                    [Complex64::new(c, 0.0), Complex64::new(0.0, s)],
                    [Complex64::new(0.0, -s), Complex64::new(-c, 0.0)],
                ]
            }
            SiteFactor::YBeta(beta) => {
                // -cosβ·Y - sinβ·Z
                let (c, s) = (beta.cos(), beta.sin());
                [
                    [Complex64::new(-s, 0.0), Complex64::new(0.0, c)],
                    [Complex64::new(0.0, -c), Complex64::new(s, 0.0)],
                ]
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, SiteFactor::I)
    }
}

/// A signed tensor product of single-site factors; Hermitian with ±|coefficient|
/// eigenvalues, measurable by independent single-qubit measurements whose
/// outcomes are multiplied.
#[derive(Debug, Clone)]
pub struct PauliProduct {
    pub coefficient: f64,
    pub factors: Vec<SiteFactor>,
}

impl PauliProduct {
    pub fn identity(n: usize) -> Self {
        Self {
            coefficient: 1.0,
            factors: vec![SiteFactor::I; n],
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.factors.len()
    }

    /// Number of non-identity sites.
    pub fn support(&self) -> usize {
        self.factors.iter().filter(|f| !f.is_identity()).count()
    }

    /// Dense matrix with qubit 0 as the least-significant index bit.
    pub fn dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::from_element(1, 1, Complex64::new(self.coefficient, 0.0));
        // qubit q contributes the q-th index bit, so later (higher) qubits
        // go on the left of the Kronecker product
        for f in &self.factors {
            m = kron2(&f.matrix(), &m);
        }
        m
    }

    /// `Tr[P·σ]` against a dense operator, without materializing `P`.
    pub fn expectation(&self, sigma: &DMatrix<Complex64>) -> f64 {
        let n = self.factors.len();
        let dim = 1usize << n;
        assert_eq!(sigma.nrows(), dim);
        let mats: Vec<[[Complex64; 2]; 2]> = self.factors.iter().map(|f| f.matrix()).collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for x in 0..dim {
            for y in 0..dim {
                let mut entry = Complex64::new(1.0, 0.0);
                for (q, m) in mats.iter().enumerate() {
                    let e = m[x >> q & 1][y >> q & 1];
                    if e.re == 0.0 && e.im == 0.0 {
                        entry = Complex64::new(0.0, 0.0);
                        break;
                    }
                    entry *= e;
                }
                if entry.re != 0.0 || entry.im != 0.0 {
                    acc += entry * sigma[(y, x)];
                }
            }
        }
        (acc * self.coefficient).re
    }
}

/// Kronecker product of a 2×2 block with an arbitrary dense matrix,
/// block on the high-order index bits.
pub fn kron2(block: &[[Complex64; 2]; 2], m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = m.nrows();
    let mut out = DMatrix::zeros(2 * d, 2 * d);
    for bi in 0..2 {
        for bj in 0..2 {
            let b = block[bi][bj];
            if b.re == 0.0 && b.im == 0.0 {
                continue;
            }
            for i in 0..d {
                for j in 0..d {
                    out[(bi * d + i, bj * d + j)] = b * m[(i, j)];
                }
            }
        }
    }
    out
}
