use crate::error::{Error, Result};

/// An X-program with a common rotation angle: a binary `k×n` matrix whose
/// rows name the qubit subsets of `k` commuting X-type rotations.
#[derive(Debug, Clone)]
pub struct XProgram {
    k: usize,
    n: usize,
    /// row bitmasks over the n qubits
    rows: Vec<u64>,
    theta: f64,
}

/// The bias of an X-program toward a direction `s`, computed two ways that
/// must agree: a brute-force sum over outcomes, and an average over the
/// code generated by the rows not orthogonal to `s`.
#[derive(Debug, Clone, Copy)]
pub struct XProgramBias {
    /// `Pr_{x}[xᵀs = 0]` from the output distribution itself.
    pub outcome_sum: f64,
    /// `E_{c ~ C_s}[cos²(θ(n_s - 2·wt(c)))]` over the punctured code.
    pub code_average: f64,
}

impl XProgram {
    /// `rows[i]` is the i-th row as a bitmask over `n` qubits.
    pub fn new(n: usize, rows: Vec<u64>, theta: f64) -> Result<Self> {
        if n > 16 {
            return Err(Error::DimensionCap { requested: n, cap: 16 });
        }
        if rows.len() > 20 {
            return Err(Error::DimensionCap {
                requested: rows.len(),
                cap: 20,
            });
        }
        if rows.iter().any(|&r| r >> n != 0) {
            return Err(Error::InvalidInput("row touches qubits beyond n".into()));
        }
        Ok(Self {
            k: rows.len(),
            n,
            rows,
            theta,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Output distribution of the program over `n`-bit outcomes:
    /// `P(x) = |Σ_{a: Pᵀa = x} cos^{k-wt(a)}θ · (i·sinθ)^{wt(a)}|²`,
    /// obtained by expanding every rotation as `cosθ + i·sinθ·X_row`.
    pub fn output_distribution(&self) -> Vec<f64> {
        use num_complex::Complex64;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << self.n];
        let c = self.theta.cos();
        let is = Complex64::new(0.0, self.theta.sin());
        for a in 0u64..(1 << self.k) {
            let wt = a.count_ones();
            let mut x = 0u64;
            for (i, &row) in self.rows.iter().enumerate() {
                if a >> i & 1 == 1 {
                    x ^= row;
                }
            }
            amps[x as usize] += c.powi((self.k as u32 - wt) as i32) * is.powu(wt);
        }
        amps.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Bias of the program's output distribution in direction `s` (a bitmask):
/// the probability that an output is orthogonal to `s`, returned along with
/// the equivalent code-space average.
pub fn xprogram_bias(program: &XProgram, s: u64) -> Result<XProgramBias> {
    if s >> program.n != 0 {
        return Err(Error::InvalidInput("direction touches qubits beyond n".into()));
    }
    let probs = program.output_distribution();
    let mut outcome_sum = 0.0;
    for (x, &p) in probs.iter().enumerate() {
        if (x as u64 & s).count_ones() % 2 == 0 {
            outcome_sum += p;
        }
    }

    // rows not orthogonal to s generate the punctured code C_s
    let active: Vec<usize> = (0..program.k)
        .filter(|&i| (program.rows[i] & s).count_ones() % 2 == 1)
        .collect();
    let n_s = active.len();
    // averaging the generator span over all 2ⁿ coefficient vectors weights
    // every codeword equally
    let mut code_average = 0.0;
    let words = 1u64 << program.n;
    for d in 0..words {
        // codeword bits c_i = ⟨row_i, d⟩ for active rows
        let mut wt = 0u32;
        for &i in &active {
            if (program.rows[i] & d).count_ones() % 2 == 1 {
                wt += 1;
            }
        }
        let arg = program.theta * (n_s as f64 - 2.0 * wt as f64);
        code_average += arg.cos().powi(2);
    }
    code_average /= words as f64;

    Ok(XProgramBias {
        outcome_sum,
        code_average,
    })
}
