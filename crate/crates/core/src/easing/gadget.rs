use crate::error::{Error, Result};
use crate::qmc::{nu1_two_local_closed, TwoLocalSpec};

/// A simple undirected graph on `v` vertices.
#[derive(Debug, Clone)]
pub struct Graph {
    v: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(v: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= v || e.1 >= v {
                return Err(Error::InvalidInput(format!("bad edge {e:?}")));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { v, edges })
    }

    pub fn complete(v: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..v {
            for j in (i + 1)..v {
                edges.push((i, j));
            }
        }
        Self { v, edges }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.v];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Exhaustive maximum cut of a small graph.
pub fn max_cut(graph: &Graph) -> usize {
    assert!(graph.v() <= 24, "exhaustive cut search capped at 24 vertices");
    let mut best = 0;
    for assignment in 0u64..(1 << graph.v()) {
        let cut = graph
            .edges()
            .iter()
            .filter(|&&(i, j)| (assignment >> i ^ assignment >> j) & 1 == 1)
            .count();
        best = best.max(cut);
    }
    best
}

/// Which hardness reduction the penalty constant is sized for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetMode {
    /// discrete on-site Clifford transformations: `C = 4·deg(G)`
    Clifford,
    /// full on-site orthogonal transformations: `C = (4·deg(G))²`
    Orthogonal,
}

/// The penalized encoding of a MAXCUT instance into a sign-easing problem:
/// one qubit per vertex plus one ancilla per edge, an `XᵢXⱼ` term of weight
/// 1 on every original edge, and a frustrated `ZZ` triangle
/// `C(ZᵢZⱼ - ZᵢZₐ - ZₐZⱼ)` through each edge's ancilla. The minimal
/// nonstoquasticity over sign flips of the `X` operators is exactly the
/// number of uncut edges of the best cut.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub c: f64,
    pub spec: TwoLocalSpec,
    pub mode: GadgetMode,
}

pub fn maxcut_gadget(graph: &Graph, mode: GadgetMode) -> GadgetInstance {
    let deg = graph.max_degree() as f64;
    let c = match mode {
        GadgetMode::Clifford => 4.0 * deg,
        GadgetMode::Orthogonal => (4.0 * deg) * (4.0 * deg),
    };
    let v = graph.v();
    let n = v + graph.e();
    let mut spec = TwoLocalSpec::new(n);
    for (k, &(i, j)) in graph.edges().iter().enumerate() {
        let a = v + k;
        spec.add_xx(i, j, 1.0);
        spec.add_zz(i, j, c);
        spec.add_zz(i, a, -c);
        spec.add_zz(j, a, -c);
    }
    GadgetInstance {
        graph: graph.clone(),
        c,
        spec,
        mode,
    }
}

/// A product orthogonal-Clifford transformation, per site a choice of
/// Hadamard (`w`), X-flip (`x`) and Z-flip (`z`) bits: `Z ↦ ±(Z or X)` and
/// `X ↦ ±(X or Z)` according to the table
/// `Z ↦ (-1)^x·(w ? X : Z)`, `X ↦ (-1)^z·(w ? Z : X)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CliffordConfig {
    pub w: u64,
    pub x: u64,
    pub z: u64,
}

/// Conjugate a 2-local spec by a product orthogonal Clifford, relocating
/// coefficients between the XX/ZZ/XZ/X/Z slots with the table's signs.
/// YY terms map to ±YY and never mix with the rest.
pub fn clifford_conjugate(spec: &TwoLocalSpec, config: CliffordConfig) -> TwoLocalSpec {
    let n = spec.n;
    let mut out = TwoLocalSpec::new(n);
    // images: (is_x_like, sign) of the conjugated Z and X at each site
    let img_z = |i: usize| -> (bool, f64) {
        let sign = if config.x >> i & 1 == 1 { -1.0 } else { 1.0 };
        (config.w >> i & 1 == 1, sign)
    };
    let img_x = |i: usize| -> (bool, f64) {
        let sign = if config.z >> i & 1 == 1 { -1.0 } else { 1.0 };
        (config.w >> i & 1 == 0, sign)
    };
    let mut add = |xi: bool, i: usize, xj: bool, j: usize, w: f64| {
        // a product of single-site X/Z images on sites i ≠ j
        match (xi, xj) {
            (true, true) => out.add_xx(i, j, w),
            (false, false) => out.add_zz(i, j, w),
            (true, false) => out.add_xz(i, j, w),
            (false, true) => out.add_xz(j, i, w),
        }
    };
    for (&(i, j), &w) in &spec.xx {
        let (ai, si) = img_x(i);
        let (aj, sj) = img_x(j);
        add(ai, i, aj, j, si * sj * w);
    }
    for (&(i, j), &w) in &spec.zz {
        let (ai, si) = img_z(i);
        let (aj, sj) = img_z(j);
        add(ai, i, aj, j, si * sj * w);
    }
    for (&(i, j), &w) in &spec.xz {
        let (ai, si) = img_x(i);
        let (aj, sj) = img_z(j);
        add(ai, i, aj, j, si * sj * w);
    }
    for (&(i, j), &w) in &spec.yy {
        // Y ↦ ±Y with sign s_x·s_z·(w ? -1 : +1) at each site
        let yi = {
            let (_, sx) = img_x(i);
            let (_, sz) = img_z(i);
            sx * sz * if config.w >> i & 1 == 1 { -1.0 } else { 1.0 }
        };
        let yj = {
            let (_, sx) = img_x(j);
            let (_, sz) = img_z(j);
            sx * sz * if config.w >> j & 1 == 1 { -1.0 } else { 1.0 }
        };
        out.add_yy(i, j, yi * yj * w);
    }
    for i in 0..n {
        if spec.x_field[i] != 0.0 {
            let (x_like, s) = img_x(i);
            if x_like {
                out.x_field[i] += s * spec.x_field[i];
            } else {
                out.z_field[i] += s * spec.x_field[i];
            }
        }
        if spec.z_field[i] != 0.0 {
            let (x_like, s) = img_z(i);
            if x_like {
                out.x_field[i] += s * spec.z_field[i];
            } else {
                out.z_field[i] += s * spec.z_field[i];
            }
        }
    }
    out
}

/// Search space of the brute-force orbit scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteForceMode {
    /// sign flips of the X operators only (2ⁿ configurations, n ≤ 20)
    ZFlipOnly,
    /// the full per-site (w, x, z) table (8ⁿ configurations, n ≤ 8)
    FullClifford,
}

/// Exact minimum of ν₁ over the chosen orbit of the gadget Hamiltonian,
/// with one argmin configuration.
pub fn brute_force_clifford_optimum(
    instance: &GadgetInstance,
    mode: BruteForceMode,
) -> Result<(f64, CliffordConfig)> {
    let n = instance.spec.n;
    let cap = match mode {
        BruteForceMode::ZFlipOnly => 20,
        BruteForceMode::FullClifford => 8,
    };
    if n > cap {
        return Err(Error::DimensionCap { requested: n, cap });
    }
    let mut best = f64::INFINITY;
    let mut argmin = CliffordConfig::default();
    match mode {
        BruteForceMode::ZFlipOnly => {
            for z in 0u64..(1 << n) {
                let config = CliffordConfig { w: 0, x: 0, z };
                let nu = nu1_two_local_closed(&clifford_conjugate(&instance.spec, config))?;
                if nu < best {
                    best = nu;
                    argmin = config;
                }
            }
        }
        BruteForceMode::FullClifford => {
            for code in 0u64..(1 << (3 * n)) {
                let mut config = CliffordConfig::default();
                for i in 0..n {
                    let bits = code >> (3 * i) & 0b111;
                    config.w |= (bits & 1) << i;
                    config.x |= (bits >> 1 & 1) << i;
                    config.z |= (bits >> 2 & 1) << i;
                }
                let nu = nu1_two_local_closed(&clifford_conjugate(&instance.spec, config))?;
                if nu < best {
                    best = nu;
                    argmin = config;
                }
            }
        }
    }
    Ok((best, argmin))
}

/// Lower bound on the XZ-vertex enumeration:
/// `Σ_λ max{Σⱼ(-1)^{λⱼ}xⱼ, 0} ≥ maxⱼ|xⱼ|·2^{k-1}`.
pub fn xz_lower_bound(x: &[f64]) -> f64 {
    assert!(!x.is_empty());
    let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    max * 2f64.powi(x.len() as i32 - 1)
}
