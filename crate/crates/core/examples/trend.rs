use nalgebra::DMatrix;
use qrsw_core::qmc::*;
use qrsw_core::SplitRng;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

fn fit(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let icept = (sy - slope * sx) / n;
    let my = sy / n;
    let sst: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let ssr: f64 = pts.iter().map(|p| (p.1 - (slope * p.0 + icept)).powi(2)).sum();
    (slope, 1.0 - ssr / sst)
}

fn background() -> DMatrix<f64> {
    // XX + 0.5(X⊗1 + 1⊗X) + 0.3 ZZ on two qubits (row index a·2+b)
    let mut m = DMatrix::zeros(4, 4);
    let xx = [(0usize,3usize),(1,2),(2,1),(3,0)];
    for &(r,c) in &xx { m[(r,c)] += 1.0; }
    // X on first site (flip high bit), X on second (flip low bit)
    for b in 0..2 { m[(2+b, b)] += 0.5; m[(b, 2+b)] += 0.5; }
    for a in 0..2 { m[(2*a+1, 2*a)] += 0.5; m[(2*a, 2*a+1)] += 0.5; }
    for (i, z) in [1.0f64, -1.0, -1.0, 1.0].iter().enumerate() { m[(i,i)] += 0.3*z; }
    m
}

fn main() {
    for noise in [0.2f64, 0.35, 0.5, 0.8] {
        let pts: Vec<(f64, f64)> = (0..100u64)
            .into_par_iter()
            .map(|i| {
                let alpha = 0.25 + 5.75 * i as f64 / 99.0;
                for attempt in 0..256u64 {
                    let mut rng = SplitRng::stream(109, i * 256 + attempt);
                    let g = DMatrix::from_fn(4, 4, |_, _| rng.sample::<f64, _>(StandardNormal));
                    let h4 = background() + (&g + g.transpose()).scale(0.5 * noise);
                    let h = periodic_chain(2, 5, &h4).unwrap();
                    let pos = h.positive_part();
                    let pn: f64 = pos.iter().sum();
                    if pn < 1e-9 { continue; }
                    let mat = h.matrix() - &pos + pos.map(|v| v * alpha / pn * 32.0);
                    let ha = RealHamiltonian::new(mat).unwrap();
                    let t = TransferMatrix::from_hamiltonian(&ha, 1.0, 100).unwrap();
                    let s = average_sign_exact(&t).unwrap();
                    if s <= 1e-12 || s > 1.0 - 1e-9 { continue; }
                    return (32.0 * nonstoq(&ha, 1.0), (1.0 / s).ln());
                }
                panic!("no usable draw {i}");
            })
            .collect();
        let (slope, r2) = fit(&pts);
        let ymax = pts.iter().map(|p| p.1).fold(0.0f64, f64::max);
        println!("noise {noise}: slope {slope:.4}, R² {r2:.3}, ymax {ymax:.2}");
    }
}
