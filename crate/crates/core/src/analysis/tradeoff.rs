/// Trade-off between the tolerated total-variation error of a sampler and
/// the fraction of instances that must be conjectured hard: keeping the
/// relative approximation error at 1/4 fixes `ε = δ/4`, and the hard
/// fraction is `γ(1-δ)` for an anticoncentration constant `γ`.
pub fn supremacy_tradeoff(gamma: f64, delta: f64) -> (f64, f64) {
    assert!(delta > 0.0 && delta < 1.0, "δ must lie in (0,1)");
    assert!(gamma > 0.0 && gamma <= 1.0, "γ must lie in (0,1]");
    (delta / 4.0, gamma * (1.0 - delta))
}
