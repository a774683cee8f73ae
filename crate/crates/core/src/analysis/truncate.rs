use crate::prob::ProbabilityVector;

/// A probability vector with its largest entry and an ε-tail removed: the
/// object whose ℓ₂/₃ quasinorm sets the sample complexity of identity
/// testing.
#[derive(Debug, Clone)]
pub struct TruncatedVector {
    entries: Vec<f64>,
    removed_weight: f64,
}

impl TruncatedVector {
    /// Surviving entries, sorted descending.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Total weight of the removed tail (the removed maximum not included).
    pub fn removed_weight(&self) -> f64 {
        self.removed_weight
    }

    pub fn l23(&self) -> f64 {
        l23_quasinorm(&self.entries)
    }
}

/// `‖v‖_{ℓ₂/₃} = (Σ |vᵢ|^{2/3})^{3/2}`.
pub fn l23_quasinorm(v: &[f64]) -> f64 {
    v.iter()
        .map(|x| x.abs().powf(2.0 / 3.0))
        .sum::<f64>()
        .powf(1.5)
}

/// Remove from `probs` the smallest entries while their total stays ≤ `eps`
/// (ties broken by outcome index, smaller index removed first), then remove
/// the single largest remaining entry.
pub fn truncate(probs: &ProbabilityVector, eps: f64) -> TruncatedVector {
    assert!((0.0..1.0).contains(&eps), "tail weight must be in [0,1)");
    let mut order: Vec<usize> = (0..probs.len()).collect();
    // ascending by value, stable in outcome index
    order.sort_by(|&a, &b| probs[a].partial_cmp(&probs[b]).unwrap());
    let mut removed = vec![false; probs.len()];
    let mut removed_weight = 0.0;
    for &idx in &order {
        if removed_weight + probs[idx] <= eps {
            removed_weight += probs[idx];
            removed[idx] = true;
        } else {
            break;
        }
    }
    let mut entries: Vec<f64> = (0..probs.len())
        .filter(|&i| !removed[i])
        .map(|i| probs[i])
        .collect();
    entries.sort_by(|a, b| b.partial_cmp(a).unwrap());
    if !entries.is_empty() {
        entries.remove(0);
    }
    TruncatedVector {
        entries,
        removed_weight,
    }
}

/// Necessary and sufficient sample counts (up to universal constants,
/// reported as 1) for distinguishing `P` from anything ε-far in total
/// variation:
/// `lower = max{1/ε, ε⁻²·‖P^{-max}_{-2ε}‖_{2/3}}` and
/// `upper = max{1/ε, ε⁻²·‖P^{-max}_{-ε/16}‖_{2/3}}`.
pub fn vv_sample_bounds(probs: &ProbabilityVector, eps: f64) -> (f64, f64) {
    assert!(eps > 0.0 && eps < 0.5);
    let lower_norm = truncate(probs, 2.0 * eps).l23();
    let upper_norm = truncate(probs, eps / 16.0).l23();
    let lower = (1.0 / eps).max(lower_norm / (eps * eps));
    let upper = (1.0 / eps).max(upper_norm / (eps * eps));
    (lower, upper)
}
