//! Weight sets derived from consistent comparison systems.

use serde::{Deserialize, Serialize};

use crate::analytic::{best_modified_pcs, diagnostics, fixed_reference_values, modified_pcs_intervals, Diagnostics};
use crate::error::Result;
use crate::modified::{check_consistent, CONSISTENCY_RTOL};
use crate::pcs::Pcs;

/// A normalised, strictly positive weight vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSet(Vec<f64>);

impl WeightSet {
    /// Normalises `raw` to sum 1. Returns `None` if any entry is not positive and finite.
    pub fn normalized(raw: Vec<f64>) -> Option<Self> {
        if raw.is_empty() || raw.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return None;
        }
        let total: f64 = raw.iter().sum();
        Some(Self(raw.into_iter().map(|w| w / total).collect()))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Index<usize> for WeightSet {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// The range each criterion's weight takes across all optimal weight sets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalWeights {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl IntervalWeights {
    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn bounds(&self, i: usize) -> (f64, f64) {
        (self.lower[i], self.upper[i])
    }

    pub fn centre(&self, i: usize) -> f64 {
        0.5 * (self.lower[i] + self.upper[i])
    }
}

/// w_j = a_jw / Σ_i a_iw for a consistent system.
pub fn consistent_weights(pcs: &Pcs) -> Result<WeightSet> {
    check_consistent(pcs, CONSISTENCY_RTOL)?;
    Ok(WeightSet::normalized(pcs.other_to_worst().to_vec()).expect("validated entries are positive"))
}

/// Lower and upper optimal weights of every criterion.
///
/// With inf/sup taken over all optimally modified systems,
/// w_i^l = inf ã_iw / (inf ã_iw + Σ_{j≠i} sup ã_jw) and
/// w_i^u = sup ã_iw / (sup ã_iw + Σ_{j≠i} inf ã_jw),
/// where ã_bw* is fixed for the best criterion and ã_ww = 1.
pub fn interval_weights(pcs: &Pcs, diag: &Diagnostics) -> IntervalWeights {
    let a_bw = fixed_reference_values(pcs, diag).a_bw;
    let n = pcs.n();
    let mut inf = vec![1.0; n];
    let mut sup = vec![1.0; n];
    inf[pcs.best()] = a_bw;
    sup[pcs.best()] = a_bw;
    for interval in modified_pcs_intervals(pcs, diag) {
        let (lo, hi) = interval.other_to_worst(a_bw);
        inf[interval.index] = lo;
        sup[interval.index] = hi;
    }
    let inf_total: f64 = inf.iter().sum();
    let sup_total: f64 = sup.iter().sum();
    let lower = (0..n)
        .map(|i| inf[i] / (inf[i] + (sup_total - sup[i])))
        .collect();
    let upper = (0..n)
        .map(|i| sup[i] / (sup[i] + (inf_total - inf[i])))
        .collect();
    IntervalWeights { lower, upper }
}

/// The weights of the best optimally modified system.
pub fn best_weight_set(pcs: &Pcs) -> WeightSet {
    let diag = diagnostics(pcs);
    let modified = best_modified_pcs(pcs, &diag);
    consistent_weights(&modified).expect("best modified system is consistent")
}
