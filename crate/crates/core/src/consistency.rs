//! Input-based consistency measures and the per-criterion deviation profile.

use serde::{Deserialize, Serialize};

use crate::analytic::diagnostics;
use crate::error::{PcsError, Result};
use crate::modified::g_distance;
use crate::pcs::{Pcs, ScaleWarning};
use crate::weights::WeightSet;

/// The largest ε* attainable for a given a_bw: max{a_bw^(1/3), a_bw^(1/2)}.
pub fn consistency_index(a_bw: f64) -> Result<f64> {
    if !(a_bw.is_finite() && a_bw > 0.0) {
        return Err(PcsError::NonpositiveEntry {
            vector: "a_bw",
            index: 0,
            value: a_bw,
        });
    }
    Ok(a_bw.cbrt().max(a_bw.sqrt()))
}

/// How the consistency ratio is reported.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrScale {
    /// ε* / CI.
    #[default]
    Ratio,
    /// (ε* - 1) / (CI - 1), which is 0 exactly for consistent input.
    Normalized,
}

fn ratio(eps_star: f64, ci: f64, scale: CrScale) -> f64 {
    match scale {
        CrScale::Ratio => eps_star / ci,
        CrScale::Normalized if ci > 1.0 => (eps_star - 1.0) / (ci - 1.0),
        // a_bw = 1 leaves no room for inconsistency on the standard scale
        CrScale::Normalized => {
            if eps_star > 1.0 {
                1.0
            } else {
                0.0
            }
        }
    }
}

/// Consistency ratio computed from the judgments alone; no weights are solved for.
pub fn consistency_ratio(pcs: &Pcs, scale: CrScale) -> f64 {
    let ci = consistency_index(pcs.a_bw()).expect("validated a_bw is positive");
    ratio(diagnostics(pcs).eps_star, ci, scale)
}

/// η_j = max{d(a_bj, w_b/w_j), d(a_jw, w_j/w_w)} for every criterion.
///
/// For the best and worst criteria one of the two terms compares 1 with 1, so
/// only the a_bw judgment participates.
pub fn deviation_profile(pcs: &Pcs, weights: &WeightSet) -> Vec<f64> {
    let (b, w) = (pcs.best(), pcs.worst());
    (0..pcs.n())
        .map(|j| {
            g_distance(pcs.a_b(j), weights[b] / weights[j])
                .max(g_distance(pcs.a_w(j), weights[j] / weights[w]))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub eps_star: f64,
    pub consistency_index: f64,
    pub consistency_ratio: f64,
    pub cr_scale: CrScale,
    /// Deviation profile of the weight set the report was built for, if any.
    pub deviations: Option<Vec<f64>>,
    pub scale_warnings: Vec<ScaleWarning>,
}

impl ConsistencyReport {
    /// Input-only report: ε*, CI and CR without computing any weights.
    pub fn input_based(pcs: &Pcs, scale: CrScale) -> Self {
        let eps_star = diagnostics(pcs).eps_star;
        let ci = consistency_index(pcs.a_bw()).expect("validated a_bw is positive");
        Self {
            eps_star,
            consistency_index: ci,
            consistency_ratio: ratio(eps_star, ci, scale),
            cr_scale: scale,
            deviations: None,
            scale_warnings: pcs.scale_warnings(),
        }
    }

    pub fn with_weights(mut self, pcs: &Pcs, weights: &WeightSet) -> Self {
        self.deviations = Some(deviation_profile(pcs, weights));
        self
    }
}
