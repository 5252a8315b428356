//! Closed-form multiplicative Best-Worst Method.
//!
//! Given the best-to-others and others-to-worst judgments of a decision maker,
//! this crate computes the optimal consistency level ε*, every optimally
//! modified (consistent) comparison system as per-entry intervals, the
//! resulting interval weights, the unique best modified system with its weight
//! set, and the input-based consistency index and ratio. The [`oracle`] module
//! solves the same minimax model numerically and shares none of the closed forms.

pub mod analytic;
pub mod consistency;
pub mod error;
pub mod hierarchy;
pub mod modified;
pub mod oracle;
pub mod pcs;
pub mod sample;
pub mod weights;

pub use analytic::{
    best_modified_pcs, diagnostics, fixed_reference_values, modified_pcs_intervals, Case, Diagnostics,
    EntryInterval, FixedValues,
};
pub use consistency::{consistency_index, consistency_ratio, deviation_profile, ConsistencyReport, CrScale};
pub use error::PcsError;
pub use modified::ModifiedPcs;
pub use pcs::{validate_pcs, Pcs, RawPcs, ScaleWarning};
pub use weights::{best_weight_set, consistent_weights, interval_weights, IntervalWeights, WeightSet};

/// Every closed-form result for one comparison system.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub diagnostics: Diagnostics,
    pub fixed: FixedValues,
    pub intervals: Vec<EntryInterval>,
    pub interval_weights: IntervalWeights,
    pub best_modified: ModifiedPcs,
    pub weights: WeightSet,
    pub report: ConsistencyReport,
}

impl Evaluation {
    pub fn of(pcs: &Pcs, scale: CrScale) -> Self {
        let diagnostics = diagnostics(pcs);
        let fixed = fixed_reference_values(pcs, &diagnostics);
        let intervals = modified_pcs_intervals(pcs, &diagnostics);
        let interval_weights = interval_weights(pcs, &diagnostics);
        let best_modified = best_modified_pcs(pcs, &diagnostics);
        let weights = consistent_weights(&best_modified).expect("best modified system is consistent");
        let report = ConsistencyReport::input_based(pcs, scale).with_weights(pcs, &weights);
        Self {
            diagnostics,
            fixed,
            intervals,
            interval_weights,
            best_modified,
            weights,
            report,
        }
    }
}
