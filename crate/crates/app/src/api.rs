//! Request and response bodies shared by the CLI `--json` output and the HTTP service.

use indexmap::IndexMap;
use mbwm_core::{Case, ConsistencyReport, CrScale, Diagnostics, Evaluation, Pcs, ScaleWarning};
use serde::{Deserialize, Serialize};

use crate::error::AppError;
use crate::input::PcsDocument;

/// What to do with judgments outside the 1/9..9 scale.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalePolicy {
    #[default]
    Warn,
    Reject,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Options {
    /// Report CR as (ε* - 1) / (CI - 1) instead of ε* / CI.
    #[serde(default)]
    pub normalize_cr: bool,
    #[serde(default)]
    pub scale_policy: ScalePolicy,
}

impl Options {
    pub fn cr_scale(&self) -> CrScale {
        if self.normalize_cr {
            CrScale::Normalized
        } else {
            CrScale::Ratio
        }
    }
}

/// A PCS document plus options. A bare PCS document is a valid request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationRequest {
    #[serde(flatten)]
    pub pcs: PcsDocument,
    #[serde(default)]
    pub options: Options,
}

impl EvaluationRequest {
    pub fn new(pcs: PcsDocument, options: Options) -> Self {
        Self { pcs, options }
    }

    /// Validates the judgments and applies the scale policy.
    pub fn validate(&self) -> Result<Pcs, AppError> {
        let pcs = self.pcs.to_pcs()?;
        let warnings = pcs.scale_warnings();
        if self.options.scale_policy == ScalePolicy::Reject && !warnings.is_empty() {
            return Err(AppError::OutOfScale(warnings.len()));
        }
        Ok(pcs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsKind {
    Single,
    Pair,
}

/// One lower bound: ε_i (one criterion) or ε_{i,j} (two).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsEntry {
    pub kind: EpsKind,
    pub criteria: Vec<String>,
    pub value: f64,
}

/// Input-based consistency: everything that is known without solving for weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResponse {
    pub criteria: Vec<String>,
    pub best: String,
    pub worst: String,
    pub eps_table: Vec<EpsEntry>,
    pub d1: Vec<String>,
    pub d2: Vec<String>,
    pub i0: Option<String>,
    pub j0: Option<String>,
    pub eps_i0: Option<f64>,
    pub eps_j0: Option<f64>,
    pub eps_i0_j0: Option<f64>,
    pub case: Case,
    pub ties: Vec<Case>,
    pub eps_star: f64,
    pub ci: f64,
    pub cr: f64,
    pub cr_scale: CrScale,
    /// ε* equals 1: the judgments are already consistent.
    pub consistent: bool,
    pub warnings: Vec<ScaleWarning>,
}

impl CheckResponse {
    pub fn build(pcs: &Pcs, d: &Diagnostics, report: &ConsistencyReport) -> Self {
        let name = |i: usize| pcs.label(i).to_string();
        let mut eps_table: Vec<EpsEntry> = d
            .eps_single
            .iter()
            .map(|b| EpsEntry {
                kind: EpsKind::Single,
                criteria: vec![name(b.index)],
                value: b.value,
            })
            .collect();
        eps_table.extend(d.eps_pair.iter().map(|b| EpsEntry {
            kind: EpsKind::Pair,
            criteria: vec![name(b.i), name(b.j)],
            value: b.value,
        }));
        CheckResponse {
            criteria: pcs.labels().to_vec(),
            best: name(pcs.best()),
            worst: name(pcs.worst()),
            eps_table,
            d1: d.d1.iter().map(|&i| name(i)).collect(),
            d2: d.d2.iter().map(|&i| name(i)).collect(),
            i0: d.i0.map(name),
            j0: d.j0.map(name),
            eps_i0: d.eps_i0,
            eps_j0: d.eps_j0,
            eps_i0_j0: d.eps_i0_j0,
            case: d.case,
            ties: d.ties.clone(),
            eps_star: d.eps_star,
            ci: report.consistency_index,
            cr: report.consistency_ratio,
            cr_scale: report.cr_scale,
            consistent: d.is_consistent(),
            warnings: report.scale_warnings.clone(),
        }
    }
}

/// Input-based check of a request. Computes no weights.
pub fn check(request: &EvaluationRequest) -> Result<CheckResponse, AppError> {
    let pcs = request.validate()?;
    let d = mbwm_core::diagnostics(&pcs);
    let report = ConsistencyReport::input_based(&pcs, request.options.cr_scale());
    Ok(CheckResponse::build(&pcs, &d, &report))
}

/// Range of one entry pair over all optimally modified systems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModifiedRange {
    pub criterion: String,
    pub best_to_other: [f64; 2],
    pub other_to_worst: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightRange {
    pub criterion: String,
    pub lower: f64,
    pub upper: f64,
    pub centre: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationResponse {
    /// The request in canonical form: every judgment explicit, criteria order.
    pub request: EvaluationRequest,
    pub check: CheckResponse,
    pub a_bw_star: f64,
    pub modified_ranges: Vec<ModifiedRange>,
    pub interval_weights: Vec<WeightRange>,
    pub best_modified: PcsDocument,
    pub weights: IndexMap<String, f64>,
    /// η_j: distance of each criterion's judgments from the best weights.
    pub eta: IndexMap<String, f64>,
}

pub fn evaluate(request: &EvaluationRequest) -> Result<EvaluationResponse, AppError> {
    let pcs = request.validate()?;
    let eval = Evaluation::of(&pcs, request.options.cr_scale());
    let labels = pcs.labels();
    let a_bw = eval.fixed.a_bw;

    let modified_ranges = (0..pcs.n())
        .map(|i| {
            let (bo, ow) = match eval.intervals.iter().find(|iv| iv.index == i) {
                Some(iv) => {
                    let (lo, hi) = iv.other_to_worst(a_bw);
                    ([iv.lower, iv.upper], [lo, hi])
                }
                None => {
                    let m = &eval.best_modified;
                    ([m.a_b(i); 2], [m.a_w(i); 2])
                }
            };
            ModifiedRange {
                criterion: labels[i].clone(),
                best_to_other: bo,
                other_to_worst: ow,
            }
        })
        .collect();
    let interval_weights = (0..pcs.n())
        .map(|i| WeightRange {
            criterion: labels[i].clone(),
            lower: eval.interval_weights.lower[i],
            upper: eval.interval_weights.upper[i],
            centre: eval.interval_weights.centre(i),
        })
        .collect();
    let deviations = eval.report.deviations.clone().unwrap_or_default();

    let response = EvaluationResponse {
        request: EvaluationRequest::new(PcsDocument::from_pcs(&pcs), request.options.clone()),
        check: CheckResponse::build(&pcs, &eval.diagnostics, &eval.report),
        a_bw_star: a_bw,
        modified_ranges,
        interval_weights,
        best_modified: PcsDocument::from_pcs(&eval.best_modified),
        weights: labels.iter().cloned().zip(eval.weights.as_slice().iter().copied()).collect(),
        eta: labels.iter().cloned().zip(deviations).collect(),
    };
    Ok(response)
}
