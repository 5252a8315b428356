use thiserror::Error;

/// Validation and precondition failures for a pairwise comparison system.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PcsError {
    #[error("entry {vector}[{index}] = {value} is not a positive finite number")]
    NonpositiveEntry {
        vector: &'static str,
        index: usize,
        value: f64,
    },

    #[error("best and worst criterion are the same (index {0})")]
    BestEqualsWorst(usize),

    #[error("{vector}[{index}] must be 1 for the reference criterion, got {value}")]
    DiagonalNotOne {
        vector: &'static str,
        index: usize,
        value: f64,
    },

    #[error("best_to_other[worst] = {best_to_other} but other_to_worst[best] = {other_to_worst}")]
    CrossMismatch {
        best_to_other: f64,
        other_to_worst: f64,
    },

    #[error("{0}")]
    BadLength(String),

    #[error("reference index {index} out of range for {n} criteria")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("duplicate criterion label {0:?}")]
    DuplicateLabel(String),

    #[error("comparison system is not consistent at criterion {index}: a_bi * a_iw = {product}, a_bw = {a_bw}")]
    NotConsistent { index: usize, product: f64, a_bw: f64 },
}

impl PcsError {
    /// Stable machine-readable name, used by the CLI exit report and the HTTP error body.
    pub fn code(&self) -> &'static str {
        match self {
            PcsError::NonpositiveEntry { .. } => "NONPOSITIVE_ENTRY",
            PcsError::BestEqualsWorst(_) => "BEST_EQUALS_WORST",
            PcsError::DiagonalNotOne { .. } => "DIAGONAL_NOT_ONE",
            PcsError::CrossMismatch { .. } => "CROSS_MISMATCH",
            PcsError::BadLength(_) => "BAD_LENGTH",
            PcsError::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            PcsError::DuplicateLabel(_) => "DUPLICATE_LABEL",
            PcsError::NotConsistent { .. } => "NOT_CONSISTENT",
        }
    }
}

pub type Result<T, E = PcsError> = std::result::Result<T, E>;
