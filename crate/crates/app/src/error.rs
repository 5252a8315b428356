use mbwm_core::hierarchy::HierarchyError;
use mbwm_core::oracle::OracleError;
use mbwm_core::PcsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(String),
    #[error("unknown criterion {name:?} in {field}")]
    UnknownCriterion { field: String, name: String },
    #[error("no {field} judgment for criterion {name:?}")]
    MissingEntry { field: String, name: String },
    #[error("{0} judgment(s) outside the 1/9..9 scale and the request rejects them")]
    OutOfScale(usize),
    #[error(transparent)]
    Pcs(#[from] PcsError),
    #[error(transparent)]
    Hierarchy(#[from] HierarchyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("port {port} is already in use")]
    PortInUse { port: u16 },
    #[error("{0}")]
    Internal(String),
}

impl AppError {
    pub fn code(&self) -> &'static str {
        match self {
            AppError::Io { .. } => "IO_ERROR",
            AppError::Parse(_) => "PARSE_ERROR",
            AppError::UnknownCriterion { .. } => "UNKNOWN_CRITERION",
            AppError::MissingEntry { .. } => "MISSING_ENTRY",
            AppError::OutOfScale(_) => "OUT_OF_SCALE",
            AppError::Pcs(e) => e.code(),
            AppError::Hierarchy(e) => e.code(),
            AppError::Oracle(e) => e.code(),
            AppError::PortInUse { .. } => "PORT_IN_USE",
            AppError::Internal(_) => "INTERNAL_ERROR",
        }
    }

    /// Errors caused by the input itself, as opposed to the environment or a solver failure.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            AppError::Io { .. }
                | AppError::PortInUse { .. }
                | AppError::Internal(_)
                | AppError::Oracle(OracleError::NoConvergence { .. })
        )
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        AppError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Parse(e.to_string())
    }
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::Parse(e.to_string())
    }
}

/// Body of every error reported by the service and by `--json` CLI runs.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub detail: String,
}

impl From<&AppError> for ErrorBody {
    fn from(e: &AppError) -> Self {
        ErrorBody {
            error: e.code().to_string(),
            detail: e.to_string(),
        }
    }
}
