//! File formats, reports, the `mbwm` command line and the HTTP service.

pub mod api;
pub mod error;
pub mod hierarchy_file;
pub mod input;
pub mod oracle_report;
pub mod report;
pub mod server;

use std::path::Path;

pub use api::{check, evaluate, CheckResponse, EvaluationRequest, EvaluationResponse, Options};
pub use error::{AppError, ErrorBody};

/// Reads a PCS file (JSON request or CSV) into a request, applying `options`
/// on top of any options stored in a JSON file.
pub fn load_request(path: &Path, options: &Options) -> Result<EvaluationRequest, AppError> {
    let text = input::read_file(path)?;
    let mut request = if input::is_csv(path) {
        EvaluationRequest::new(input::parse_csv(&text)?, Options::default())
    } else {
        serde_json::from_str::<EvaluationRequest>(&text)?
    };
    request.options.normalize_cr |= options.normalize_cr;
    if options.scale_policy != Default::default() {
        request.options.scale_policy = options.scale_policy;
    }
    Ok(request)
}

pub fn load_hierarchy(path: &Path) -> Result<hierarchy_file::HierarchyDocument, AppError> {
    Ok(serde_json::from_str(&input::read_file(path)?)?)
}
