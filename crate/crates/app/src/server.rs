//! Stateless JSON-over-HTTP service.

use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use mbwm_core::hierarchy::RankedWeights;
use serde::{Deserialize, Serialize};
use tokio::net::TcpListener;
use tower_http::services::ServeDir;

use crate::api::{self, CheckResponse, EvaluationRequest, EvaluationResponse};
use crate::error::{AppError, ErrorBody};
use crate::hierarchy_file::{evaluate_hierarchy, HierarchyDocument};

pub struct ApiError(pub AppError);

impl From<AppError> for ApiError {
    fn from(e: AppError) -> Self {
        ApiError(e)
    }
}

impl From<serde_json::Error> for ApiError {
    fn from(e: serde_json::Error) -> Self {
        ApiError(e.into())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = if self.0.is_validation() {
            StatusCode::BAD_REQUEST
        } else {
            StatusCode::INTERNAL_SERVER_ERROR
        };
        log::debug!("{} {}", self.0.code(), self.0);
        (status, Json(ErrorBody::from(&self.0))).into_response()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
}

async fn evaluate(body: Bytes) -> Result<Json<EvaluationResponse>, ApiError> {
    let request: EvaluationRequest = serde_json::from_slice(&body)?;
    Ok(Json(api::evaluate(&request)?))
}

async fn check(body: Bytes) -> Result<Json<CheckResponse>, ApiError> {
    let request: EvaluationRequest = serde_json::from_slice(&body)?;
    Ok(Json(api::check(&request)?))
}

async fn hierarchy(body: Bytes) -> Result<Json<RankedWeights>, ApiError> {
    let doc: HierarchyDocument = serde_json::from_slice(&body)?;
    Ok(Json(evaluate_hierarchy(&doc)?))
}

async fn health() -> Json<Health> {
    Json(Health {
        status: "ok".into(),
        version: env!("CARGO_PKG_VERSION").into(),
    })
}

async fn not_found() -> (StatusCode, Json<ErrorBody>) {
    (
        StatusCode::NOT_FOUND,
        Json(ErrorBody {
            error: "NOT_FOUND".into(),
            detail: "no such endpoint".into(),
        }),
    )
}

/// The API routes; anything else is served from `static_dir` when one is given.
pub fn router(static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/evaluate", post(evaluate))
        .route("/api/check", post(check))
        .route("/api/hierarchy", post(hierarchy))
        .route("/api/health", get(health));
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.fallback(not_found),
    }
}

pub async fn bind(addr: SocketAddr) -> Result<TcpListener, AppError> {
    TcpListener::bind(addr).await.map_err(|e| match e.kind() {
        std::io::ErrorKind::AddrInUse => AppError::PortInUse { port: addr.port() },
        _ => AppError::io(addr.to_string(), e),
    })
}

/// Serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, static_dir: Option<PathBuf>) -> Result<(), AppError> {
    let listener = bind(addr).await?;
    let local = listener.local_addr().map_err(|e| AppError::io(addr.to_string(), e))?;
    log::info!("listening on http://{local}");
    axum::serve(listener, router(static_dir))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
        .map_err(|e| AppError::Internal(e.to_string()))
}
