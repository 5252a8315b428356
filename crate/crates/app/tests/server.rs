use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use mbwm_app::server::{bind, router};
use serde_json::{json, Value};
use tower::ServiceExt;

const EXAMPLE1: &str = include_str!("../fixtures/example1.json");

async fn call(app: Router, method: &str, uri: &str, body: impl Into<Body>) -> (StatusCode, Vec<u8>) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.into())
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, bytes.to_vec())
}

async fn call_json(method: &str, uri: &str, body: impl Into<Body>) -> (StatusCode, Value) {
    let (status, bytes) = call(router(None), method, uri, body).await;
    (status, serde_json::from_slice(&bytes).unwrap())
}

#[tokio::test]
async fn evaluate_example1() {
    let (status, bytes) = call(router(None), "POST", "/api/evaluate", EXAMPLE1).await;
    assert_eq!(status, StatusCode::OK);
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.contains("\"eps_star\":1.2331"));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert!((v["weights"]["c2"].as_f64().unwrap() - 0.4724).abs() < 1e-4);
    assert_eq!(v["request"]["best"], "c2");
}

#[tokio::test]
async fn best_equals_worst_is_400() {
    let mut body: Value = serde_json::from_str(EXAMPLE1).unwrap();
    body["worst"] = json!("c2");
    let (status, v) = call_json("POST", "/api/evaluate", body.to_string()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"], "BEST_EQUALS_WORST");
    assert!(v["detail"].is_string());
}

#[tokio::test]
async fn malformed_body_is_parse_error() {
    let (status, v) = call_json("POST", "/api/check", "{not json").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"], "PARSE_ERROR");
}

#[tokio::test]
async fn health() {
    let (status, v) = call_json("GET", "/api/health", Body::empty()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[tokio::test]
async fn check_has_no_weights_and_is_fast() {
    let body = json!({
        "criteria": ["a", "b", "c", "d", "e", "f", "g", "h", "i"],
        "best": "a",
        "worst": "i",
        "best_to_other": {"a": 1, "b": 2, "c": 3, "d": 4, "e": 5, "f": 6, "g": 7, "h": 8, "i": 9},
        "other_to_worst": {"a": 9, "b": 5, "c": 6, "d": 2, "e": 3, "f": 1.5, "g": 2, "h": 1, "i": 1},
        "ui": {"session": "ignored"}
    })
    .to_string();
    let app = router(None);
    // warm up once, then time the request on its own
    call(app.clone(), "POST", "/api/check", body.clone()).await;
    let started = Instant::now();
    let (status, bytes) = call(app, "POST", "/api/check", body).await;
    let elapsed = started.elapsed();
    assert_eq!(status, StatusCode::OK);
    assert!(elapsed < Duration::from_millis(10), "{elapsed:?}");
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    assert!(v.get("weights").is_none());
    assert_eq!(v["eps_table"].as_array().unwrap().len(), 7 + 21);
    for key in ["eps_star", "ci", "cr", "warnings"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[tokio::test]
async fn check_honours_options() {
    let mut body: Value = serde_json::from_str(EXAMPLE1).unwrap();
    body["options"] = json!({"normalize_cr": true});
    let (_, v) = call_json("POST", "/api/check", body.to_string()).await;
    assert_eq!(v["cr_scale"], "normalized");
    let eps = v["eps_star"].as_f64().unwrap();
    assert!((v["cr"].as_f64().unwrap() - (eps - 1.0) / (8f64.sqrt() - 1.0)).abs() < 1e-12);

    let mut body: Value = serde_json::from_str(EXAMPLE1).unwrap();
    body["best_to_other"]["c5"] = json!(12);
    body["other_to_worst"]["c2"] = json!(12);
    let (status, v) = call_json("POST", "/api/check", body.to_string()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 2);
    body["options"] = json!({"scale_policy": "reject"});
    let (status, v) = call_json("POST", "/api/check", body.to_string()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"], "OUT_OF_SCALE");
}

#[tokio::test]
async fn hierarchy_endpoint() {
    let body = include_str!("../fixtures/hierarchy_toy.json");
    let (status, v) = call_json("POST", "/api/hierarchy", body).await;
    assert_eq!(status, StatusCode::OK);
    let sum: f64 = v["leaves"].as_array().unwrap().iter().map(|l| l["global_weight"].as_f64().unwrap()).sum();
    assert!((sum - 1.0).abs() < 1e-9);

    let nested = json!({
        "categories": [{"name": "x", "leaves": ["a", {"name": "deep", "leaves": ["b"]}]}]
    });
    let (status, v) = call_json("POST", "/api/hierarchy", nested.to_string()).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["error"], "UNSUPPORTED_DEPTH");
}

#[tokio::test]
async fn unknown_route_is_404() {
    let (status, v) = call_json("GET", "/api/nothing", Body::empty()).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["error"], "NOT_FOUND");
}

#[tokio::test]
async fn static_dir_served_at_root() {
    let dir = std::env::temp_dir().join(format!("mbwm-static-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("index.html"), "<html>ui</html>").unwrap();
    let (status, bytes) = call(router(Some(dir.clone())), "GET", "/", Body::empty()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(bytes, b"<html>ui</html>");
    let (status, _) = call(router(Some(dir.clone())), "GET", "/api/health", Body::empty()).await;
    assert_eq!(status, StatusCode::OK);
    std::fs::remove_dir_all(&dir).ok();
}

#[tokio::test]
async fn port_in_use() {
    let taken = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = taken.local_addr().unwrap();
    let err = bind(addr).await.unwrap_err();
    assert_eq!(err.code(), "PORT_IN_USE");
    assert!(!err.is_validation());
}

#[tokio::test]
async fn concurrent_requests_agree() {
    let app = router(None);
    let handles: Vec<_> = (0..16)
        .map(|_| {
            let app = app.clone();
            tokio::spawn(async move { call(app, "POST", "/api/evaluate", EXAMPLE1).await.1 })
        })
        .collect();
    let mut bodies = Vec::new();
    for h in handles {
        bodies.push(h.await.unwrap());
    }
    assert!(bodies.windows(2).all(|w| w[0] == w[1]));
}
