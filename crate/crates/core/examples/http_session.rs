//! Drives the HTTP service in-process: create a session, click, ask for a
//! hint, follow it. Run `lightsout serve` to expose the same routes on a
//! socket.

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use lightsout::service::{router, AppState};

async fn send(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> Value {
    let body = body.map_or_else(Body::empty, |b| Body::from(b.to_string()));
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body)
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    println!("{method} {uri} -> {}", resp.status());
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    serde_json::from_slice(&bytes).unwrap()
}

#[tokio::main]
async fn main() {
    let app = router(AppState::default());

    let created = send(
        &app,
        "POST",
        "/puzzles",
        Some(json!({"family": "grid", "params": {"dims": [3, 3]}})),
    )
    .await;
    let id = created["id"].as_str().unwrap().to_owned();

    for v in [0, 4] {
        let view = send(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await;
        println!("  state {}", view["state"]);
    }

    let hint = send(
        &app,
        "GET",
        &format!("/puzzles/{id}/hint?target=all-off"),
        None,
    )
    .await;
    println!("  hint {hint}");
    let mut last = Value::Null;
    for v in hint["clicks"].as_array().unwrap() {
        last = send(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await;
    }
    println!(
        "  state {} after {} clicks",
        last["state"],
        last["click_history"].as_array().unwrap().len()
    );
}
