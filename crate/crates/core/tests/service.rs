use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use lightsout::service::{router, AppState};

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(match body {
            Some(v) => Body::from(v.to_string()),
            None => Body::empty(),
        })
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, value)
}

async fn create(app: &Router, body: Value) -> String {
    let (status, view) = call(app, "POST", "/puzzles", Some(body)).await;
    assert_eq!(status, StatusCode::CREATED, "{view}");
    view["id"].as_str().unwrap().to_string()
}

fn grid_template(dims: &[usize], self_affect: &str) -> Value {
    json!({"family": "grid", "params": {"dims": dims, "self_affect": self_affect}})
}

fn app() -> Router {
    router(AppState::default())
}

#[tokio::test]
async fn health() {
    let (status, body) = call(&app(), "GET", "/health", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "ok");
}

#[tokio::test]
async fn create_from_template() {
    let app = app();
    let (status, view) = call(
        &app,
        "POST",
        "/puzzles",
        Some(grid_template(&[3, 3], "all")),
    )
    .await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(view["version"], 1);
    assert_eq!(view["graph"]["n_vertices"], 9);
    assert_eq!(view["graph"]["edges"].as_array().unwrap().len(), 12);
    assert_eq!(view["graph"]["self_loops"].as_array().unwrap().len(), 9);
    assert_eq!(view["graph"]["labels"][4]["coords"], json!([1.0, 1.0]));
    assert_eq!(view["state"], "000000000");
    assert_eq!(view["id"].as_str().unwrap().len(), 32);
    assert!(view["updated_at"].as_u64().is_some());
}

#[tokio::test]
async fn create_from_document_echoes_it() {
    let app = app();
    let doc = json!({
        "version": 1,
        "graph": {"n_vertices": 3, "edges": [[0, 1], [1, 2]], "self_loops": [1]},
        "state": "101"
    });
    let (status, view) = call(&app, "POST", "/puzzles", Some(doc.clone())).await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(view["graph"], doc["graph"]);
    assert_eq!(view["state"], "101");
}

#[tokio::test]
async fn create_rejects_bad_bodies() {
    let app = app();
    for body in [
        grid_template(&[0], "all"),
        json!({"family": "cube"}),
        json!({"version": 1, "graph": {"n_vertices": 1, "edges": [], "self_loops": []}, "state": "11"}),
        json!([1, 2, 3]),
    ] {
        let (status, err) = call(&app, "POST", "/puzzles", Some(body.clone())).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{body}");
        assert!(err["error"].is_string());
    }
}

#[tokio::test]
async fn click_toggles_plus_shape_and_back() {
    let app = app();
    let id = create(&app, grid_template(&[3, 3], "all")).await;
    let uri = format!("/puzzles/{id}/click");
    let (status, view) = call(&app, "POST", &uri, Some(json!({"vertex": 4}))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(view["state"], "010111010");
    assert_eq!(view["click_history"], json!([4]));
    let first_update = view["updated_at"].as_u64().unwrap();

    let (_, view) = call(&app, "POST", &uri, Some(json!({"vertex": 4}))).await;
    assert_eq!(view["state"], "000000000");
    assert!(view["updated_at"].as_u64().unwrap() > first_update);

    let (status, _) = call(&app, "POST", &uri, Some(json!({"vertex": 9}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", &uri, Some(json!({"v": 1}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn unknown_session_is_404() {
    let app = app();
    for (method, uri) in [
        ("GET", "/puzzles/nope"),
        ("POST", "/puzzles/nope/undo"),
        ("POST", "/puzzles/nope/reset"),
        ("GET", "/puzzles/nope/hint"),
    ] {
        let (status, _) = call(&app, method, uri, None).await;
        assert_eq!(status, StatusCode::NOT_FOUND, "{method} {uri}");
    }
    let (status, _) = call(
        &app,
        "POST",
        "/puzzles/nope/click",
        Some(json!({"vertex": 0})),
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn undo_and_reset() {
    let app = app();
    let id = create(&app, grid_template(&[3, 3], "all")).await;
    let (status, _) = call(&app, "POST", &format!("/puzzles/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);

    call(
        &app,
        "POST",
        &format!("/puzzles/{id}/click"),
        Some(json!({"vertex": 0})),
    )
    .await;
    let (_, view) = call(&app, "POST", &format!("/puzzles/{id}/undo"), None).await;
    assert_eq!(view["state"], "000000000");
    assert_eq!(view["click_history"], json!([]));

    for v in [1, 5, 7] {
        call(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await;
    }
    let (_, view) = call(&app, "POST", &format!("/puzzles/{id}/reset"), None).await;
    assert_eq!(view["state"], "000000000");
    assert_eq!(view["click_history"], json!([]));
    let (_, fetched) = call(&app, "GET", &format!("/puzzles/{id}"), None).await;
    assert_eq!(fetched, view);
}

#[tokio::test]
async fn hint_examples() {
    let app = app();
    let solved = create(&app, grid_template(&[3, 3], "all")).await;
    let (status, hint) = call(
        &app,
        "GET",
        &format!("/puzzles/{solved}/hint?target=all-off"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(hint["solvable"], true);
    assert_eq!(hint["clicks"], json!([]));
    assert_eq!(hint["weight"], 0);

    let single = create(
        &app,
        json!({"version": 1, "graph": {"n_vertices": 1, "edges": [], "self_loops": [0]}, "state": "0"}),
    )
    .await;
    let (_, hint) = call(
        &app,
        "GET",
        &format!("/puzzles/{single}/hint?target=corollary"),
        None,
    )
    .await;
    assert_eq!(hint["clicks"], json!([0]));

    let red = create(
        &app,
        json!({"version": 1,
               "graph": {"n_vertices": 4, "edges": [[0, 1], [0, 2], [1, 3], [2, 3]], "self_loops": []},
               "state": "1000"}),
    )
    .await;
    let (_, hint) = call(
        &app,
        "GET",
        &format!("/puzzles/{red}/hint?target=all-off"),
        None,
    )
    .await;
    assert_eq!(hint["solvable"], false);
    assert!(hint.get("clicks").is_none());
    assert_eq!(hint["nullity"], 2);

    let (status, _) = call(
        &app,
        "GET",
        &format!("/puzzles/{red}/hint?target=sideways"),
        None,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "GET", &format!("/puzzles/{red}/hint?target=10"), None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn hint_does_not_mutate_and_its_clicks_reach_the_target() {
    let app = app();
    let id = create(&app, grid_template(&[5, 5], "all")).await;
    let (_, before) = call(&app, "GET", &format!("/puzzles/{id}"), None).await;
    let (_, hint) = call(
        &app,
        "GET",
        &format!("/puzzles/{id}/hint?target=corollary"),
        None,
    )
    .await;
    let (_, after) = call(&app, "GET", &format!("/puzzles/{id}"), None).await;
    assert_eq!(before, after);
    assert_eq!(hint["solvable"], true);
    assert_eq!(hint["minimal"], true);
    assert_eq!(hint["nullity"], 2);
    assert_eq!(hint["weight"], 15);

    let mut last = Value::Null;
    for v in hint["clicks"].as_array().unwrap() {
        last = call(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await
        .1;
    }
    assert_eq!(last["state"], "1".repeat(25));
}

#[tokio::test]
async fn history_replays_to_state() {
    let app = app();
    let id = create(
        &app,
        json!({"family": "hexagonal", "params": {"radius": 2, "self_affect": "none"}}),
    )
    .await;
    let clicks = [3usize, 17, 0, 3, 9, 12, 12, 5];
    for v in clicks {
        call(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await;
    }
    let (_, view) = call(&app, "POST", &format!("/puzzles/{id}/undo"), None).await;
    assert_eq!(view["click_history"], json!(clicks[..clicks.len() - 1]));
    let (_, check) = call(&app, "GET", &format!("/puzzles/{id}/consistency"), None).await;
    assert_eq!(check["consistent"], true);

    // a state reached by clicking from all-off can always be clicked back
    let (_, hint) = call(
        &app,
        "GET",
        &format!("/puzzles/{id}/hint?target=all-off"),
        None,
    )
    .await;
    assert_eq!(hint["solvable"], true);
    let mut state = view["state"].clone();
    for v in hint["clicks"].as_array().unwrap() {
        state = call(
            &app,
            "POST",
            &format!("/puzzles/{id}/click"),
            Some(json!({"vertex": v})),
        )
        .await
        .1["state"]
            .clone();
    }
    assert_eq!(state, "0".repeat(19));
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_clicks_are_serialized() {
    let app = app();
    let id = create(&app, grid_template(&[4, 4], "all")).await;
    let mut tasks = Vec::new();
    for k in 0..64usize {
        let app = app.clone();
        let uri = format!("/puzzles/{id}/click");
        tasks.push(tokio::spawn(async move {
            call(&app, "POST", &uri, Some(json!({"vertex": k % 16})))
                .await
                .0
        }));
    }
    for t in tasks {
        assert_eq!(t.await.unwrap(), StatusCode::OK);
    }
    let (_, view) = call(&app, "GET", &format!("/puzzles/{id}"), None).await;
    assert_eq!(view["click_history"].as_array().unwrap().len(), 64);
    // every vertex clicked four times: back to all off
    assert_eq!(view["state"], "0".repeat(16));
    let (_, check) = call(&app, "GET", &format!("/puzzles/{id}/consistency"), None).await;
    assert_eq!(check["consistent"], true);
}

#[tokio::test]
async fn snapshots_written_to_state_dir() {
    let dir = tempfile::tempdir().unwrap();
    let app = router(AppState::new(Some(dir.path().to_path_buf())));
    let id = create(&app, grid_template(&[2, 2], "all")).await;
    call(
        &app,
        "POST",
        &format!("/puzzles/{id}/click"),
        Some(json!({"vertex": 0})),
    )
    .await;
    let saved: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join(format!("{id}.json"))).unwrap(),
    )
    .unwrap();
    assert_eq!(saved["state"], "1110");
    assert_eq!(saved["click_history"], json!([0]));
}
