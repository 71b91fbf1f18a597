//! HTTP/JSON puzzle sessions for the interactive board.
//!
//! ```text
//! POST /puzzles                   create from a puzzle document or {family, params}
//! GET  /puzzles/{id}              session view
//! POST /puzzles/{id}/click        {"vertex": k}
//! POST /puzzles/{id}/undo
//! POST /puzzles/{id}/reset
//! GET  /puzzles/{id}/hint?target= all-off | all-on | corollary | 0/1 string
//! GET  /health
//! ```
//!
//! Session views embed the puzzle-document fields (`version`, `graph`,
//! `state`) next to `id`, `click_history`, `created_at` and `updated_at`
//! (milliseconds since the Unix epoch). Errors are `{"error": "..."}`.
//!
//! Mutations of one session are serialized by its mutex; different sessions
//! proceed in parallel. Hints clone the puzzle and solve outside any lock.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::document::{PuzzleDocument, Template};
use crate::solver::{self, Puzzle, Target, DEFAULT_NULLITY_BUDGET};
use crate::Error;

#[derive(Clone, Debug)]
pub struct Session {
    pub id: String,
    pub initial: Puzzle,
    pub puzzle: Puzzle,
    pub created_at: u64,
    pub updated_at: u64,
    pub click_history: Vec<usize>,
}

impl Session {
    fn new(id: String, puzzle: Puzzle) -> Self {
        let now = now_millis();
        Self {
            id,
            initial: puzzle.clone(),
            puzzle,
            created_at: now,
            updated_at: now,
            click_history: Vec::new(),
        }
    }

    fn touch(&mut self) {
        // strictly increasing so clients can detect every change
        self.updated_at = now_millis().max(self.updated_at + 1);
    }

    /// Replays the history from the initial state and compares.
    pub fn is_consistent(&self) -> bool {
        let mut replay = self.initial.clone();
        for &v in &self.click_history {
            if replay.click(v).is_err() {
                return false;
            }
        }
        replay == self.puzzle
    }

    pub fn view(&self) -> SessionView {
        SessionView {
            id: self.id.clone(),
            document: PuzzleDocument::from_puzzle(&self.puzzle),
            click_history: self.click_history.clone(),
            created_at: self.created_at,
            updated_at: self.updated_at,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    #[serde(flatten)]
    pub document: PuzzleDocument,
    pub click_history: Vec<usize>,
    pub created_at: u64,
    pub updated_at: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HintResponse {
    pub solvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clicks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    pub nullity: usize,
    pub target: String,
    pub updated_at: u64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CreateRequest {
    Document(PuzzleDocument),
    Template(Template),
}

#[derive(Debug, Deserialize)]
struct ClickRequest {
    vertex: usize,
}

#[derive(Debug, Deserialize)]
struct HintQuery {
    target: Option<String>,
}

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, Arc<Mutex<Session>>>>>,
    state_dir: Option<PathBuf>,
}

impl AppState {
    pub fn new(state_dir: Option<PathBuf>) -> Self {
        Self {
            sessions: Arc::default(),
            state_dir,
        }
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .read()
            .expect("session table poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session {id}")))
    }

    fn snapshot(&self, view: &SessionView) {
        let Some(dir) = &self.state_dir else {
            return;
        };
        let path = dir.join(format!("{}.json", view.id));
        let body = serde_json::to_string_pretty(view).expect("view is serializable");
        if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, body)) {
            tracing::warn!("snapshot to {} failed: {e}", path.display());
        }
    }
}

fn now_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

fn new_token() -> String {
    format!("{:032x}", rand::random::<u128>())
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }

    fn bad_request(e: impl std::fmt::Display) -> Self {
        Self::new(StatusCode::BAD_REQUEST, e.to_string())
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Internal(_) | Error::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::BAD_REQUEST,
        };
        Self::new(status, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

async fn create(
    State(app): State<AppState>,
    body: String,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let req: CreateRequest = serde_json::from_str(&body).map_err(|_| {
        ApiError::bad_request("body must be a puzzle document or {\"family\", \"params\"}")
    })?;
    let puzzle = match req {
        CreateRequest::Document(doc) => doc.to_puzzle()?,
        CreateRequest::Template(t) => Puzzle::all_off(t.build()?),
    };
    let id = new_token();
    let session = Session::new(id.clone(), puzzle);
    let view = session.view();
    app.sessions
        .write()
        .expect("session table poisoned")
        .insert(id, Arc::new(Mutex::new(session)));
    app.snapshot(&view);
    Ok((StatusCode::CREATED, Json(view)))
}

async fn get_session(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    let s = app.session(&id)?;
    let view = s.lock().expect("session poisoned").view();
    Ok(Json(view))
}

/// Runs `f` on the locked session, then snapshots the resulting view.
fn mutate(
    app: &AppState,
    id: &str,
    f: impl FnOnce(&mut Session) -> Result<(), ApiError>,
) -> Result<Json<SessionView>, ApiError> {
    let s = app.session(id)?;
    let view = {
        let mut guard = s.lock().expect("session poisoned");
        f(&mut guard)?;
        guard.touch();
        guard.view()
    };
    app.snapshot(&view);
    Ok(Json(view))
}

async fn click(
    State(app): State<AppState>,
    Path(id): Path<String>,
    body: String,
) -> Result<Json<SessionView>, ApiError> {
    let req: ClickRequest = serde_json::from_str(&body)
        .map_err(|_| ApiError::bad_request("body must be {\"vertex\": index}"))?;
    mutate(&app, &id, |s| {
        s.puzzle.click(req.vertex)?;
        s.click_history.push(req.vertex);
        Ok(())
    })
}

async fn undo(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    mutate(&app, &id, |s| {
        let last = s
            .click_history
            .pop()
            .ok_or_else(|| ApiError::new(StatusCode::CONFLICT, "nothing to undo"))?;
        s.puzzle.click(last)?;
        Ok(())
    })
}

async fn reset(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    mutate(&app, &id, |s| {
        s.puzzle = s.initial.clone();
        s.click_history.clear();
        Ok(())
    })
}

async fn hint(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<HintQuery>,
) -> Result<Json<HintResponse>, ApiError> {
    let target_name = q.target.unwrap_or_else(|| "all-off".into());
    let target: Target = target_name.parse()?;
    let (puzzle, updated_at) = {
        let s = app.session(&id)?;
        let guard = s.lock().expect("session poisoned");
        (guard.puzzle.clone(), guard.updated_at)
    };
    let goal = target.resolve(puzzle.graph())?;
    let resp = match solver::minimal_clicks(&puzzle, &goal, DEFAULT_NULLITY_BUDGET)? {
        Some(m) => HintResponse {
            solvable: true,
            weight: Some(m.clicks.weight()),
            clicks: Some(m.clicks.vertices()),
            minimal: Some(m.minimal),
            nullity: m.nullity,
            target: target_name,
            updated_at,
        },
        None => HintResponse {
            solvable: false,
            clicks: None,
            weight: None,
            minimal: None,
            nullity: solver::analyze(puzzle.graph()).nullity,
            target: target_name,
            updated_at,
        },
    };
    Ok(Json(resp))
}

#[cfg(debug_assertions)]
async fn consistency(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<serde_json::Value>, ApiError> {
    let s = app.session(&id)?;
    let guard = s.lock().expect("session poisoned");
    Ok(Json(json!({
        "consistent": guard.is_consistent(),
        "updated_at": guard.updated_at,
    })))
}

pub fn router(state: AppState) -> Router {
    let r = Router::new()
        .route("/health", get(health))
        .route("/puzzles", post(create))
        .route("/puzzles/{id}", get(get_session))
        .route("/puzzles/{id}/click", post(click))
        .route("/puzzles/{id}/undo", post(undo))
        .route("/puzzles/{id}/reset", post(reset))
        .route("/puzzles/{id}/hint", get(hint));
    #[cfg(debug_assertions)]
    let r = r.route("/puzzles/{id}/consistency", get(consistency));
    r.with_state(state)
}

/// Serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, state_dir: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(AppState::new(state_dir)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
            tracing::info!("shutting down");
        })
        .await
}
