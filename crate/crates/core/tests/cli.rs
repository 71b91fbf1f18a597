use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::Path;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use lightsout::document::PuzzleDocument;

fn lightsout(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lightsout"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_solve_then_apply() {
    let dir = tempfile::tempdir().unwrap();
    let board = dir.path().join("board.json");
    let o = lightsout(&["gen", "grid", "--dims", "5,5", "-o", path_str(&board)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "vertices: 25\nedges: 40\nself_loops: 25\n");

    let o = lightsout(&["solve", path_str(&board), "--target", "all-on", "--minimal"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("SOLVABLE\n"));
    assert!(text.contains("weight: 15\n"));
    assert!(text.contains("nullity: 2\n"));
    assert!(text.contains("minimal: true\n"));
    let clicks = text
        .lines()
        .find_map(|l| l.strip_prefix("clicks: "))
        .unwrap()
        .to_string();

    let clicks_file = dir.path().join("clicks.txt");
    std::fs::write(&clicks_file, format!("{clicks}\n")).unwrap();
    let lit = dir.path().join("lit.json");
    let o = lightsout(&[
        "apply",
        path_str(&board),
        "--clicks-file",
        path_str(&clicks_file),
        "-o",
        path_str(&lit),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "before: 0 on\nafter: 25 on\n");
    let doc = PuzzleDocument::read(&lit).unwrap();
    assert_eq!(doc.state, "1".repeat(25));

    // the same clicks again undo everything
    let o = lightsout(&["apply", path_str(&lit), "--clicks", &clicks]);
    assert_eq!(o.status.code(), Some(0));
    let back = PuzzleDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(back.state, "0".repeat(25));
}

#[test]
fn gen_to_stdout_is_a_clean_document() {
    let o = lightsout(&["gen", "hexagonal", "--radius", "1", "--self", "none"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = PuzzleDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.graph.n_vertices, 7);
    assert_eq!(doc.graph.edges.len(), 12);
    assert!(doc.graph.self_loops.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertices: 7"));
}

#[test]
fn unsolvable_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let board = dir.path().join("ring.json");
    std::fs::write(
        &board,
        r#"{"version": 1,
            "graph": {"n_vertices": 4, "edges": [[0, 1], [0, 2], [1, 3], [2, 3]], "self_loops": []},
            "state": "1000"}"#,
    )
    .unwrap();
    let o = lightsout(&["solve", path_str(&board)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "UNSOLVABLE\nnullity: 2\n");

    let o = lightsout(&["solve", path_str(&board), "--target", "0110"]);
    assert_eq!(o.status.code(), Some(3));
    let o = lightsout(&["solve", path_str(&board), "--target", "0111", "--minimal"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("clicks: 0011\n"));
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"version\": 1}").unwrap();
    for args in [
        vec!["solve", path_str(&junk)],
        vec!["solve", "/nonexistent/board.json"],
        vec!["gen", "grid", "--dims", "0"],
        vec!["gen", "cube"],
        vec!["frobnicate"],
        vec!["verify-theorem", "--density", "1.5", "--diag-density", "0"],
    ] {
        let o = lightsout(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_theorem_small_sweep() {
    let o = lightsout(&[
        "verify-theorem",
        "--n-max",
        "10",
        "--trials",
        "5",
        "--seed",
        "7",
        "--oracle-max",
        "10",
        "--records",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // 10 sizes × 5 trials × 9 density cells
    assert_eq!(text.lines().filter(|l| l.starts_with("n=")).count(), 450);
    assert!(text.contains("total: 450 successes, 0 failures"));
    assert!(text.contains("oracle: agree"));

    let again = lightsout(&[
        "verify-theorem",
        "--n-max",
        "10",
        "--trials",
        "5",
        "--seed",
        "7",
        "--oracle-max",
        "10",
        "--records",
    ]);
    assert_eq!(stdout(&again), text);
}

fn free_port() -> u16 {
    TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port()
}

fn http_get(port: u16, path: &str) -> Option<String> {
    let mut s = TcpStream::connect(("127.0.0.1", port)).ok()?;
    s.set_read_timeout(Some(Duration::from_secs(5))).ok()?;
    write!(
        s,
        "GET {path} HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n"
    )
    .ok()?;
    let mut body = String::new();
    s.read_to_string(&mut body).ok()?;
    Some(body)
}

#[test]
fn serve_answers_health_and_stops_on_interrupt() {
    let port = free_port();
    let mut child = Command::new(env!("CARGO_BIN_EXE_lightsout"))
        .args(["serve", "--port", &port.to_string()])
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();

    let deadline = Instant::now() + Duration::from_secs(10);
    let reply = loop {
        if let Some(r) = http_get(port, "/health") {
            break r;
        }
        assert!(Instant::now() < deadline, "server did not come up");
        std::thread::sleep(Duration::from_millis(50));
    };
    assert!(reply.starts_with("HTTP/1.1 200"));
    assert!(reply.contains(r#"{"status":"ok"}"#));

    let killed = Command::new("kill")
        .args(["-INT", &child.id().to_string()])
        .status()
        .unwrap();
    assert!(killed.success());
    let deadline = Instant::now() + Duration::from_secs(10);
    let status = loop {
        if let Some(s) = child.try_wait().unwrap() {
            break s;
        }
        if Instant::now() > deadline {
            child.kill().unwrap();
            panic!("server ignored the interrupt");
        }
        std::thread::sleep(Duration::from_millis(50));
    };
    assert_eq!(status.code(), Some(0));
}
