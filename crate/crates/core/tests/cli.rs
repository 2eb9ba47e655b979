use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-glue")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn complete(n: usize) -> String {
    let edges: Vec<String> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| format!("[{u},{v}]")))
        .collect();
    format!(r#"{{"vertices": {n}, "edges": [{}]}}"#, edges.join(","))
}

#[test]
fn path_even_laplacian() {
    let g = scratch("p3.json", r#"{"vertices": 3, "edges": [[0,1],[1,2]]}"#);
    let doc = json(&run(&["laplacian", g.to_str().unwrap(), "even"]));
    assert_eq!(doc["entries"].to_string(), "[[1,-1,0],[-1,2,-1],[0,-1,1]]");
}

#[test]
fn edgeless_odd_laplacian_is_empty() {
    let g = scratch("e3.json", r#"{"vertices": 3, "edges": []}"#);
    let doc = json(&run(&["laplacian", g.to_str().unwrap(), "odd"]));
    assert_eq!(doc["rows"], 0);
    assert_eq!(doc["cols"], 0);
}

#[test]
fn malformed_input_exits_2() {
    let g = scratch("bad.json", r#"{"vertices": 3, "edges": [[0,1]"#);
    let out = run(&["trees", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["trees", "/nonexistent/graph.json"]).status.code(), Some(2));
}

#[test]
fn invalid_graph_exits_3() {
    let g = scratch("loop.json", r#"{"vertices": 2, "edges": [[0,0]]}"#);
    assert_eq!(run(&["trees", g.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn bridged_edges_charpoly() {
    let k2 = scratch("k2.json", r#"{"vertices": 2, "edges": [[0,1]]}"#);
    let glue = scratch("bridge00.json", r#"{"mode": "bridge", "pairs": [[0,0]]}"#);
    let k2 = k2.to_str().unwrap();
    let out = run(&["glue", k2, k2, glue.to_str().unwrap(), "--emit", "charpoly", "--verify"]);
    let doc = json(&out);
    assert_eq!(doc["coefficients"].to_string(), "[0,-4,10,-6,1]");
    assert_eq!(doc["degree"], 4);
}

#[test]
fn empty_interface_is_block_diagonal() {
    let p2 = scratch("p2.json", r#"{"vertices": 2, "edges": [[0,1]]}"#);
    let glue = scratch("none.json", r#"{"mode": "interface", "vertices_1": [], "vertices_2": []}"#);
    let p2 = p2.to_str().unwrap();
    let doc = json(&run(&["glue", p2, p2, glue.to_str().unwrap(), "--emit", "even", "--verify"]));
    assert_eq!(doc["entries"].to_string(), "[[1,-1,0,0],[-1,1,0,0],[0,0,1,-1],[0,0,-1,1]]");
}

#[test]
fn every_emission_verifies() {
    let k4 = scratch("k4.json", &complete(4));
    let c = scratch("c5.json", r#"{"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}"#);
    let edge = scratch("edge.json", r#"{"mode": "interface", "vertices_1": [0,1], "vertices_2": [0,1]}"#);
    let point = scratch("point.json", r#"{"mode": "interface", "vertices_1": [2], "vertices_2": [4]}"#);
    let bridges = scratch("two.json", r#"{"mode": "bridge", "pairs": [[0,0],[3,2]]}"#);
    for glue in [&edge, &point, &bridges] {
        for emit in ["graph", "even", "odd", "charpoly", "spectrum"] {
            let out = run(&[
                "glue",
                k4.to_str().unwrap(),
                c.to_str().unwrap(),
                glue.to_str().unwrap(),
                "--emit",
                emit,
                "--verify",
            ]);
            assert!(out.status.success(), "{emit} {}: {}", glue.display(), String::from_utf8_lossy(&out.stderr));
        }
    }
}

#[test]
fn mismatched_interface_exits_3() {
    let k4 = scratch("k4b.json", &complete(4));
    let p2 = scratch("p2b.json", r#"{"vertices": 2, "edges": []}"#);
    let glue = scratch("edgemiss.json", r#"{"mode": "interface", "vertices_1": [0,1], "vertices_2": [0,1]}"#);
    let out = run(&["glue", k4.to_str().unwrap(), p2.to_str().unwrap(), glue.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn glued_complete_graphs() {
    let k5 = scratch("k5.json", &complete(5));
    let glue = scratch("vertex.json", r#"{"mode": "interface", "vertices_1": [0], "vertices_2": [0]}"#);
    let k5 = k5.to_str().unwrap();
    let glued = run(&["glue", k5, k5, glue.to_str().unwrap(), "--emit", "graph"]);
    let glued = scratch("k5k5.json", &text(&glued));
    let path = glued.to_str().unwrap();
    assert_eq!(text(&run(&["--format", "plain", "fiedler", path])), "1.00000000000\n");
    assert_eq!(json(&run(&["trees", path]))["spanning_trees"], 15625);
}

#[test]
fn cycle_trees_and_cheeger() {
    let c6 = scratch("c6.json", r#"{"vertices": 6, "edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]}"#);
    let c6 = c6.to_str().unwrap();
    assert_eq!(text(&run(&["--format", "plain", "trees", c6])), "6\n");
    let h = json(&run(&["cheeger", c6]));
    assert_eq!(h["cheeger"], "1");
    let big = scratch("k21.json", &complete(21));
    assert_eq!(run(&["cheeger", big.to_str().unwrap()]).status.code(), Some(5));
}

#[test]
fn evolve_transfers_amplitude() {
    let p2 = scratch("p2c.json", r#"{"vertices": 2, "edges": [[0,1]]}"#);
    let psi = scratch("psi.json", r#"{"amplitudes": [[1,0],[0,0]]}"#);
    let args = |dt: &'static str| {
        let p = p2.to_str().unwrap().to_owned();
        let s = psi.to_str().unwrap().to_owned();
        run(&["evolve", &p, &s, "--coeff", "1", "--dt", dt])
    };
    let doc = json(&args("1.5707963267948966"));
    let a: Vec<f64> = doc["amplitudes"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|z| z.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()))
        .collect();
    let want = [0.0, 0.0, 1.0, 0.0];
    assert!(a.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-10), "{a:?}");
    let still = json(&args("0"));
    assert_eq!(still["amplitudes"].to_string(), "[[1.00000000000,0.00000000000],[0.00000000000,0.00000000000]]");
    assert_eq!(still["norm"].to_string(), "1.00000000000");
}

#[test]
fn wrong_wave_length_exits_3() {
    let p2 = scratch("p2d.json", r#"{"vertices": 2, "edges": [[0,1]]}"#);
    let psi = scratch("psi3.json", r#"{"amplitudes": [[1,0],[0,0],[0,0]]}"#);
    let out = run(&["evolve", p2.to_str().unwrap(), psi.to_str().unwrap(), "--dt", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_reports_one_line_per_criterion() {
    let out = run(&["check"]);
    let stdout = text(&out);
    let lines: Vec<&str> = stdout.lines().filter(|l| l.starts_with("PASS [") || l.starts_with("FAIL [")).collect();
    assert!(lines.len() >= 20, "{stdout}");
    let failed = lines.iter().any(|l| l.starts_with("FAIL"));
    assert_eq!(out.status.code(), Some(if failed { 1 } else { 0 }));
}
