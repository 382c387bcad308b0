use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn hidesign(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hidesign"))
        .args(args)
        .current_dir(dir)
        .env_remove("HIDESIGN_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn table_grid_and_single_cell() {
    let dir = tempfile::tempdir().unwrap();
    let o = hidesign(
        &[
            "table",
            "--n",
            "3..10",
            "--t",
            "4..20",
            "--even",
            "--truncate",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    let t4: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(
        t4,
        ["4", "3.33..", "5", "7", "9.33..", "12", "15", "18.33..", "22"]
    );
    assert!(text.contains("21.97..") && text.contains("27.004.."));

    let o = hidesign(&["table", "--n", "5", "--t", "4"], dir.path());
    assert_eq!(stdout(&o).trim(), "7");

    let o = hidesign(&["table", "--n", "3..4", "--t", "5"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("A(n,5) = 2"));
}

#[test]
fn table_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = hidesign(
        &["--format", "csv", "table", "--n", "3..4", "--t", "4,6"],
        dir.path(),
    );
    let csv = stdout(&o);
    assert_eq!(csv.lines().next(), Some("n,t,c,b,b_printed,integral"));
    assert_eq!(csv.lines().count(), 5);
    let o = hidesign(
        &["--format", "json", "table", "--n", "3", "--t", "4"],
        dir.path(),
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["closed_form"], "10/3");
}

#[test]
fn bad_ranges_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&hidesign(&["table", "--n", "5..3", "--t", "4"], dir.path())),
        2
    );
    assert_eq!(
        code(&hidesign(&["table", "--n", "1", "--t", "4"], dir.path())),
        2
    );
    assert_eq!(
        code(&hidesign(
            &["table", "--n", "3", "--t", "5", "--even"],
            dir.path()
        )),
        2
    );
    assert_eq!(
        code(&hidesign(
            &["verify", "--in", "x.json", "--t", "4", "--tol", "-1"],
            dir.path()
        )),
        2
    );
}

#[test]
fn construct_lift_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(
        code(&hidesign(
            &[
                "construct",
                "regular-polygon",
                "--m",
                "5",
                "-o",
                "pentagon.json"
            ],
            p
        )),
        0
    );
    let o = hidesign(
        &[
            "construct",
            "lift",
            "--base",
            "pentagon.json",
            "--n",
            "3",
            "--t",
            "4",
            "--root-index",
            "1",
            "-o",
            "x.json",
        ],
        p,
    );
    assert_eq!(code(&o), 0);
    let lifted: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(p.join("x.json")).unwrap()).unwrap();
    let r1 = (525.0 + 70.0 * 30f64.sqrt()).sqrt() / 35.0;
    for pt in lifted["points"].as_array().unwrap() {
        let first: f64 = pt[0].as_str().unwrap().parse().unwrap();
        assert!((first - r1).abs() < 1e-15);
    }
    assert_eq!(
        code(&hidesign(&["verify", "--in", "x.json", "--t", "4"], p)),
        0
    );

    let o = hidesign(
        &[
            "construct",
            "lift",
            "--base",
            "pentagon.json",
            "--n",
            "3",
            "--t",
            "4",
            "--root-index",
            "7",
        ],
        p,
    );
    assert_eq!(code(&o), 2);
    let o = hidesign(
        &[
            "construct",
            "lift",
            "--base",
            "pentagon.json",
            "--n",
            "4",
            "--t",
            "4",
            "--root-index",
            "1",
        ],
        p,
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn generator_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    for (kind, size, t, tol, expect) in [
        ("icosahedron-half", 6, "8", "1e-9", 0),
        ("icosahedron-half", 6, "6", "1e-9", 1),
        ("e8-half", 120, "10", "1e-9", 0),
        ("cell600-half", 60, "58", "1e-8", 0),
        ("x0-plus", 5, "4", "1e-9", 0),
    ] {
        let o = hidesign(&["construct", kind], p);
        assert_eq!(code(&o), 0);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), size);
        std::fs::write(p.join("set.json"), stdout(&o)).unwrap();
        let o = hidesign(&["verify", "--in", "set.json", "--t", t, "--tol", tol], p);
        assert_eq!(code(&o), expect, "{kind} t={t}: {}", stdout(&o));
    }
}

#[test]
fn determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = stdout(&hidesign(&["construct", "cell600-half"], dir.path()));
    let b = stdout(&hidesign(&["construct", "cell600-half"], dir.path()));
    assert_eq!(a, b);
    let args = ["--format", "json", "tight", "--n", "23"];
    assert_eq!(
        stdout(&hidesign(&args, dir.path())),
        stdout(&hidesign(&args, dir.path()))
    );
}

#[test]
fn invalid_point_file_names_the_invariant() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"dim":2,"points":[["1","0.5"]],"source":"x"}"#,
    )
    .unwrap();
    let o = hidesign(&["verify", "--in", "bad.json", "--t", "2"], dir.path());
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a unit vector"));
    assert_eq!(
        code(&hidesign(
            &["verify", "--in", "missing.json", "--t", "2"],
            dir.path()
        )),
        2
    );
}

#[test]
fn asymptote_values() {
    let dir = tempfile::tempdir().unwrap();
    for (n, printed, abs) in [
        (3, 3.482871935, 6),
        (7, 35.11842602, 28),
        (9, 204.5294426, 45),
    ] {
        let o = hidesign(&["asymptote", "--n", &n.to_string()], dir.path());
        let text = stdout(&o);
        let fields: Vec<&str> = text.split_whitespace().collect();
        let value: f64 = fields[2].parse().unwrap();
        assert!(((value - printed) / printed).abs() < 1e-6, "{text}");
        assert_eq!(fields[3], format!("({abs})"));
    }
}

#[test]
fn tight_dossiers() {
    let dir = tempfile::tempdir().unwrap();
    let o = hidesign(&["--format", "json", "tight", "--n", "23"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["excluded"], true);
    assert!(stdout(&o).contains("44"));
    let o = hidesign(&["tight", "--n", "4"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("excluded") && !stdout(&o).contains("not excluded"));
    let o = hidesign(&["tight", "--n", "2"], dir.path());
    assert!(stdout(&o).contains("not excluded"));
}

const G4: &str = include_str!("../../core/tests/fixtures/g4.g6");

#[test]
fn embed_graph6_corpus() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g4.g6"), G4).unwrap();
    let o = hidesign(
        &["embed", "--graphs", "g4.g6", "--b2", "2", "--n", "2"],
        dir.path(),
    );
    assert_eq!(code(&o), 0);
    let records: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 11);
    // the two diagonals of a square
    let matching = records.iter().find(|r| r["graph6"] == "C`").unwrap();
    assert_eq!(matching["feasible"], true);
    assert_eq!(matching["rank"], 2);

    let o = hidesign(
        &[
            "embed",
            "--graphs",
            "g4.g6",
            "--b2",
            "(7+√33)/4",
            "--n",
            "3",
            "--feasible-only",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o).lines().count(), 11);
}

#[test]
fn embed_errors_and_json_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("bad.g6"), "C~\n\nC!\n").unwrap();
    let o = hidesign(&["embed", "--graphs", "bad.g6", "--b2", "2", "--n", "2"], p);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(
        code(&hidesign(
            &["embed", "--graphs", "bad.g6", "--b2", "1", "--n", "2"],
            p
        )),
        2
    );
    assert_eq!(
        code(&hidesign(
            &["embed", "--graphs", "bad.g6", "--b2", "x", "--n", "2"],
            p
        )),
        2
    );

    std::fs::write(
        p.join("sq.json"),
        r#"[{"order":4,"adjacency":[[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]]}]"#,
    )
    .unwrap();
    let o = hidesign(
        &["embed", "--graphs", "sq.json", "--b2", "2", "--n", "1"],
        p,
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(r#""feasible":false"#));

    let mut child = Command::new(env!("CARGO_BIN_EXE_hidesign"))
        .args(["embed", "--graphs", "-", "--b2", "2", "--n", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b">>graph6<<C`\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(stdout(&o).contains(r#""feasible":true"#));
}

#[test]
fn out_dir_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hidesign"))
        .args(["construct", "x0-minus", "-o", "sub/x0m.json"])
        .env("HIDESIGN_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("sub/x0m.json").exists());
}
