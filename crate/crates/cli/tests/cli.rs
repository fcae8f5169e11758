use std::path::Path;
use std::process::{Command, Output};

use prolate::pswf::{solve_pswfs, RadialFamily};

fn prolate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prolate"))
        .args(args)
        .env_remove("PROLATE_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

fn column(text: &str, name: &str) -> Vec<f64> {
    let (header, rows) = csv(text);
    let i = header.iter().position(|h| h == name).unwrap();
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

fn write_points(dir: &Path, points: &[&[f64]]) -> String {
    let path = dir.join("pts.txt");
    let body: String = points
        .iter()
        .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn solve_csv_ground_state() {
    let out = prolate(&[
        "solve", "--dim", "2", "--alpha", "0", "--c", "1", "--n", "0", "--k-max", "0", "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("k,chi,lambda,mu,K\n"));
    let chi = column(&text, "chi");
    assert_eq!(chi.len(), 1);
    assert!((chi[0] - 0.489593258779101).abs() < 1e-14, "{}", chi[0]);
}

#[test]
fn solve_at_zero_bandwidth_gives_jacobi_eigenvalues() {
    let text = stdout(&prolate(&[
        "solve", "--dim", "2", "--alpha", "0", "--c", "0", "--n", "1", "--k-max", "2",
    ]));
    assert_eq!(column(&text, "chi"), vec![3.0, 15.0, 35.0]);
    let (_, rows) = csv(&text);
    assert!(rows.iter().all(|r| r[2].is_empty() && r[3].is_empty()));
}

#[test]
fn solve_json_schema_and_lambda() {
    let text = stdout(&prolate(&[
        "solve", "--dim", "3", "--alpha", "1", "--c", "0.1", "--n", "0", "--k-max", "0", "--format", "json",
    ]));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["params"]["d"], 3);
    assert_eq!(doc["params"]["alpha"], 1.0);
    let row = &doc["results"][0];
    assert_eq!(row["k"], 0);
    let lambda = row["lambda"].as_f64().unwrap();
    assert!(((lambda - 1.675003294483135) / lambda).abs() < 1e-13, "{lambda}");
    assert!((row["mu"].as_f64().unwrap() - lambda * lambda).abs() < 1e-14);
    let coeffs = row["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), row["K"].as_u64().unwrap() as usize + 1);
    let norm: f64 = coeffs.iter().map(|v| v.as_f64().unwrap().powi(2)).sum();
    assert!((norm - 1.0).abs() < 1e-14);
}

#[test]
fn csv_round_trip_reproduces_in_memory_values() {
    let text = stdout(&prolate(&[
        "solve", "--dim", "2", "--alpha", "0.5", "--c", "7", "--n", "2", "--k-max", "5",
    ]));
    let sols = solve_pswfs(&RadialFamily::new(2, 0.5, 7.0, 2).unwrap(), 5).unwrap();
    for (parsed, s) in column(&text, "chi").iter().zip(&sols) {
        assert!((parsed - s.chi).abs() <= 1e-15 * s.chi.abs());
    }
    assert!(!text.contains('\r'));
}

#[test]
fn eval_slepian_profile() {
    let text = stdout(&prolate(&[
        "eval",
        "--dim",
        "2",
        "--alpha",
        "0",
        "--c",
        "1",
        "--n",
        "0",
        "--k",
        "0",
        "--form",
        "slepian",
        "--r",
        "0.1:0.1:0.3",
    ]));
    assert_eq!(column(&text, "r"), vec![0.1, 0.2, 0.3]);
    let want = [
        4.746377794187660e-01,
        6.687764918417400e-01,
        8.140701934306384e-01,
    ];
    for (got, want) in column(&text, "value").iter().zip(want) {
        assert!(((got - want) / want).abs() < 1e-13, "{got} vs {want}");
    }
}

#[test]
fn eval_phi_at_zero_bandwidth_is_jacobi() {
    let text = stdout(&prolate(&[
        "eval", "--dim", "2", "--alpha", "0", "--c", "0", "--k", "1", "--form", "phi", "--r", "0:0.5:1",
    ]));
    let v = column(&text, "value");
    // At c = 0, k = 1 the profile is the degree-1 Jacobi polynomial in η = 2r² - 1,
    // here odd in η (β = 0 when d = 2, n = 0, α = 0): φ(-1) = -φ(1), φ(-1/2) = -φ(1)/2.
    assert!((v[0] + v[2]).abs() < 1e-14);
    assert!((v[1] - (-0.5 * v[2])).abs() < 1e-14);
}

#[test]
fn eval_at_points_uses_the_norm() {
    let dir = tempfile::tempdir().unwrap();
    let pts = write_points(dir.path(), &[&[0.3, 0.4], &[0.0, -0.5]]);
    let text = stdout(&prolate(&[
        "eval", "--dim", "2", "--alpha", "1", "--c", "3", "--n", "1", "--k", "1", "--points", &pts,
    ]));
    let v = column(&text, "value");
    assert_eq!(v.len(), 2);
    assert_eq!(v[0], v[1]);
}

#[test]
fn eval_ball_parity() {
    let dir = tempfile::tempdir().unwrap();
    let pts = write_points(dir.path(), &[&[0.2, -0.35], &[-0.2, 0.35]]);
    for n in ["1", "2"] {
        let text = stdout(&prolate(&[
            "eval-ball",
            "--dim",
            "2",
            "--alpha",
            "0",
            "--c",
            "4",
            "--n",
            n,
            "--k",
            "1",
            "--ell",
            "2",
            "--points",
            &pts,
        ]));
        let v = column(&text, "value");
        let sign = if n == "1" { -1.0 } else { 1.0 };
        assert!((v[1] - sign * v[0]).abs() <= 1e-14 * v[0].abs(), "n={n}: {v:?}");
        assert!(v[0].abs() > 1e-3);
    }
}

#[test]
fn quad_two_point_legendre() {
    let text = stdout(&prolate(&["quad", "--alpha", "0", "--beta", "0", "--m", "2"]));
    let (header, _) = csv(&text);
    assert_eq!(header, ["node", "weight"]);
    let nodes = column(&text, "node");
    let x = 0.5773502691896258;
    assert!((nodes[0] + x).abs() < 1e-15 && (nodes[1] - x).abs() < 1e-15);
    assert!(column(&text, "weight").iter().all(|w| (w - 1.0).abs() < 1e-15));
}

#[test]
fn table_one_passes() {
    let out = prolate(&["table", "--id", "1"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cases = report["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases
        .iter()
        .all(|c| c["pass"] == true && c["tolerance"].as_f64().unwrap() <= 1e-10));
}

#[test]
fn verify_exit_codes() {
    assert!(prolate(&["verify", "--suite", "bounds"]).status.success());
    // Tiny-λ Hankel cases sit on a rounding floor and fail the relative tolerance.
    assert_eq!(prolate(&["verify", "--suite", "hankel"]).status.code(), Some(1));
}

#[test]
fn tolerance_override() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_prolate"))
            .args(["table", "--id", "2"])
            .env("PROLATE_TOL", tol)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("1"), Some(0));
    assert_eq!(run("1e-12"), Some(1));
    assert_eq!(run("zero"), Some(2));
    assert_eq!(run("-1"), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let out = prolate(&[
        "quad",
        "--alpha",
        "0.5",
        "--beta",
        "1",
        "--m",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn validation_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0.1 zz\n").unwrap();
    let bad = bad.to_str().unwrap();
    let wrong_dim = write_points(dir.path(), &[&[0.1, 0.2, 0.3]]);
    for args in [
        vec!["solve", "--dim", "2", "--alpha", "-2", "--c", "1"],
        vec!["solve", "--dim", "0", "--alpha", "0", "--c", "1"],
        vec!["solve", "--dim", "2", "--alpha", "0", "--c", "-1"],
        vec![
            "solve", "--dim", "2", "--alpha", "0", "--c", "1", "--format", "xml",
        ],
        vec![
            "eval", "--dim", "2", "--alpha", "0", "--c", "1", "--k", "0", "--r", "0.1:0:1",
        ],
        vec![
            "eval", "--dim", "2", "--alpha", "0", "--c", "1", "--k", "0", "--r", "a:b",
        ],
        vec![
            "eval", "--dim", "2", "--alpha", "0", "--c", "1", "--k", "0", "--form", "wavy", "--r", "0:0.1:1",
        ],
        vec![
            "eval", "--dim", "2", "--alpha", "0", "--c", "1", "--k", "0", "--points", bad,
        ],
        vec![
            "eval-ball",
            "--dim",
            "2",
            "--alpha",
            "0",
            "--c",
            "1",
            "--k",
            "0",
            "--points",
            &wrong_dim,
        ],
        vec![
            "eval-ball",
            "--dim",
            "2",
            "--alpha",
            "0",
            "--c",
            "1",
            "--n",
            "1",
            "--k",
            "0",
            "--ell",
            "3",
            "--points",
            &wrong_dim,
        ],
        vec![
            "eval-ball",
            "--dim",
            "5",
            "--alpha",
            "0",
            "--c",
            "1",
            "--k",
            "0",
            "--points",
            &wrong_dim,
        ],
        vec!["table", "--id", "7"],
        vec!["verify", "--suite", "everything"],
        vec!["quad", "--alpha", "-1", "--beta", "0", "--m", "2"],
        vec!["quad", "--alpha", "0", "--beta", "0", "--m", "0"],
    ] {
        assert_eq!(prolate(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn truncation_failure_exits_three() {
    let out = prolate(&[
        "solve", "--dim", "2", "--alpha", "0", "--c", "100", "--k-max", "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation"));
}
