use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(args)
        .env_remove("ECC_SPECTRA_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(stdout(out).trim()).unwrap()
}

#[test]
fn spectrum_of_p4_from_each_input() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("p4.g6");
    std::fs::write(&g6, "Ch\n").unwrap();
    let edges = dir.path().join("p4.json");
    std::fs::write(&edges, r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#).unwrap();

    let outputs = [
        run(&["spectrum", "--graph6", "Ch"]),
        run(&["spectrum", "--family", "path:4"]),
        run(&["spectrum", "--file", g6.to_str().unwrap()]),
        run(&["spectrum", "--file", edges.to_str().unwrap()]),
    ];
    for out in &outputs {
        let v = json(out);
        assert_eq!(v["spectrum"], serde_json::json!([4.0, 1.0, -1.0, -4.0]));
        assert_eq!(v["eccentricities"], serde_json::json!([3, 2, 2, 3]));
        assert_eq!(v["irreducible"], Value::Bool(true));
        assert_eq!(v["eps1"], 4.0);
        assert_eq!(v["eps_n"], -4.0);
    }
}

#[test]
fn spectrum_matrix_and_csv() {
    let v = json(&run(&["spectrum", "--family", "star:4", "--show-matrix"]));
    assert_eq!(v["matrix"][0], serde_json::json!([0, 1, 1, 1]));
    assert_eq!(v["matrix"][1], serde_json::json!([1, 0, 2, 2]));
    assert_eq!(v["eps_n"], -2.0);

    let out = run(&["spectrum", "--graph6", "Ch", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "index,eigenvalue\n1,4\n2,1\n3,-1\n4,-4\n");
}

#[test]
fn cycle_reports_reducible_matrix() {
    let v = json(&run(&["spectrum", "--graph6", "Cr"]));
    assert_eq!(v["n"], 4);
    assert_eq!(v["irreducible"], Value::Bool(false));
}

#[test]
fn exit_codes() {
    // parse errors
    assert_eq!(run(&["spectrum", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "--family", "cycle:4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["spectrum"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--check", "nonsense"]).status.code(),
        Some(2)
    );
    // validation errors
    assert_eq!(run(&["spectrum", "--graph6", "C`"]).status.code(), Some(3));
    assert_eq!(
        run(&["spectrum", "--family", "broom:6,3,1,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["spectrum", "--graph6", "Ch", "--tol", "1e-16"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--check", "odd-diam-max", "--n", "9", "--d", "6"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--check", "bounds", "--n-max", "15"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--check", "diam3-max"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["enumerate", "--n", "21"]).status.code(), Some(3));
    assert_eq!(
        run(&["formula", "gamma", "--d", "4"]).status.code(),
        Some(3)
    );
}

#[test]
fn enumerate_lists_graph6() {
    let out = run(&["enumerate", "--n", "5"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 3);
    let out = run(&[
        "enumerate",
        "--n",
        "6",
        "--diameter",
        "3",
        "--with-spectrum",
    ]);
    let text = stdout(&out);
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("graph6,diameter,eps1,eps_n"));
    assert_eq!(rows.count(), 2);
}

#[test]
fn verify_writes_jsonl_and_is_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.jsonl");
    let p = path.to_str().unwrap();
    let args = [
        "verify",
        "--check",
        "all",
        "--n-max",
        "9",
        "--d-max",
        "7",
        "--samples",
        "30",
        "--output",
        p,
    ];
    let first = run(&args);
    assert!(
        first.status.success(),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    let second = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(first.stdout, second.stdout);

    let written = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = written.lines().collect();
    // appended twice
    assert_eq!(lines.len(), 2 * stdout(&first).lines().count());
    for line in lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "verified");
        assert!(v.get("elapsed_ms").is_none());
    }
}

#[test]
fn verify_timings_and_env_jobs() {
    let out = Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(["verify", "--check", "diam3-max", "--n", "8", "--timings"])
        .env("ECC_SPECTRA_JOBS", "2")
        .output()
        .unwrap();
    let v = json(&out);
    assert!(v["elapsed_ms"].is_u64());
    assert_eq!(v["check_id"], "diam3-max");
    assert_eq!(v["parameters"]["n"], 8);
}

#[test]
fn formulas() {
    let v = json(&run(&["formula", "fa", "--n", "4", "--a", "0"]));
    assert_eq!((v["c2"].as_i64(), v["c0"].as_i64()), (Some(-17), Some(16)));
    assert_eq!(v["largest_root"], 4.0);

    let v = json(&run(&["formula", "gamma", "--d", "5"]));
    assert_eq!(v["gamma"], 25);

    let v = json(&run(&[
        "formula", "rho2", "--n", "8", "--d", "5", "--a", "1", "--b", "1",
    ]));
    assert_eq!(v["delta"], "30000");
    assert!((v["rho"].as_f64().unwrap() - 13.6602540378).abs() < 1e-9);

    let v = json(&run(&["formula", "hpoly", "--p", "0", "--q", "2"]));
    assert_eq!(
        v["coefficients"],
        serde_json::json!(["1", "0", "-42", "-32", "153", "0"])
    );

    let v = json(&run(&["formula", "hleast", "--p", "2", "--q", "2"]));
    assert!((v["least"].as_f64().unwrap() + 2.0 + 13f64.sqrt()).abs() < 1e-10);

    let v = json(&run(&["formula", "hcond", "--p", "2", "--q", "3"]));
    assert_eq!(v["attains_lower_bound"], false);
}
