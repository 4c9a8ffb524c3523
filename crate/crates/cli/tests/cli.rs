//! End-to-end tests of the command-line surface: flag parsing, report
//! shapes, exit codes, and the batch driver.

use std::process::{Command, Output};

fn abfactor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abfactor"))
        .args(args)
        .env_remove("ABFACTOR_ENUM_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn decide_triangle() {
    let out = abfactor(&["decide", "--graph6", "Bw", "--a", "1", "--b", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["has_factor"], true);
    assert_eq!(v["result"]["graph"]["n"], 3);
    assert_eq!(v["config"]["params"]["graph6"], "Bw");
    assert!(v["config_hash"].as_str().unwrap().len() == 16);
}

#[test]
fn construct_round_trips_through_decide() {
    // threshold extremal graph: factor-free by construction
    let out = abfactor(&["construct", "--family", "threshold", "--params", "a=2,n=6"]);
    assert!(out.status.success());
    let code = String::from_utf8(out.stdout).unwrap().trim().to_string();

    // identical graph after decode: the JSON report echoes the same code
    let out = abfactor(&[
        "construct", "--family", "threshold", "--params", "a=2,n=6", "--format", "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["graph"]["graph6"], code.as_str());
    assert_eq!(v["result"]["graph"]["edges"], 11);

    let out = abfactor(&["decide", "--graph6", &code, "--a", "2", "--b", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["has_factor"], false);
    let out = abfactor(&["decide", "--graph6", &code, "--a", "1", "--b", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["has_factor"], true);
}

#[test]
fn construct_families_and_param_validation() {
    let out = abfactor(&[
        "construct", "--family", "double-nested", "--params", "ps=1+3,qs=4+1", "--format", "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["graph"]["parts"], serde_json::json!([4, 5]));
    assert_eq!(v["result"]["graph"]["edges"], 17);

    // unknown keys are rejected
    let out = abfactor(&["construct", "--family", "complete", "--params", "n=4,bogus=1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = abfactor(&["construct", "--family", "no-such-family", "--params", "n=4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectral_reports_radius_iterations_residual() {
    let out = abfactor(&["construct", "--family", "complete-bipartite", "--params", "p=2,q=3"]);
    let code = String::from_utf8(out.stdout).unwrap().trim().to_string();
    let out = abfactor(&["spectral", "--graph6", &code]);
    let v = stdout_json(&out);
    let radius = v["result"]["radius"].as_f64().unwrap();
    assert!((radius - 6f64.sqrt()).abs() < 1e-9);
    assert!(v["result"]["iterations"].as_u64().is_some());
    assert!(v["result"]["residual"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn bound_reports_the_extremal_answer() {
    let out = abfactor(&["bound", "--theorem", "1.1", "--n", "6", "--a", "2", "--b", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["bound"]["value"], 11);
    let extremal = v["result"]["extremal"].as_array().unwrap();
    assert_eq!(extremal.len(), 1);
    assert!(extremal[0]["graph6"].as_str().is_some());

    // bipartite sidecar parts appear in bipartite answers
    let out = abfactor(&["bound", "--theorem", "1.4", "--n", "8", "--a", "1", "--b", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["case"], "1.4(ii)");
    let extremal = v["result"]["extremal"].as_array().unwrap();
    assert_eq!(extremal.len(), 2);
    assert!(extremal.iter().all(|e| e["parts"].is_array()));

    // exact quartic-root bounds carry their integer coefficients
    let out = abfactor(&["bound", "--theorem", "1.5", "--p", "4", "--q", "5", "--a", "2", "--b", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["bound"]["kind"], "quartic-root");
    assert_eq!(v["result"]["bound"]["c"], 17);
    assert_eq!(v["result"]["bound"]["d"], 12);
    let value = v["result"]["bound"]["value"].as_f64().unwrap();
    assert!((value - 4.0326278464705885).abs() < 1e-12);
}

#[test]
fn verify_passes_and_reports() {
    let out = abfactor(&["verify", "--target", "1.2", "--n", "6", "--a", "2", "--b", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["verdict"], "pass");
    assert_eq!(v["result"]["brute_extremal"].as_array().unwrap().len(), 1);
    // VerificationReport fields, stable key order
    let keys: Vec<&String> = v["result"].as_object().unwrap().keys().collect();
    let expected = [
        "brute_extremal",
        "brute_value",
        "counterexample",
        "formula_extremal",
        "formula_value",
        "params",
        "stats",
        "target",
        "verdict",
    ];
    assert_eq!(keys, expected.iter().collect::<Vec<_>>());
}

#[test]
fn flow_backend_via_parts() {
    let out = abfactor(&["construct", "--family", "complete-bipartite", "--params", "p=2,q=5"]);
    let code = String::from_utf8(out.stdout).unwrap().trim().to_string();
    let out =
        abfactor(&["decide", "--graph6", &code, "--a", "1", "--b", "2", "--parts", "2,5"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["backend"], "flow");
    assert_eq!(v["result"]["has_factor"], false);
    let out =
        abfactor(&["decide", "--graph6", &code, "--a", "1", "--b", "3", "--parts", "2,5"]);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["has_factor"], true);
}

#[test]
fn exit_codes() {
    // invalid input
    let out = abfactor(&["decide", "--graph6", "!!", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // a < 1
    let out = abfactor(&["decide", "--graph6", "Bw", "--a", "0", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // resource cap: full enumeration above the default cap
    let out = abfactor(&["verify", "--target", "1.2", "--n", "8", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(3));
    // parity-excluded parameters are invalid input
    let out = abfactor(&["verify", "--target", "1.1", "--n", "9", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_cap_env_var_is_honored() {
    // lowering the cap below the default makes n = 7 a resource error
    let out = Command::new(env!("CARGO_BIN_EXE_abfactor"))
        .args(["verify", "--target", "1.2", "--n", "7", "--a", "1", "--b", "2"])
        .env("ABFACTOR_ENUM_MAX_N", "6")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn batch_acceptance_csv() {
    let dir = std::env::temp_dir().join(format!("abfactor-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("acceptance.csv");
    let out = abfactor(&[
        "batch",
        "--suite",
        "acceptance",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "target,params,verdict,brute_value,formula_value,graphs_scanned,wall_ms,counterexample"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() > 800, "expected the full matrix, got {} rows", rows.len());
    assert!(rows.iter().all(|r| !r.contains(",fail,")), "no failures expected");
    assert!(rows.iter().any(|r| r.contains(",skip,")), "parity skips expected");
    // deterministic ordering: sorted by target then params
    let keys: Vec<(String, String)> = rows
        .iter()
        .map(|r| {
            let mut it = r.split(',');
            (it.next().unwrap().to_string(), it.next().unwrap().to_string())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    std::fs::remove_dir_all(&dir).ok();
}
