use std::path::Path;
use std::process::{Command, Output};

fn disquant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disquant"))
        .args(args)
        .env("DIRAC_DISQUANT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn csv_rows(out: &Output) -> Vec<Vec<f64>> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn verify_all_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for (i, threads) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let out = Command::new(env!("CARGO_BIN_EXE_disquant"))
            .args(["verify", "all", "--seed", "42", "--format", "json", "--out"])
            .arg(&path)
            .env("DIRAC_DISQUANT_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        bytes.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
    let v: serde_json::Value = serde_json::from_slice(&bytes[0]).unwrap();
    assert_eq!(v["schema"], "dirac-disquant/1");
    assert_eq!(v["failed"], 0);
}

#[test]
fn verify_suites_pass_and_report_csv() {
    for suite in ["algebra", "appendixB", "consistency"] {
        let out = disquant(&["verify", suite, "--seed", "42"]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("suite,id,reference,residual,tolerance,passed,seed\n"));
        assert!(!text.contains('\r'));
        assert!(text.lines().skip(1).all(|l| l.contains(",true,")));
    }
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = disquant(&["verify", "consistency", "--tol-scale", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(disquant(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(disquant(&["rotator", "--p0", "1.5"]).status.code(), Some(2));
    assert_eq!(disquant(&["helix", "--b", "-1"]).status.code(), Some(2));
    let out = disquant(&["rigidity", "--a-max", "0.25"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0.25"));
    assert_eq!(disquant(&["identify", "--direction", "rr-to-dcr", "--v", "1.0"]).status.code(), Some(2));
}

#[test]
fn helix_circle_radius() {
    let out = disquant(&["helix", "--b", "1", "--tmax", "20", "--dt", "0.05"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 401);
    for r in rows {
        assert!(((r[1] * r[1] + r[2] * r[2]).sqrt() - 3f64.sqrt()).abs() < 1e-10);
        assert_eq!((r[3], r[6]), (0.0, 1.0));
    }
    let out = disquant(&["helix", "--b", "0", "--tmax", "1", "--dt", "0.5"]);
    assert!(csv_rows(&out).iter().all(|r| r[1] == 0.0 && r[2] == 0.0));
}

#[test]
fn helix_json_metadata_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let out = disquant(&["helix", "--b", "1", "--tmax", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(&path);
    assert_eq!(v["schema"], "dirac-disquant/1");
    let sol: disquant::particle::HelixSolution = serde_json::from_value(v["solution"].clone()).unwrap();
    assert_eq!(sol, disquant::particle::helix_solution(1.0, 0.0, &Default::default()).unwrap());
    assert_eq!(v["samples"].as_array().unwrap().len(), 11);
}

#[test]
fn rotator_modes() {
    let p0 = format!("{}", 2.0 * 2f64.sqrt());
    let out = disquant(&["rotator", "--p0", &p0, "--mode", "integrate"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 2001);
    for r in &rows {
        assert!(r[5..].iter().all(|v| v.abs() < 1e-8));
        assert!(((r[1] - r[3]).hypot(r[2] - r[4]) - 2.0).abs() < 1e-8);
    }
    let out = disquant(&["rotator", "--p0", "2", "--mode", "closed", "--steps", "10"]);
    assert_eq!(out.status.code(), Some(0));
    for r in csv_rows(&out) {
        assert_eq!((r[1], r[2], r[3], r[4]), (1.0, 0.0, -1.0, 0.0));
    }
}

#[test]
fn rigidity_curve() {
    let out = disquant(&["rigidity", "--a-min", "0", "--a-max", "0.15", "--n", "31"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows[0][1], 0.0);
    assert!((rows[30][1] - 0.25).abs() < 1e-12);
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]));
    assert!(rows.iter().all(|r| r[2] == 0.25));
}

#[test]
fn identify_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    let out = disquant(&[
        "identify", "--direction", "rr-to-dcr", "--v", "0", "--m0", "1", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = read_json(&path);
    assert_eq!(v["dcr"]["m"], 2.0);
    assert_eq!(v["dcr"]["m_dcr"], 2.0);
    assert_eq!(v["dcr"]["a"], 0.0);

    let out = disquant(&["identify", "--direction", "rr-to-dcr", "--v", "0.5", "--m0", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let get = |k: &str| -> f64 {
        text.lines().find_map(|l| l.strip_prefix(&format!("{k},"))).unwrap().parse().unwrap()
    };
    assert!((get("m") - 8.0 / 3.0).abs() < 1e-12);
    assert!((get("omega_dcr") - 4.0).abs() < 1e-12);
    assert!((get("a") - 0.125).abs() < 1e-12);
    assert!(get("residual") < 1e-12);

    let out = disquant(&["identify", "--direction", "dcr-to-rr", "--zeta", "0", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
}
