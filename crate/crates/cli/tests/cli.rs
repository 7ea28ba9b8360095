use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstar"))
        .args(args)
        .env_remove("RAYON_NUM_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn complex(v: &Value) -> (f64, f64) {
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap())
}

fn csv_rows(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn star_of_pauli_x_and_y() {
    let v = json(&qstar(&["star", "--a", "sigma_x", "--b", "sigma_y"]));
    let sym = &v["symbol"];
    assert_eq!(complex(&sym["a0"]), (0.0, 0.0));
    assert_eq!(complex(&sym["a"][0]), (0.0, 0.0));
    assert_eq!(complex(&sym["a"][1]), (0.0, 0.0));
    assert_eq!(complex(&sym["a"][2]), (0.0, 1.0));
    assert_eq!(v["metadata"]["command"], "star");
}

#[test]
fn symbol_evaluation() {
    let v = json(&qstar(&[
        "symbol", "--op", "sigma_z", "--theta", "0", "--phi", "0",
    ]));
    let (re, im) = complex(&v["value"]);
    assert!((re - 3f64.sqrt()).abs() < 1e-15 && im == 0.0);
}

#[test]
fn check_axioms_reports_five_deviations() {
    let v = json(&qstar(&["check-axioms", "--samples", "100", "--seed", "7"]));
    for name in [
        "bijection",
        "hermiticity",
        "standardization",
        "traciality",
        "covariance",
    ] {
        assert_eq!(v[name]["pass"], true, "{name}");
        assert!(v[name]["max_dev"].as_f64().unwrap() < 1e-11);
    }
    assert_eq!(v["metadata"]["rule"]["n_theta"], 8);
}

#[test]
fn failing_check_exits_one_and_names_axiom() {
    let out = qstar(&[
        "check-axioms",
        "--samples",
        "10",
        "--ntheta",
        "1",
        "--nphi",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("traciality"), "{stderr}");
}

#[test]
fn rabi_csv_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rabi.csv");
    let out = qstar(&[
        "rabi",
        "--gamma",
        "1",
        "--B",
        "1",
        "--axis",
        "x",
        "--tmax",
        "12.566",
        "--steps",
        "100",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&path);
    assert_eq!(
        header,
        [
            "t",
            "re_K_up",
            "im_K_up",
            "re_K_down",
            "im_K_down",
            "P_up",
            "P_down"
        ]
    );
    assert_eq!(rows.len(), 101);
    for r in rows {
        let t = r[0];
        assert!((r[6] - (t / 2.0).sin().powi(2)).abs() < 1e-12);
        assert!((r[5] + r[6] - 1.0).abs() < 1e-12);
        assert!((r[4] - (t / 2.0).sin()).abs() < 1e-12);
    }
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# qstar"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let out = qstar(&[
            "rabi",
            "--gamma",
            "2",
            "--B",
            "0.7",
            "--axis",
            "y",
            "--tmax",
            "5",
            "--steps",
            "50",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let first = qstar(&["check-axioms", "--seed", "3"]);
    let second = qstar(&["check-axioms", "--seed", "3"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn parse_error_names_file_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    fs::write(
        &path,
        r#"{"re": [[1, 0], [0, -1]], "im": [[0, 0], [0, "x"]]}"#,
    )
    .unwrap();
    let out = qstar(&[
        "propagate",
        "--h",
        path.to_str().unwrap(),
        "--psi0",
        "up",
        "--psif",
        "down",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("h.json") && stderr.contains("im[1][1]"),
        "{stderr}"
    );

    let state = dir.path().join("s.json");
    fs::write(
        &state,
        r#"{"amplitudes": [{"re": 1.0}, {"re": 0.0, "im": 0.0}]}"#,
    )
    .unwrap();
    let out = qstar(&[
        "propagate",
        "--h",
        "sigma_x",
        "--psi0",
        state.to_str().unwrap(),
        "--psif",
        "down",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("s.json") && stderr.contains("amplitudes[0]") && stderr.contains("im"),
        "{stderr}"
    );
}

#[test]
fn non_hermitian_hamiltonian_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    fs::write(&path, r#"{"re": [[0, 1], [0, 0]], "im": [[0, 0], [0, 0]]}"#).unwrap();
    let out = qstar(&[
        "propagate",
        "--h",
        path.to_str().unwrap(),
        "--psi0",
        "up",
        "--psif",
        "down",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Hermitian"));
}

#[test]
fn unknown_flag_is_usage_error() {
    assert_eq!(qstar(&["rabi", "--bogus"]).status.code(), Some(2));
}

#[test]
fn propagate_methods_agree_with_coefficient_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    fs::write(
        &path,
        r#"{"a0": {"re": 0.3, "im": 0.0}, "a": [{"re": -0.5, "im": 0.0}, {"re": 0.2, "im": 0.0}, {"re": 0.1, "im": 0.0}]}"#,
    )
    .unwrap();
    let h = path.to_str().unwrap();
    let values: Vec<(f64, f64)> = ["exact", "quadrature", "oracle"]
        .iter()
        .map(|m| {
            complex(
                &json(&qstar(&[
                    "propagate",
                    "--h",
                    h,
                    "--psi0",
                    "up",
                    "--psif",
                    "plus",
                    "--t",
                    "1.7",
                    "--method",
                    m,
                ]))["amplitude"],
            )
        })
        .collect();
    for (re, im) in &values[1..] {
        assert!((re - values[0].0).abs() < 1e-12 && (im - values[0].1).abs() < 1e-12);
    }
}

#[test]
fn starexp_methods_agree() {
    let closed = json(&qstar(&["starexp", "--h", "sigma_y", "--t", "0.8"]));
    let series = json(&qstar(&[
        "starexp", "--h", "sigma_y", "--t", "0.8", "--method", "series",
    ]));
    let (a, b) = (
        complex(&closed["symbol"]["a0"]),
        complex(&series["symbol"]["a0"]),
    );
    assert!((a.0 - 0.8f64.cos()).abs() < 1e-15 && (a.0 - b.0).abs() < 1e-12);
    assert!(series["series"]["terms_used"].as_u64().unwrap() > 5);
}

#[test]
fn path_integral_sweep_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conv.csv");
    let out = qstar(&[
        "path-integral",
        "--h",
        "sigma_x",
        "--psi0",
        "up",
        "--psif",
        "down",
        "--t",
        "1",
        "--ordering",
        "left",
        "--slice-sweep",
        "8,16,32",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&path);
    assert_eq!(header, ["N", "abs_error", "re_K", "im_K"]);
    assert_eq!(
        rows.iter().map(|r| r[0]).collect::<Vec<_>>(),
        [8.0, 16.0, 32.0]
    );
    assert!(rows.windows(2).all(|w| w[1][1] < w[0][1]));
}

#[test]
fn path_integral_warns_on_coarse_rule() {
    let v = json(&qstar(&[
        "path-integral",
        "--h",
        "sigma_z",
        "--psi0",
        "up",
        "--psif",
        "up",
        "--t",
        "1",
        "--ntheta",
        "1",
        "--nphi",
        "1",
    ]));
    assert!(v["warning"].is_string());
    let fine = json(&qstar(&[
        "path-integral",
        "--h",
        "sigma_z",
        "--psi0",
        "up",
        "--psif",
        "up",
        "--t",
        "1",
    ]));
    assert!(fine["warning"].is_null());
    assert!(fine["resolution_deviation"].as_f64().unwrap() < 1e-12);
}

#[test]
fn kks_check_passes() {
    let v = json(&qstar(&["kks-check", "--samples", "100", "--seed", "5"]));
    assert_eq!(v["rotation_invariance"]["pass"], true);
    assert_eq!(v["coordinate_frame"]["pass"], true);
}

#[test]
fn help_documents_commands() {
    let out = qstar(&["--help"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for cmd in [
        "symbol",
        "star",
        "starexp",
        "check-axioms",
        "propagate",
        "rabi",
        "path-integral",
        "kks-check",
    ] {
        assert!(text.contains(cmd), "{cmd}");
    }
    assert!(text.contains("RAYON_NUM_THREADS"));
}
