use std::fs;
use std::process::{Command, Output};

use sqg::exact::{lookup_sample, Sample};
use sqg::io::read_field_csv;

fn sqg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqg")).args(args).output().unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn eval_writes_closed_form_fields() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sqg(&[
        "eval",
        "--solution",
        "theta2",
        "--kappa",
        "0.1",
        "--alpha",
        "0.5",
        "--t-end",
        "1",
        "--grid",
        "64",
        "--output-dir",
        out,
        "--outputs",
        "csv,report",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", text(&o.stdout), text(&o.stderr));
    let (f, t) = read_field_csv(dir.path().join("theta2_exact_t1.csv")).unwrap();
    assert_eq!(t, 1.0);
    let Some(Sample::Exact(sol)) = lookup_sample("theta2", 0.1, 0.5) else {
        panic!()
    };
    for (i, j, x, y) in f.grid().nodes() {
        assert_eq!(f.at(i, j), sol.theta_at(x, y, 1.0));
    }
    let report = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(report.lines().skip(1).all(|l| l.contains(",true,")), "{report}");
}

#[test]
fn config_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(
        &cfg,
        "solution = theta1\nkappa = 0.01\nalpha = 0.3\nt_end = 1\ngrid = 32\ndt = 0.01\n",
    )
    .unwrap();
    let o = sqg(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--output-dir",
        dir.path().to_str().unwrap(),
        "--snapshots",
        "0.25,0.5,0.75",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", text(&o.stdout), text(&o.stderr));
    let report = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(report.contains("decay_rate_error,theta1"));
    assert!(report.contains("solver_relative_l2,theta1,0.5"));
}

#[test]
fn bad_config_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(
        &cfg,
        "solution = theta1\nkappa = 0.01\nalpha = 1.5\nt_end = 1\ngrid = 32\n",
    )
    .unwrap();
    let o = sqg(&["eval", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = text(&o.stderr);
    assert!(err.contains("line 3") && err.contains("alpha"), "{err}");
}

#[test]
fn unstable_run_exits_3_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = sqg(&[
        "simulate",
        "--solution",
        "con-1",
        "--kappa",
        "0.001",
        "--alpha",
        "0.4",
        "--dt",
        "0.5",
        "--t-end",
        "1",
        "--grid",
        "64",
        "--output-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let report = fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert!(
        report.contains("simulation,con-1") && report.contains("stability limit"),
        "{report}"
    );
}

#[test]
fn failed_expectation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = sqg(&[
        "simulate",
        "--solution",
        "theta1",
        "--kappa",
        "0.01",
        "--alpha",
        "0.3",
        "--dt",
        "0.01",
        "--t-end",
        "0.2",
        "--grid",
        "32",
        "--expect",
        "pattern-change",
        "--output-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(text(&o.stdout).contains("FAIL final_correlation"));
}

#[test]
fn render_csv_to_ppm() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = sqg(&[
        "eval",
        "--solution",
        "theta1",
        "--kappa",
        "0.1",
        "--alpha",
        "0.2",
        "--t-end",
        "0",
        "--grid",
        "16",
        "--output-dir",
        d,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = dir.path().join("theta1_exact_t0.csv");
    let ppm = dir.path().join("theta1.ppm");
    let o = sqg(&["render", csv.to_str().unwrap(), ppm.to_str().unwrap(), "--levels", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o.stderr));
    let bytes = fs::read(&ppm).unwrap();
    assert!(bytes.starts_with(b"P6\n16 16\n255\n"));
    assert_eq!(bytes.len(), "P6\n16 16\n255\n".len() + 16 * 16 * 3);

    fs::write(&csv, "# 16,16,0\n1,2\n").unwrap();
    assert_eq!(
        sqg(&["render", csv.to_str().unwrap(), ppm.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scenarios_in_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("small.cfg");
    fs::write(
        &cfg,
        "solution = theta3\nkappa = 0.1\nalpha = 0.5\nt_end = 1\ngrid = 32\noutputs = ppm, report\n",
    )
    .unwrap();
    let out = dir.path().join("out");
    let o = sqg(&[
        "scenario",
        cfg.to_str().unwrap(),
        "theta1-decay",
        "--jobs",
        "2",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}{}", text(&o.stdout), text(&o.stderr));
    assert!(out.join("small/theta3_exact_t1.ppm").exists());
    assert!(out.join("theta1-decay/report.csv").exists());

    let list = text(&sqg(&["scenario", "--list"]).stdout);
    for name in ["figure1", "constantin-negative"] {
        assert!(list.lines().any(|l| l == name), "{list}");
    }
    assert_eq!(sqg(&["scenario", "no-such-scenario"]).status.code(), Some(2));
}
